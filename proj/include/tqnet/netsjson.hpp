#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tqnet/network.hpp"

namespace tqnet::netsjson {

inline constexpr std::string_view kFormat = "tqnet-netsjson/1";

/// Schema violation; `path()` is a JSON pointer to the first offence.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Byte-deterministic document: one node or link per line, nodes by id,
/// links by (tail, head), numbers in shortest round-trip form.
///
/// {
///  "format": "tqnet-netsjson/1",
///  "info": {"kind", "directed", "twoMode", "time": {"first", "last"},
///           "nodes", "links", "modes": [n1, n2]},
///  "nodes": [{"id", "lab", "mode"}, ...],
///  "links": [{"tail", "head", "tq": [[s, f, v], ...]}, ...]
/// }
void write(std::ostream& out, const TemporalNetwork& net);
void save(const std::filesystem::path& path, const TemporalNetwork& net);
std::string to_string(const TemporalNetwork& net);

/// Rebuilds a network, checking the schema and every network invariant,
/// including the declared kind.
TemporalNetwork read(std::istream& in);
TemporalNetwork load(const std::filesystem::path& path);
TemporalNetwork from_string(const std::string& text);

/// A bare quantity document `[[s, f, v], ...]`.
TemporalQuantity parse_quantity(const std::string& text);
std::string quantity_to_json(const TemporalQuantity& q);

}  // namespace tqnet::netsjson
