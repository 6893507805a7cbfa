#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqnet/network.hpp"

namespace tqnet::pajek {

/// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct StaticLink {
  NodeId tail;
  NodeId head;
  double weight = 1.0;
  bool directed = true;  // false for lines of an *edges section
  friend bool operator==(const StaticLink&, const StaticLink&) = default;
};

/// A Pajek network as read from disk. Two-mode files list the
/// `rows` mode-1 vertices first.
struct StaticNetwork {
  std::vector<std::string> labels;  // index = id - 1
  std::size_t rows = 0;             // mode-1 count; 0 for one-mode
  std::vector<StaticLink> links;

  [[nodiscard]] bool two_mode() const noexcept { return rows != 0; }
  friend bool operator==(const StaticNetwork&, const StaticNetwork&) = default;
};

/// Per-vertex integer years aligned with a network's vertex order.
struct TimePartition {
  std::vector<Time> years;
  friend bool operator==(const TimePartition&, const TimePartition&) = default;
};

StaticNetwork parse_net(std::istream& in);
StaticNetwork read_net(const std::filesystem::path& path);
TimePartition parse_clu(std::istream& in);
TimePartition read_clu(const std::filesystem::path& path);

/// Always-quoted labels, `*arcs` then `*edges`, weights only when not 1.
void write_net(std::ostream& out, const StaticNetwork& net);
void write_clu(std::ostream& out, const TimePartition& part);

enum class Temporalization { Instantaneous, Cumulative };

struct TemporalizeOptions {
  Temporalization mode = Temporalization::Instantaneous;
  /// Overrides of the horizon derived from the valid (non-zero) years.
  std::optional<Time> first;
  std::optional<Time> last;
};

struct TemporalizeReport {
  TemporalNetwork network;
  std::size_t input_links = 0;
  std::size_t skipped_links = 0;
  /// First few human-readable skip reasons.
  std::vector<std::string> warnings;
};

/// Affiliation network with event dates: link (e,p) of weight w becomes
/// [(d(e), d(e)+1, w)] or [(d(e), last+1, w)]. Links whose event year is 0 or
/// outside the horizon are skipped and counted. The partition covers either
/// the mode-1 vertices or all vertices.
TemporalizeReport temporalize_two_mode(const StaticNetwork& net,
                                       const TimePartition& part,
                                       const TemporalizeOptions& options = {});

/// One-mode network (citations) dated by the tail vertex's year.
TemporalizeReport temporalize_one_mode(const StaticNetwork& net,
                                       const TimePartition& part,
                                       const TemporalizeOptions& options = {});

}  // namespace tqnet::pajek
