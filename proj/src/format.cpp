#include "tqnet/format.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tqnet {

std::string format_value(Value v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  if (v == std::trunc(v) && std::fabs(v) < 1e15) {
    if (v == 0.0) return "0";
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string to_string(const TemporalQuantity& q) {
  std::string out = "[";
  bool first = true;
  for (const Interval& iv : q) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(iv.start) + ", " + std::to_string(iv.finish) +
           ", " + format_value(iv.value) + ")";
  }
  out += "]";
  return out;
}

std::ostream& operator<<(std::ostream& os, const TemporalQuantity& q) {
  return os << to_string(q);
}

void write_csv(std::ostream& os, const TemporalQuantity& q, CsvLayout layout) {
  if (layout == CsvLayout::Triples) {
    os << "start,finish,value\n";
    for (const Interval& iv : q) {
      os << iv.start << ',' << iv.finish << ',' << format_value(iv.value)
         << '\n';
    }
    return;
  }
  os << "t,value\n";
  for (const Interval& iv : q) {
    const std::string v = format_value(iv.value);
    for (Time t = iv.start; t < iv.finish; ++t) os << t << ',' << v << '\n';
  }
}

namespace {

template <class T>
T parse_field(std::string_view field, std::size_t line) {
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
    field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                            field.back() == '\r'))
    field.remove_suffix(1);
  T out{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv line " + std::to_string(line) +
                             ": cannot parse '" + std::string(field) + "'");
  }
  return out;
}

}  // namespace

TemporalQuantity read_csv_triples(std::istream& is) {
  std::vector<Interval> intervals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("start", 0) == 0) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw std::runtime_error("csv line " + std::to_string(lineno) +
                               ": expected start,finish,value");
    }
    std::string_view sv(line);
    intervals.push_back({parse_field<Time>(sv.substr(0, c1), lineno),
                         parse_field<Time>(sv.substr(c1 + 1, c2 - c1 - 1), lineno),
                         parse_field<Value>(sv.substr(c2 + 1), lineno)});
  }
  try {
    return TemporalQuantity(std::move(intervals));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("csv: ") + e.what());
  }
}

}  // namespace tqnet
