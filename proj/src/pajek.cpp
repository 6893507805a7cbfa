#include "tqnet/pajek.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "tqnet/format.hpp"

namespace tqnet::pajek {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  std::size_t n = 0;
  while (n < rest.size() && !std::isspace(static_cast<unsigned char>(rest[n]))) ++n;
  std::string_view tok = rest.substr(0, n);
  rest.remove_prefix(n);
  return tok;
}

template <class T>
std::optional<T> to_number(std::string_view tok) {
  T out{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return out;
}

template <class T>
T require_number(std::string_view tok, std::size_t line, const char* what) {
  if (tok.empty()) throw ParseError(line, std::string("missing ") + what);
  auto v = to_number<T>(tok);
  if (!v) {
    throw ParseError(line, std::string("malformed ") + what + " '" +
                               std::string(tok) + "'");
  }
  return *v;
}

enum class Section { None, Vertices, Arcs, Edges };

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line, trimmed.
  bool next(std::string_view& out) {
    while (std::getline(in_, buf_)) {
      ++line_;
      std::string_view s = trim(buf_);
      if (s.empty() || s.front() == '%') continue;
      out = s;
      return true;
    }
    return false;
  }
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buf_;
  std::size_t line_ = 0;
};

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

StaticNetwork parse_net(std::istream& in) {
  StaticNetwork net;
  std::vector<char> defined;
  Section section = Section::None;
  bool have_vertices = false;
  LineReader reader(in);
  std::string_view line;

  while (reader.next(line)) {
    const std::size_t lineno = reader.line();
    if (line.front() == '*') {
      std::string_view rest = line;
      const std::string keyword = lower(next_token(rest));
      if (keyword == "*vertices") {
        if (have_vertices) throw ParseError(lineno, "second *vertices header");
        const auto n = require_number<std::size_t>(next_token(rest), lineno,
                                                   "vertex count");
        const auto rows_tok = next_token(rest);
        if (!rows_tok.empty()) {
          net.rows = require_number<std::size_t>(rows_tok, lineno,
                                                 "mode-1 vertex count");
          if (net.rows == 0 || net.rows >= n) {
            throw ParseError(lineno, "mode-1 count must lie in [1, " +
                                         std::to_string(n) + ")");
          }
        }
        if (!trim(rest).empty()) throw ParseError(lineno, "malformed *vertices header");
        net.labels.resize(n);
        defined.assign(n, 0);
        have_vertices = true;
        section = Section::Vertices;
      } else if (keyword == "*arcs" || keyword == "*edges") {
        if (!have_vertices) throw ParseError(lineno, keyword + " before *vertices");
        section = keyword == "*arcs" ? Section::Arcs : Section::Edges;
      } else if (keyword == "*network") {
        section = Section::None;
      } else {
        throw ParseError(lineno, "unsupported section " + keyword);
      }
      continue;
    }

    std::string_view rest = line;
    switch (section) {
      case Section::None:
        throw ParseError(lineno, "data line outside of a section");
      case Section::Vertices: {
        const auto id = require_number<std::size_t>(next_token(rest), lineno,
                                                    "vertex id");
        if (id < 1 || id > net.labels.size()) {
          throw ParseError(lineno, "vertex id " + std::to_string(id) +
                                       " out of range");
        }
        if (defined[id - 1]) {
          throw ParseError(lineno, "vertex " + std::to_string(id) + " redefined");
        }
        rest = trim(rest);
        std::string label;
        if (!rest.empty() && rest.front() == '"') {
          const auto close = rest.find('"', 1);
          if (close == std::string_view::npos) {
            throw ParseError(lineno, "unterminated quoted label");
          }
          label = std::string(rest.substr(1, close - 1));
        } else {
          label = std::string(next_token(rest));
          if (label.empty()) label = std::to_string(id);
        }
        net.labels[id - 1] = std::move(label);
        defined[id - 1] = 1;
        break;
      }
      case Section::Arcs:
      case Section::Edges: {
        const auto n = net.labels.size();
        auto tail = require_number<std::size_t>(next_token(rest), lineno, "tail");
        auto head = require_number<std::size_t>(next_token(rest), lineno, "head");
        for (std::size_t v : {tail, head}) {
          if (v < 1 || v > n) {
            throw ParseError(lineno, "vertex index " + std::to_string(v) +
                                         " out of range 1.." + std::to_string(n));
          }
        }
        const auto weight_tok = next_token(rest);
        const double weight =
            weight_tok.empty() ? 1.0
                               : require_number<double>(weight_tok, lineno, "weight");
        const bool directed = section == Section::Arcs;
        if (net.two_mode()) {
          const bool tail_row = tail <= net.rows;
          const bool head_row = head <= net.rows;
          if (tail_row == head_row) {
            throw ParseError(lineno, "two-mode link must join a mode-1 and a "
                                     "mode-2 vertex");
          }
          if (!tail_row) {
            if (directed) {
              throw ParseError(lineno, "two-mode arc must start at a mode-1 vertex");
            }
            std::swap(tail, head);
          }
        }
        net.links.push_back({static_cast<NodeId>(tail), static_cast<NodeId>(head),
                             weight, directed});
        break;
      }
    }
  }
  if (!have_vertices) throw ParseError(reader.line(), "missing *vertices header");
  for (std::size_t i = 0; i < net.labels.size(); ++i) {
    if (!defined[i]) net.labels[i] = std::to_string(i + 1);
  }
  return net;
}

StaticNetwork read_net(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_net(in);
}

TimePartition parse_clu(std::istream& in) {
  LineReader reader(in);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(reader.line(), "empty partition file");
  std::string_view rest = line;
  if (lower(next_token(rest)) != "*vertices") {
    throw ParseError(reader.line(), "expected *vertices header");
  }
  const auto n =
      require_number<std::size_t>(next_token(rest), reader.line(), "vertex count");
  TimePartition part;
  part.years.reserve(n);
  while (reader.next(line)) {
    if (part.years.size() == n) {
      throw ParseError(reader.line(), "more than " + std::to_string(n) + " values");
    }
    part.years.push_back(require_number<Time>(line, reader.line(), "partition value"));
  }
  if (part.years.size() != n) {
    throw ParseError(reader.line(), "expected " + std::to_string(n) +
                                        " values, found " +
                                        std::to_string(part.years.size()));
  }
  return part;
}

TimePartition read_clu(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_clu(in);
}

void write_net(std::ostream& out, const StaticNetwork& net) {
  out << "*vertices " << net.labels.size();
  if (net.two_mode()) out << ' ' << net.rows;
  out << '\n';
  for (std::size_t i = 0; i < net.labels.size(); ++i) {
    if (net.labels[i].find('"') != std::string::npos) {
      throw std::invalid_argument("write_net: label contains a double quote: " +
                                  net.labels[i]);
    }
    out << i + 1 << " \"" << net.labels[i] << "\"\n";
  }
  for (const bool arcs : {true, false}) {
    bool header = false;
    for (const StaticLink& l : net.links) {
      if (l.directed != arcs) continue;
      if (!header) {
        out << (arcs ? "*arcs\n" : "*edges\n");
        header = true;
      }
      out << l.tail << ' ' << l.head;
      if (l.weight != 1.0) out << ' ' << format_value(l.weight);
      out << '\n';
    }
  }
}

void write_clu(std::ostream& out, const TimePartition& part) {
  out << "*vertices " << part.years.size() << '\n';
  for (Time y : part.years) out << y << '\n';
}

namespace {

constexpr std::size_t kMaxWarnings = 20;

TimeHorizon derive_horizon(const std::vector<Time>& years, std::size_t count,
                           const TemporalizeOptions& options) {
  std::optional<Time> lo;
  std::optional<Time> hi;
  for (std::size_t i = 0; i < count; ++i) {
    if (years[i] == 0) continue;
    lo = lo ? std::min(*lo, years[i]) : years[i];
    hi = hi ? std::max(*hi, years[i]) : years[i];
  }
  const auto first = options.first ? options.first : lo;
  const auto last = options.last ? options.last : hi;
  if (!first || !last) {
    throw std::invalid_argument(
        "temporalize: partition has no valid (non-zero) years and no horizon "
        "override");
  }
  return TimeHorizon(*first, *last);
}

TemporalQuantity dated(Time year, double weight, const TimeHorizon& horizon,
                       Temporalization mode) {
  const Time finish = mode == Temporalization::Instantaneous ? year + 1
                                                             : horizon.end();
  return TemporalQuantity({{year, finish, weight}});
}

NetworkKind kind_of(Temporalization mode) {
  return mode == Temporalization::Instantaneous ? NetworkKind::Instantaneous
                                                : NetworkKind::Cumulative;
}

void note_skip(TemporalizeReport& report, const StaticNetwork& net,
               const StaticLink& l, Time year) {
  ++report.skipped_links;
  if (report.warnings.size() < kMaxWarnings) {
    report.warnings.push_back("skipped link (" + net.labels[l.tail - 1] + ", " +
                              net.labels[l.head - 1] + "): year " +
                              std::to_string(year) + " outside horizon");
  }
}

}  // namespace

TemporalizeReport temporalize_two_mode(const StaticNetwork& net,
                                       const TimePartition& part,
                                       const TemporalizeOptions& options) {
  if (!net.two_mode()) {
    throw std::invalid_argument("temporalize_two_mode: network is one-mode");
  }
  if (part.years.size() != net.rows && part.years.size() != net.labels.size()) {
    throw std::invalid_argument(
        "temporalize_two_mode: partition has " + std::to_string(part.years.size()) +
        " values, expected " + std::to_string(net.rows) + " (mode-1) or " +
        std::to_string(net.labels.size()) + " (all vertices)");
  }
  const TimeHorizon horizon = derive_horizon(part.years, net.rows, options);

  NodeTable nodes;
  for (std::size_t i = 0; i < net.labels.size(); ++i) {
    nodes.add(net.labels[i], i < net.rows ? 1 : 2);
  }
  NetworkBuilder builder(std::move(nodes), horizon,
                         NetworkShape{true, true, kind_of(options.mode)});
  TemporalizeReport report;
  report.input_links = net.links.size();
  for (const StaticLink& l : net.links) {
    const Time year = part.years[l.tail - 1];
    if (year == 0 || !horizon.contains(year)) {
      note_skip(report, net, l, year);
      continue;
    }
    builder.add(l.tail, l.head, dated(year, l.weight, horizon, options.mode));
  }
  report.network = std::move(builder).build();
  return report;
}

TemporalizeReport temporalize_one_mode(const StaticNetwork& net,
                                       const TimePartition& part,
                                       const TemporalizeOptions& options) {
  if (net.two_mode()) {
    throw std::invalid_argument("temporalize_one_mode: network is two-mode");
  }
  if (part.years.size() != net.labels.size()) {
    throw std::invalid_argument(
        "temporalize_one_mode: partition has " + std::to_string(part.years.size()) +
        " values, network has " + std::to_string(net.labels.size()) + " vertices");
  }
  const TimeHorizon horizon =
      derive_horizon(part.years, part.years.size(), options);
  const bool directed =
      net.links.empty() ||
      std::any_of(net.links.begin(), net.links.end(),
                  [](const StaticLink& l) { return l.directed; });

  NodeTable nodes;
  for (const auto& label : net.labels) nodes.add(label, 1);
  NetworkBuilder builder(std::move(nodes), horizon,
                         NetworkShape{directed, false, kind_of(options.mode)});
  TemporalizeReport report;
  report.input_links = net.links.size();
  for (const StaticLink& l : net.links) {
    const Time year = part.years[l.tail - 1];
    if (year == 0 || !horizon.contains(year)) {
      note_skip(report, net, l, year);
      continue;
    }
    auto q = dated(year, l.weight, horizon, options.mode);
    if (directed && !l.directed && l.tail != l.head) {
      builder.add(l.head, l.tail, q);
    }
    builder.add(l.tail, l.head, std::move(q));
  }
  report.network = std::move(builder).build();
  return report;
}

}  // namespace tqnet::pajek
