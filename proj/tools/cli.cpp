#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tqnet/algebra.hpp"
#include "tqnet/chart.hpp"
#include "tqnet/format.hpp"
#include "tqnet/netsjson.hpp"
#include "tqnet/pajek.hpp"

namespace tqnet::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return std::string((std::istreambuf_iterator<char>(stdin_stream)),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CommandError("cannot open " + path);
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}

// Writes through `body` to a file, or to `out` when path is "-".
template <class Body>
void emit(const std::string& path, std::ostream& out, Body body) {
  if (path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CommandError("cannot write " + path);
  body(f);
  if (!f) throw CommandError("write failed for " + path);
}

TemporalNetwork load_network(const std::string& path, std::istream& in) {
  return netsjson::from_string(slurp(path, in));
}

std::optional<Time> env_year(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw CommandError(std::string("environment variable ") + name +
                       " is not a year: " + v);
  }
}

void print_elapsed(std::ostream& err, const char* what, Clock::time_point t0) {
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  err << what << " in " << std::fixed << std::setprecision(3) << secs << " s\n";
  err.unsetf(std::ios::floatfield);
}

NodeId lookup(const TemporalNetwork& net, const std::string& label, int mode) {
  try {
    return index_by_label(net, mode).at(label);
  } catch (const LabelNotFound&) {
    throw CommandError("unknown node label '" + label + "'");
  }
}

// Where to pull a single quantity from.
struct QuantitySource {
  std::string path;
  std::string node;  // in-sum of this node in a network file
  std::string link;  // "TAIL:HEAD" labels in a network file
  int mode = 0;
};

void add_source_options(CLI::App* cmd, QuantitySource& src) {
  cmd->add_option("source", src.path,
                  "Quantity file: CSV triples, JSON [[s,f,v],...], or a "
                  "netsJSON network with --node/--link ('-' = stdin)")
      ->required();
  cmd->add_option("--node", src.node, "Use the in-sum of this node");
  cmd->add_option("--link", src.link, "Use the link TAIL:HEAD (labels)");
  cmd->add_option("--node-mode", src.mode,
                  "Mode to search labels in (0 = any, 1, 2)");
}

TemporalQuantity resolve(const QuantitySource& src, std::istream& in) {
  const std::string text = slurp(src.path, in);
  const auto pos = text.find_first_not_of(" \t\r\n");
  const char lead = pos == std::string::npos ? '\0' : text[pos];
  if (lead == '{') {
    const TemporalNetwork net = netsjson::from_string(text);
    if (!src.node.empty() == !src.link.empty()) {
      throw CommandError("network source needs exactly one of --node, --link");
    }
    if (!src.node.empty()) {
      const int mode = src.mode != 0 ? src.mode : (net.two_mode() ? 2 : 0);
      return in_sum(net, lookup(net, src.node, mode));
    }
    const auto colon = src.link.find(':');
    if (colon == std::string::npos) throw CommandError("--link expects TAIL:HEAD");
    const NodeId tail =
        lookup(net, src.link.substr(0, colon), net.two_mode() ? 1 : 0);
    const NodeId head =
        lookup(net, src.link.substr(colon + 1), net.two_mode() ? 2 : 0);
    const TemporalQuantity* q = net.find(tail, head);
    return q != nullptr ? *q : TemporalQuantity();
  }
  if (!src.node.empty() || !src.link.empty()) {
    throw CommandError("--node/--link only apply to netsJSON network sources");
  }
  if (lead == '[') return netsjson::parse_quantity(text);
  std::istringstream is(text);
  return read_csv_triples(is);
}

void print_quantity_report(std::ostream& out, const TemporalQuantity& q) {
  out << to_string(q) << '\n';
  if (auto s = summarize(q)) {
    out << "summary: (" << s->min_time << ", " << s->max_time << ", "
        << format_value(s->min_value) << ", " << format_value(s->max_value)
        << ")\n";
  } else {
    out << "summary: empty\n";
  }
  out << "total: " << format_value(total(q)) << '\n';
}

std::vector<Time> parse_breaks(const std::string& text) {
  std::vector<Time> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CommandError("--breaks: not an integer: '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"tqnet: temporal quantities and temporal bibliographic networks",
               "tqnet"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // convert -------------------------------------------------------------
  struct {
    std::string net, clu, output, mode = "instant";
    bool one_mode = false, quiet = false;
    std::optional<Time> first, last;
  } convert;
  auto* c_convert = app.add_subcommand(
      "convert", "Temporalize a Pajek .net with a year .clu into netsJSON");
  c_convert->add_option("net", convert.net, "Pajek network")->required();
  c_convert->add_option("clu", convert.clu, "Pajek year partition")->required();
  c_convert->add_option("-o,--output", convert.output, "netsJSON output ('-' = stdout)")
      ->required();
  c_convert->add_option("--mode", convert.mode, "instant | cumulative")
      ->check(CLI::IsMember({"instant", "cumulative"}));
  c_convert->add_flag("--one-mode", convert.one_mode,
                      "Input is a one-mode network (citations)");
  c_convert->add_option("--first", convert.first, "Override horizon start year");
  c_convert->add_option("--last", convert.last,
                        "Override horizon end year (default: $TQNET_LAST or the "
                        "largest valid year)");
  c_convert->add_flag("--quiet", convert.quiet, "Do not list skipped links");

  // insum / outsum --------------------------------------------------------
  struct {
    std::string net, node, csv;
    int mode = 0;
    std::optional<double> cut_gt, cut_ge;
    bool pad = false, instants = false;
  } sums;
  auto add_sum = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("net", sums.net, "netsJSON network ('-' = stdin)")->required();
    cmd->add_option("--node", sums.node, "Node label")->required();
    cmd->add_option("--node-mode", sums.mode, "Mode to search labels in (0 = default)");
    auto* gt = cmd->add_option("--cut-gt", sums.cut_gt, "Keep values > X");
    auto* ge = cmd->add_option("--cut-ge", sums.cut_ge, "Keep values >= X");
    gt->excludes(ge);
    cmd->add_flag("--pad", sums.pad, "Fill undefined years of the horizon with 0");
    cmd->add_option("--csv", sums.csv, "Also write the quantity as CSV");
    cmd->add_flag("--instants", sums.instants, "CSV with one row per year");
    return cmd;
  };
  auto* c_insum = add_sum("insum", "Temporal in-sum of a node");
  auto* c_outsum = add_sum("outsum", "Temporal out-sum of a node");

  // multiply ------------------------------------------------------------
  struct {
    std::vector<std::string> inputs;
    std::string output;
    bool transpose_a = false, two2one = false;
    unsigned threads = 1;
  } mult;
  auto* c_mult = app.add_subcommand(
      "multiply", "Product A*B or A*M*B of netsJSON networks");
  c_mult->add_option("inputs", mult.inputs, "A B [C] (or a single A with --two2one-cols)")
      ->required()
      ->expected(1, 3);
  c_mult->add_option("-o,--output", mult.output, "netsJSON output ('-' = stdout)")
      ->required();
  c_mult->add_flag("--transpose-a", mult.transpose_a, "Use A^T as the left factor");
  c_mult->add_flag("--two2one-cols", mult.two2one,
                   "Co-occurrence network A^T*A on A's column mode");
  c_mult->add_option("--threads", mult.threads, "Worker threads (0 = all cores)");

  // derive --------------------------------------------------------------
  struct {
    std::string net, op, output;
  } derive;
  auto* c_derive = app.add_subcommand("derive", "Structural transform of a network");
  c_derive->add_option("net", derive.net, "netsJSON network")->required();
  c_derive->add_option("--op", derive.op, "transpose | del-loops | normalize | one2two")
      ->required()
      ->check(CLI::IsMember({"transpose", "del-loops", "normalize", "one2two"}));
  c_derive->add_option("-o,--output", derive.output, "netsJSON output")->required();

  // top -----------------------------------------------------------------
  struct {
    std::string net;
    bool links = false, loops = false, drop_loops = false;
    double thresh = 0;
  } top;
  auto* c_top = app.add_subcommand("top", "Rank links or loops by total");
  c_top->add_option("net", top.net, "netsJSON network")->required();
  auto* f_links = c_top->add_flag("--links", top.links, "Rank non-loop links");
  auto* f_loops = c_top->add_flag("--loops", top.loops, "Rank loops");
  f_links->excludes(f_loops);
  c_top->add_option("--thresh", top.thresh, "Minimum total")->required();
  c_top->add_flag("--drop-loops", top.drop_loops, "Remove loops before ranking");

  // recode --------------------------------------------------------------
  QuantitySource recode_src;
  std::string breaks;
  auto* c_recode = app.add_subcommand("recode", "Pool a quantity into time bands");
  add_source_options(c_recode, recode_src);
  c_recode->add_option("--breaks", breaks, "Ascending band boundaries p1,p2,...")
      ->required();

  // chart ---------------------------------------------------------------
  QuantitySource chart_src;
  ChartOptions chart_opts;
  std::string svg_out, csv_out;
  auto* c_chart = app.add_subcommand("chart", "SVG bar chart or CSV of a quantity");
  add_source_options(c_chart, chart_src);
  auto* o_svg = c_chart->add_option("--svg", svg_out, "SVG output");
  auto* o_csv = c_chart->add_option("--csv", csv_out, "Per-year CSV output");
  o_svg->excludes(o_csv);
  c_chart->add_option("--tmin", chart_opts.tmin, "First year shown");
  c_chart->add_option("--tmax", chart_opts.tmax, "End of the time axis (exclusive)");
  c_chart->add_option("--tqmax", chart_opts.tqmax, "Value at the top of the axis");
  c_chart->add_option("--title", chart_opts.title, "Chart title");
  c_chart->add_option("--fill", chart_opts.fill, "Bar colour");
  c_chart->add_option("--width", chart_opts.width, "Width in pixels");
  c_chart->add_option("--height", chart_opts.height, "Height in pixels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Streams io{in, out, err};
  try {
    if (c_convert->parsed()) {
      const auto t0 = Clock::now();
      pajek::TemporalizeOptions opts;
      opts.mode = convert.mode == "instant" ? pajek::Temporalization::Instantaneous
                                            : pajek::Temporalization::Cumulative;
      opts.first = convert.first ? convert.first : env_year("TQNET_FIRST");
      opts.last = convert.last ? convert.last : env_year("TQNET_LAST");
      std::istringstream net_text(slurp(convert.net, io.in));
      std::istringstream clu_text(slurp(convert.clu, io.in));
      const auto net = pajek::parse_net(net_text);
      const auto clu = pajek::parse_clu(clu_text);
      const auto report = convert.one_mode
                              ? pajek::temporalize_one_mode(net, clu, opts)
                              : pajek::temporalize_two_mode(net, clu, opts);
      emit(convert.output, io.out,
           [&](std::ostream& os) { netsjson::write(os, report.network); });
      const auto& tn = report.network;
      std::ostream& summary = convert.output == "-" ? io.err : io.out;
      summary << "nodes: " << tn.nodes().count(1);
      if (tn.two_mode()) summary << " + " << tn.nodes().count(2);
      summary << ", links: " << tn.links().size() << ", kind: "
              << to_string(tn.kind()) << ", horizon: [" << tn.horizon().first
              << ", " << tn.horizon().last << "], skipped: "
              << report.skipped_links << '\n';
      if (!convert.quiet) {
        for (const auto& w : report.warnings) io.err << "warning: " << w << '\n';
        if (report.skipped_links > report.warnings.size()) {
          io.err << "warning: " << report.skipped_links - report.warnings.size()
                 << " more links skipped\n";
        }
      }
      print_elapsed(io.err, "converted", t0);
    } else if (c_insum->parsed() || c_outsum->parsed()) {
      const bool incoming = c_insum->parsed();
      const TemporalNetwork net = load_network(sums.net, io.in);
      const int mode =
          sums.mode != 0 ? sums.mode : (net.two_mode() ? (incoming ? 2 : 1) : 0);
      const NodeId id = lookup(net, sums.node, mode);
      TemporalQuantity q = incoming ? in_sum(net, id) : out_sum(net, id);
      if (sums.pad) q = pad_with_zero(q, net.horizon());
      if (sums.cut_gt) q = cut_gt(q, *sums.cut_gt);
      if (sums.cut_ge) q = cut_ge(q, *sums.cut_ge);
      print_quantity_report(io.out, q);
      if (!sums.csv.empty()) {
        emit(sums.csv, io.out, [&](std::ostream& os) {
          write_csv(os, q, sums.instants ? CsvLayout::Instants : CsvLayout::Triples);
        });
      }
    } else if (c_mult->parsed()) {
      const auto t0 = Clock::now();
      MultiplyOptions opts;
      opts.threads = mult.threads;
      std::vector<TemporalNetwork> nets;
      for (const auto& p : mult.inputs) nets.push_back(load_network(p, io.in));
      TemporalNetwork result;
      if (mult.two2one) {
        if (nets.size() != 1) throw CommandError("--two2one-cols takes one input");
        result = two_to_one_cols(nets[0], opts);
      } else {
        if (nets.size() < 2) throw CommandError("multiply needs at least A and B");
        if (mult.transpose_a) nets[0] = transpose(nets[0]);
        result = nets.size() == 2 ? multiply(nets[0], nets[1], opts)
                                  : triple_product(nets[0], nets[1], nets[2], opts);
      }
      emit(mult.output, io.out,
           [&](std::ostream& os) { netsjson::write(os, result); });
      std::ostream& summary = mult.output == "-" ? io.err : io.out;
      summary << "nodes: " << result.nodes().size()
              << ", links: " << result.links().size() << ", kind: "
              << to_string(result.kind()) << '\n';
      print_elapsed(io.err, "multiplied", t0);
    } else if (c_derive->parsed()) {
      const TemporalNetwork net = load_network(derive.net, io.in);
      TemporalNetwork result;
      if (derive.op == "transpose") result = transpose(net);
      else if (derive.op == "del-loops") result = del_loops(net);
      else if (derive.op == "normalize") result = normalize_rows(net);
      else result = one_to_two_mode(net);
      emit(derive.output, io.out,
           [&](std::ostream& os) { netsjson::write(os, result); });
    } else if (c_top->parsed()) {
      if (!top.links && !top.loops) throw CommandError("top: pass --links or --loops");
      TemporalNetwork net = load_network(top.net, io.in);
      if (top.drop_loops) net = del_loops(net);
      const auto ranked =
          top.loops ? top_loops(net, top.thresh) : top_links(net, top.thresh);
      for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& r = ranked[i];
        io.out << i + 1 << '\t' << r.tail_label << '\t' << r.head_label << '\t'
               << format_value(r.total) << '\t' << to_string(r.quantity) << '\n';
      }
    } else if (c_recode->parsed()) {
      const TemporalQuantity q = resolve(recode_src, io.in);
      const auto p = parse_breaks(breaks);
      const TemporalQuantity bands = change_time(q, p);
      io.out << "band\tfrom\tto\tvalue\n";
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto v = bands.at(static_cast<Time>(i + 1));
        io.out << i + 1 << '\t' << p[i] << '\t' << p[i + 1] << '\t'
               << (v ? format_value(*v) : std::string("-")) << '\n';
      }
      io.out << to_string(bands) << '\n';
    } else if (c_chart->parsed()) {
      const TemporalQuantity q = resolve(chart_src, io.in);
      if (svg_out.empty() == csv_out.empty()) {
        throw CommandError("chart: pass exactly one of --svg, --csv");
      }
      if (!svg_out.empty()) {
        const std::string svg = render_svg(q, chart_opts);
        emit(svg_out, io.out, [&](std::ostream& os) { os << svg; });
      } else {
        emit(csv_out, io.out,
             [&](std::ostream& os) { write_csv(os, q, CsvLayout::Instants); });
      }
    }
  } catch (const std::exception& e) {
    io.err << "tqnet: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace tqnet::cli
