#include "tqnet/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace tqnet {

namespace {

// CSR view of a network's matrix in row/column *positions* (0-based indices
// into row_ids()/col_ids()). Undirected networks contribute both triangles.
struct SparseRows {
  std::vector<std::size_t> start;
  std::vector<std::uint32_t> col;
  std::vector<const TemporalQuantity*> value;

  [[nodiscard]] std::size_t rows() const { return start.size() - 1; }
};

SparseRows sparse_rows(const TemporalNetwork& net,
                       const std::vector<NodeId>& rows,
                       const std::vector<NodeId>& cols) {
  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> row_pos(net.nodes().size() + 1, kNone);
  std::vector<std::uint32_t> col_pos(net.nodes().size() + 1, kNone);
  for (std::size_t i = 0; i < rows.size(); ++i)
    row_pos[rows[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j < cols.size(); ++j)
    col_pos[cols[j]] = static_cast<std::uint32_t>(j);

  struct Entry {
    std::uint32_t row;
    std::uint32_t col;
    const TemporalQuantity* q;
  };
  std::vector<Entry> entries;
  entries.reserve(net.links().size() * (net.directed() ? 1 : 2));
  for (const Link& l : net.links()) {
    entries.push_back({row_pos[l.tail], col_pos[l.head], &l.quantity});
    if (!net.directed() && l.tail != l.head) {
      entries.push_back({row_pos[l.head], col_pos[l.tail], &l.quantity});
    }
  }
  if (!net.directed()) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) {
                return x.row != y.row ? x.row < y.row : x.col < y.col;
              });
  }

  SparseRows out;
  out.start.assign(rows.size() + 1, 0);
  out.col.reserve(entries.size());
  out.value.reserve(entries.size());
  for (const Entry& e : entries) {
    ++out.start[e.row + 1];
    out.col.push_back(e.col);
    out.value.push_back(e.q);
  }
  for (std::size_t i = 1; i < out.start.size(); ++i)
    out.start[i] += out.start[i - 1];
  return out;
}

std::vector<std::string> labels_of(const TemporalNetwork& net,
                                   const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (NodeId id : ids) out.push_back(net.nodes()[id].label);
  return out;
}

// perm[k] = position in `to` of the label at position k of `from`.
std::vector<std::uint32_t> match_labels(const std::vector<std::string>& from,
                                        const std::vector<std::string>& to) {
  std::unordered_map<std::string_view, std::uint32_t> where;
  where.reserve(to.size());
  for (std::size_t i = 0; i < to.size(); ++i)
    where.emplace(to[i], static_cast<std::uint32_t>(i));
  std::vector<std::uint32_t> perm(from.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    auto it = where.find(from[k]);
    if (it == where.end()) {
      throw std::invalid_argument(
          "multiply: inner dimension mismatch, label '" + from[k] +
          "' of the left factor's columns has no row in the right factor");
    }
    perm[k] = it->second;
  }
  if (from.size() != to.size()) {
    std::unordered_map<std::string_view, bool> seen;
    for (const auto& l : from) seen.emplace(l, true);
    for (const auto& l : to) {
      if (!seen.contains(l)) {
        throw std::invalid_argument(
            "multiply: inner dimension mismatch, label '" + l +
            "' of the right factor's rows has no column in the left factor");
      }
    }
  }
  return perm;
}

unsigned resolve_threads(unsigned requested, std::size_t rows) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency())
                              : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(rows, 1)));
}

}  // namespace

TemporalNetwork multiply(const TemporalNetwork& a, const TemporalNetwork& b,
                         const MultiplyOptions& options) {
  const Semiring& sr = *options.semiring;
  if (!(a.horizon() == b.horizon())) {
    throw std::invalid_argument("multiply: factors have different horizons");
  }
  const auto a_rows = a.row_ids();
  const auto a_cols = a.col_ids();
  const auto b_rows = b.row_ids();
  const auto b_cols = b.col_ids();
  const auto perm = match_labels(labels_of(a, a_cols), labels_of(b, b_rows));

  const SparseRows left = sparse_rows(a, a_rows, a_cols);
  const SparseRows right = sparse_rows(b, b_rows, b_cols);

  const auto row_labels = labels_of(a, a_rows);
  const auto col_labels = labels_of(b, b_cols);
  const bool one_mode = row_labels == col_labels;

  NodeTable nodes;
  for (const auto& l : row_labels) nodes.add(l, 1);
  if (!one_mode) {
    for (const auto& l : col_labels) nodes.add(l, 2);
  }
  const auto col_offset =
      static_cast<NodeId>(one_mode ? 1 : row_labels.size() + 1);

  // Rows are independent; each worker owns its scratch accumulator and
  // writes only its own rows, so output never depends on the thread count.
  std::vector<std::vector<Link>> out_rows(left.rows());
  auto work_row = [&](std::size_t i, std::vector<TemporalQuantity>& acc,
                      std::vector<char>& used,
                      std::vector<std::uint32_t>& touched) {
    for (std::size_t e = left.start[i]; e < left.start[i + 1]; ++e) {
      const std::uint32_t p = perm[left.col[e]];
      const TemporalQuantity& qa = *left.value[e];
      for (std::size_t f = right.start[p]; f < right.start[p + 1]; ++f) {
        TemporalQuantity term = product(qa, *right.value[f], sr);
        if (term.empty()) continue;
        const std::uint32_t j = right.col[f];
        if (!used[j]) {
          used[j] = 1;
          touched.push_back(j);
          acc[j] = std::move(term);
        } else {
          acc[j] = sum(acc[j], term, sr);
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = out_rows[i];
    row.reserve(touched.size());
    for (std::uint32_t j : touched) {
      row.push_back({static_cast<NodeId>(i + 1), static_cast<NodeId>(j) + col_offset,
                     std::move(acc[j])});
      acc[j] = TemporalQuantity();
      used[j] = 0;
    }
    touched.clear();
  };

  const unsigned threads = resolve_threads(options.threads, left.rows());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<TemporalQuantity> acc(b_cols.size());
    std::vector<char> used(b_cols.size(), 0);
    std::vector<std::uint32_t> touched;
    constexpr std::size_t kChunk = 64;
    for (;;) {
      const std::size_t lo = next.fetch_add(kChunk);
      if (lo >= left.rows()) break;
      const std::size_t hi = std::min(lo + kChunk, left.rows());
      for (std::size_t i = lo; i < hi; ++i) work_row(i, acc, used, touched);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::size_t total_links = 0;
  for (const auto& r : out_rows) total_links += r.size();
  std::vector<Link> links;
  links.reserve(total_links);
  for (auto& r : out_rows) {
    std::move(r.begin(), r.end(), std::back_inserter(links));
  }

  const bool cumulative = a.kind() == NetworkKind::Cumulative &&
                          b.kind() == NetworkKind::Cumulative;
  NetworkShape shape{true, !one_mode,
                     cumulative ? NetworkKind::Cumulative : NetworkKind::General};
  return TemporalNetwork(std::move(nodes), std::move(links), a.horizon(), shape);
}

TemporalNetwork triple_product(const TemporalNetwork& a,
                               const TemporalNetwork& m,
                               const TemporalNetwork& b,
                               const MultiplyOptions& options) {
  return multiply(multiply(a, m, options), b, options);
}

TemporalNetwork two_to_one_cols(const TemporalNetwork& a,
                                const MultiplyOptions& options) {
  if (!a.two_mode()) {
    throw std::invalid_argument("two_to_one_cols: requires a two-mode network");
  }
  TemporalNetwork full = multiply(transpose(a), a, options);
  std::vector<Link> upper;
  upper.reserve(full.links().size() / 2 + full.nodes().size());
  for (const Link& l : full.links()) {
    if (l.tail <= l.head) upper.push_back(l);
  }
  NetworkShape shape = full.shape();
  shape.directed = false;
  return TemporalNetwork(full.nodes(), std::move(upper), full.horizon(), shape);
}

TemporalQuantity in_sum(const TemporalNetwork& net, NodeId node,
                        const Semiring& sr) {
  if (!net.nodes().valid(node)) {
    throw std::out_of_range("in_sum: node id " + std::to_string(node) +
                            " out of range");
  }
  TemporalQuantity acc;
  for (const Link& l : net.links()) {
    if (l.head == node || (!net.directed() && l.tail == node)) {
      acc = sum(acc, l.quantity, sr);
    }
  }
  return acc;
}

TemporalQuantity out_sum(const TemporalNetwork& net, NodeId node,
                         const Semiring& sr) {
  if (!net.directed()) return in_sum(net, node, sr);
  TemporalQuantity acc;
  for (const Link& l : net.out_links(node)) acc = sum(acc, l.quantity, sr);
  return acc;
}

std::vector<TemporalQuantity> in_sums(const TemporalNetwork& net,
                                      const Semiring& sr) {
  std::vector<TemporalQuantity> out(net.nodes().size());
  for (const Link& l : net.links()) {
    out[l.head - 1] = sum(out[l.head - 1], l.quantity, sr);
    if (!net.directed() && l.tail != l.head) {
      out[l.tail - 1] = sum(out[l.tail - 1], l.quantity, sr);
    }
  }
  return out;
}

TemporalNetwork normalize_rows(const TemporalNetwork& net) {
  if (!net.directed()) {
    throw std::invalid_argument(
        "normalize_rows: undirected networks have no row orientation");
  }
  std::vector<Link> links;
  links.reserve(net.links().size());
  for (const NodeId tail : net.row_ids()) {
    auto row = net.out_links(tail);
    if (row.empty()) continue;
    TemporalQuantity row_total;
    for (const Link& l : row) row_total = sum(row_total, l.quantity);
    QuantityBuilder recip;
    for (const Interval& iv : row_total) {
      recip.append(iv.start, iv.finish, 1.0 / std::max(1.0, iv.value));
    }
    const TemporalQuantity divisor = std::move(recip).build();
    for (const Link& l : row) {
      links.push_back({l.tail, l.head, product(l.quantity, divisor)});
    }
  }
  TemporalNetwork out(net.nodes(), std::move(links), net.horizon(), net.shape());
  if (!satisfies_kind(out)) {
    NetworkShape shape = out.shape();
    shape.kind = NetworkKind::General;
    std::vector<Link> moved(out.links().begin(), out.links().end());
    return TemporalNetwork(out.nodes(), std::move(moved), out.horizon(), shape);
  }
  return out;
}

namespace {

std::vector<RankedLink> rank(const TemporalNetwork& net, Value threshold,
                             bool loops) {
  std::vector<RankedLink> out;
  for (const Link& l : net.links()) {
    if ((l.tail == l.head) != loops) continue;
    const Value t = total(l.quantity);
    if (t < threshold) continue;
    out.push_back({l.tail, l.head, net.nodes()[l.tail].label,
                   net.nodes()[l.head].label, t, l.quantity});
  }
  std::sort(out.begin(), out.end(), [](const RankedLink& x, const RankedLink& y) {
    if (x.total != y.total) return x.total > y.total;
    if (x.tail_label != y.tail_label) return x.tail_label < y.tail_label;
    return x.head_label < y.head_label;
  });
  return out;
}

}  // namespace

std::vector<RankedLink> top_links(const TemporalNetwork& net, Value threshold) {
  return rank(net, threshold, false);
}

std::vector<RankedLink> top_loops(const TemporalNetwork& net, Value threshold) {
  return rank(net, threshold, true);
}

}  // namespace tqnet
