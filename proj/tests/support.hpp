#pragma once

// Random generators and instant-by-instant oracles shared by the test
// binaries. The oracles only use TemporalQuantity::at and the validating
// constructor, never the sparse sweep they are checking.

#include <optional>
#include <random>
#include <vector>

#include "tqnet/network.hpp"
#include "tqnet/temporal_quantity.hpp"

namespace tqnet::testing {

using Rng = std::mt19937_64;
using Dense = std::vector<std::optional<Value>>;

/// Values of q at instants lo, lo+1, ..., hi-1.
inline Dense dense(const TemporalQuantity& q, Time lo, Time hi) {
  Dense out;
  out.reserve(static_cast<std::size_t>(hi - lo));
  for (Time t = lo; t < hi; ++t) out.push_back(q.at(t));
  return out;
}

/// Rebuilds a quantity from per-instant values starting at `lo`.
inline TemporalQuantity from_dense(const Dense& values, Time lo) {
  std::vector<Interval> unit;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k]) {
      const Time t = lo + static_cast<Time>(k);
      unit.push_back({t, t + 1, *values[k]});
    }
  }
  return TemporalQuantity(std::move(unit));
}

struct QuantityShape {
  Time lo = 0;
  Time hi = 30;
  double coverage = 0.5;   // chance that an instant starts a run
  int max_run = 5;
  int max_value = 9;
  bool integers = true;
  bool allow_zero = true;
};

inline TemporalQuantity random_quantity(Rng& rng, const QuantityShape& s = {}) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> run(1, s.max_run);
  std::uniform_int_distribution<int> ival(s.allow_zero ? 0 : 1, s.max_value);
  std::uniform_real_distribution<double> rval(s.allow_zero ? 0.0 : 0.1,
                                              static_cast<double>(s.max_value));
  std::vector<Interval> out;
  Time t = s.lo;
  while (t < s.hi) {
    if (unit(rng) < s.coverage) {
      const Time f = std::min<Time>(s.hi, t + run(rng));
      const Value v = s.integers ? static_cast<Value>(ival(rng)) : rval(rng);
      out.push_back({t, f, v});
      t = f;
      // occasionally leave the next interval touching this one
      if (unit(rng) < 0.5) continue;
    }
    ++t;
  }
  return TemporalQuantity(std::move(out));
}

/// Random cumulative quantity over the horizon: starts somewhere, runs to
/// the end, never decreases.
inline TemporalQuantity random_cumulative(Rng& rng, const TimeHorizon& h,
                                          int max_step = 3) {
  std::uniform_int_distribution<Time> start(h.first, h.last);
  std::uniform_int_distribution<int> step(0, max_step);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Interval> out;
  Value v = step(rng) + 1;
  for (Time t = start(rng); t <= h.last; ++t) {
    if (unit(rng) < 0.3) v += step(rng);
    out.push_back({t, t + 1, v});
  }
  return TemporalQuantity(std::move(out));
}

using DenseMatrix = std::vector<std::vector<std::optional<Value>>>;

/// Snapshot at instant t of a network's matrix in row/col position order.
inline DenseMatrix snapshot(const TemporalNetwork& net, Time t) {
  const auto rows = net.row_ids();
  const auto cols = net.col_ids();
  DenseMatrix m(rows.size(), std::vector<std::optional<Value>>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (const auto* q = net.find(rows[i], cols[j])) m[i][j] = q->at(t);
    }
  }
  return m;
}

/// Plain triple loop with undefined entries skipped, as in the definition
/// c_ij(t) = sum over p with both factors defined of a_ip(t) * b_pj(t).
inline DenseMatrix dense_product(const DenseMatrix& a, const DenseMatrix& b,
                                 const Semiring& sr = kCombinatorial) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  DenseMatrix c(n, std::vector<std::optional<Value>>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t p = 0; p < k; ++p) {
        if (a[i][p] && b[p][j]) {
          const Value term = sr.mul(*a[i][p], *b[p][j]);
          c[i][j] = c[i][j] ? sr.add(*c[i][j], term) : term;
        }
      }
    }
  }
  return c;
}

/// Two-mode network with `rows` x `cols` nodes labelled r<i> / c<j>.
inline NodeTable two_mode_nodes(std::size_t rows, std::size_t cols,
                                const char* row_prefix = "r",
                                const char* col_prefix = "c") {
  NodeTable nodes;
  for (std::size_t i = 0; i < rows; ++i)
    nodes.add(row_prefix + std::to_string(i), 1);
  for (std::size_t j = 0; j < cols; ++j)
    nodes.add(col_prefix + std::to_string(j), 2);
  return nodes;
}

struct NetShape {
  std::size_t rows = 10;
  std::size_t cols = 10;
  double density = 0.3;
  TimeHorizon horizon{0, 19};
  bool cumulative = false;
  bool binary_instant = false;  // single unit-length unit-value intervals
  QuantityShape values{};
};

/// Random two-mode network with rows labelled `row_prefix` and columns
/// `col_prefix`, so consecutive factors can share a label set.
inline TemporalNetwork random_two_mode(Rng& rng, const NetShape& s,
                                       const char* row_prefix = "r",
                                       const char* col_prefix = "c") {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Time> year(s.horizon.first, s.horizon.last);
  const NetworkKind kind = s.cumulative        ? NetworkKind::Cumulative
                           : s.binary_instant ? NetworkKind::Instantaneous
                                              : NetworkKind::General;
  NetworkBuilder b(two_mode_nodes(s.rows, s.cols, row_prefix, col_prefix),
                   s.horizon, NetworkShape{true, true, kind});
  QuantityShape qs = s.values;
  qs.lo = s.horizon.first;
  qs.hi = s.horizon.end();
  for (std::size_t i = 0; i < s.rows; ++i) {
    for (std::size_t j = 0; j < s.cols; ++j) {
      if (unit(rng) >= s.density) continue;
      TemporalQuantity q;
      if (s.cumulative) {
        q = random_cumulative(rng, s.horizon);
      } else if (s.binary_instant) {
        const Time y = year(rng);
        q = TemporalQuantity({{y, y + 1, 1.0}});
      } else {
        q = random_quantity(rng, qs);
      }
      b.add(static_cast<NodeId>(i + 1), static_cast<NodeId>(s.rows + j + 1),
            std::move(q));
    }
  }
  return std::move(b).build();
}

}  // namespace tqnet::testing
