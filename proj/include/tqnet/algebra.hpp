#pragma once

#include <string>
#include <vector>

#include "tqnet/network.hpp"

namespace tqnet {

struct MultiplyOptions {
  const Semiring* semiring = &kCombinatorial;
  /// Worker threads over output rows; 0 picks hardware concurrency.
  /// Results are identical for every value.
  unsigned threads = 1;
};

/// Sparse product C = A * B with c_ij = sum_p a_ip * b_pj, each term a
/// quantity product and the sum a quantity sum.
///
/// A's column nodes and B's row nodes are matched by label and must be the
/// same set; otherwise std::invalid_argument names the first unmatched
/// label. Horizons must agree. Undirected inputs act as symmetric matrices.
/// The result is one-mode when A's row labels and B's column labels are the
/// same sequence, two-mode otherwise. It is cumulative when both factors are.
TemporalNetwork multiply(const TemporalNetwork& a, const TemporalNetwork& b,
                         const MultiplyOptions& options = {});

/// Left-to-right (A * M) * B.
TemporalNetwork triple_product(const TemporalNetwork& a,
                               const TemporalNetwork& m,
                               const TemporalNetwork& b,
                               const MultiplyOptions& options = {});

/// Co-occurrence network A^T * A on the column mode of a two-mode network,
/// stored undirected with loops kept. Loop (p,p) counts the events p took
/// part in.
TemporalNetwork two_to_one_cols(const TemporalNetwork& a,
                                const MultiplyOptions& options = {});

/// Sum of the quantities on links entering `node` (incident edges for
/// undirected networks). Empty when there are none; never zero-padded.
TemporalQuantity in_sum(const TemporalNetwork& net, NodeId node,
                        const Semiring& sr = kCombinatorial);
/// Sum of the quantities on links leaving `node`.
TemporalQuantity out_sum(const TemporalNetwork& net, NodeId node,
                         const Semiring& sr = kCombinatorial);
/// In-sums of every node in one pass, indexed by id - 1.
std::vector<TemporalQuantity> in_sums(const TemporalNetwork& net,
                                      const Semiring& sr = kCombinatorial);

/// Fractional network: at every instant each defined entry of row w is
/// divided by max(1, sum of row w's defined values at that instant).
TemporalNetwork normalize_rows(const TemporalNetwork& net);

struct RankedLink {
  NodeId tail;
  NodeId head;
  std::string tail_label;
  std::string head_label;
  Value total;
  TemporalQuantity quantity;
};

/// Non-loop links with total >= threshold ordered by total descending, then
/// tail label, then head label.
std::vector<RankedLink> top_links(const TemporalNetwork& net, Value threshold);
/// Same ranking restricted to loops.
std::vector<RankedLink> top_loops(const TemporalNetwork& net, Value threshold);

}  // namespace tqnet
