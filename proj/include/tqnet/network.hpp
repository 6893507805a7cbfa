#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tqnet/temporal_quantity.hpp"

namespace tqnet {

/// 1-based dense node identifier.
using NodeId = std::uint32_t;

enum class NetworkKind { Instantaneous, Cumulative, General };

std::string_view to_string(NetworkKind kind);
NetworkKind parse_kind(std::string_view text);

struct Node {
  std::string label;
  int mode = 1;  // 1 = rows (events/works), 2 = columns (participants)
};

struct Link {
  NodeId tail;
  NodeId head;
  TemporalQuantity quantity;
};

class LabelNotFound : public std::out_of_range {
 public:
  explicit LabelNotFound(const std::string& label)
      : std::out_of_range("unknown node label '" + label + "'"), label_(label) {}
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// Label -> id lookup that reports missing labels instead of defaulting.
class LabelIndex {
 public:
  LabelIndex() = default;
  explicit LabelIndex(std::unordered_map<std::string, NodeId> ids)
      : ids_(std::move(ids)) {}

  [[nodiscard]] NodeId at(const std::string& label) const;
  [[nodiscard]] std::optional<NodeId> find(const std::string& label) const;
  [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
};

/// Node list with labels unique within each mode.
class NodeTable {
 public:
  NodeId add(std::string label, int mode = 1);

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const Node& operator[](NodeId id) const;
  [[nodiscard]] bool valid(NodeId id) const noexcept {
    return id >= 1 && id <= nodes_.size();
  }
  [[nodiscard]] std::span<const Node> all() const noexcept { return nodes_; }
  [[nodiscard]] std::size_t count(int mode) const noexcept;
  /// Ids of the given mode in ascending order.
  [[nodiscard]] std::vector<NodeId> ids(int mode) const;

  friend bool operator==(const NodeTable& a, const NodeTable& b) {
    return a.nodes_.size() == b.nodes_.size() &&
           std::equal(a.nodes_.begin(), a.nodes_.end(), b.nodes_.begin(),
                      [](const Node& x, const Node& y) {
                        return x.label == y.label && x.mode == y.mode;
                      });
  }

 private:
  std::vector<Node> nodes_;
  std::unordered_map<std::string, NodeId> by_label_[2];
};

struct NetworkShape {
  bool directed = true;
  bool two_mode = false;
  NetworkKind kind = NetworkKind::General;
};

/// Immutable sparse temporal network.
///
/// Links are sorted by (tail, head) with no empty quantities. Two-mode links
/// run from a mode-1 node to a mode-2 node; undirected links have
/// tail <= head. One-mode networks put every node in mode 1.
class TemporalNetwork {
 public:
  TemporalNetwork() = default;
  /// Validates every structural invariant; throws std::invalid_argument.
  /// Links must already be sorted and unique (see NetworkBuilder).
  TemporalNetwork(NodeTable nodes, std::vector<Link> links,
                  TimeHorizon horizon, NetworkShape shape);

  [[nodiscard]] const NodeTable& nodes() const noexcept { return nodes_; }
  [[nodiscard]] std::span<const Link> links() const noexcept { return links_; }
  [[nodiscard]] std::span<const Link> out_links(NodeId tail) const;
  [[nodiscard]] const TemporalQuantity* find(NodeId tail, NodeId head) const;
  [[nodiscard]] const TimeHorizon& horizon() const noexcept { return horizon_; }
  [[nodiscard]] const NetworkShape& shape() const noexcept { return shape_; }
  [[nodiscard]] bool directed() const noexcept { return shape_.directed; }
  [[nodiscard]] bool two_mode() const noexcept { return shape_.two_mode; }
  [[nodiscard]] NetworkKind kind() const noexcept { return shape_.kind; }

  /// Row / column node sets of the network's matrix.
  [[nodiscard]] std::vector<NodeId> row_ids() const;
  [[nodiscard]] std::vector<NodeId> col_ids() const;

  friend bool operator==(const TemporalNetwork& a, const TemporalNetwork& b);

 private:
  NodeTable nodes_;
  std::vector<Link> links_;
  std::vector<std::size_t> row_start_;  // size nodes+2, indexed by tail id
  TimeHorizon horizon_;
  NetworkShape shape_;
};

/// Collects links in any order; parallel links collapse by summation.
class NetworkBuilder {
 public:
  NetworkBuilder(NodeTable nodes, TimeHorizon horizon, NetworkShape shape,
                 const Semiring& sr = kCombinatorial);

  /// Undirected links are normalised to tail <= head. Empty quantities are
  /// ignored.
  void add(NodeId tail, NodeId head, TemporalQuantity quantity);
  [[nodiscard]] const NodeTable& nodes() const noexcept { return nodes_; }
  TemporalNetwork build() &&;

 private:
  NodeTable nodes_;
  TimeHorizon horizon_;
  NetworkShape shape_;
  const Semiring* sr_;
  std::vector<Link> pending_;
};

/// True when every link satisfies the invariant of the declared kind:
/// cumulative links pass is_cumulative, instantaneous links are a single
/// interval of length one.
bool satisfies_kind(const TemporalNetwork& net);
/// Throws std::invalid_argument naming the first offending link.
void verify_kind(const TemporalNetwork& net);

/// (u,v,q) -> (v,u,q); two-mode networks also swap node modes.
TemporalNetwork transpose(const TemporalNetwork& net);

/// Removes (v,v) links. Throws std::invalid_argument for two-mode input.
TemporalNetwork del_loops(const TemporalNetwork& net);

/// Two-mode view of a one-mode network: row and column sets are both copies
/// of the node set (rows get ids 1..n, columns n+1..2n). Undirected edges
/// appear in both directions. Throws std::invalid_argument for two-mode
/// input.
TemporalNetwork one_to_two_mode(const TemporalNetwork& net);

/// Label lookup over one mode (two-mode networks) or all nodes (mode 0).
LabelIndex index_by_label(const TemporalNetwork& net, int mode = 0);

/// Instants at which a node has at least one active incident link, as a
/// quantity with value 1.
TemporalQuantity node_activity(const TemporalNetwork& net, NodeId id);

}  // namespace tqnet
