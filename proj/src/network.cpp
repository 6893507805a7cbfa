#include "tqnet/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqnet {

namespace {

bool link_less(const Link& a, const Link& b) {
  return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
}

std::string link_name(const NodeTable& nodes, const Link& l) {
  return "(" + nodes[l.tail].label + ", " + nodes[l.head].label + ")";
}

}  // namespace

std::string_view to_string(NetworkKind kind) {
  switch (kind) {
    case NetworkKind::Instantaneous: return "instantaneous";
    case NetworkKind::Cumulative: return "cumulative";
    case NetworkKind::General: return "general";
  }
  return "general";
}

NetworkKind parse_kind(std::string_view text) {
  if (text == "instantaneous") return NetworkKind::Instantaneous;
  if (text == "cumulative") return NetworkKind::Cumulative;
  if (text == "general") return NetworkKind::General;
  throw std::invalid_argument("unknown network kind '" + std::string(text) +
                              "'");
}

NodeId LabelIndex::at(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) throw LabelNotFound(label);
  return it->second;
}

std::optional<NodeId> LabelIndex::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

NodeId NodeTable::add(std::string label, int mode) {
  if (mode != 1 && mode != 2) {
    throw std::invalid_argument("node mode must be 1 or 2, got " +
                                std::to_string(mode));
  }
  const auto id = static_cast<NodeId>(nodes_.size() + 1);
  auto [it, inserted] = by_label_[mode - 1].emplace(label, id);
  if (!inserted) {
    throw std::invalid_argument("duplicate node label '" + label +
                                "' in mode " + std::to_string(mode));
  }
  nodes_.push_back({std::move(label), mode});
  return id;
}

const Node& NodeTable::operator[](NodeId id) const {
  if (!valid(id)) {
    throw std::out_of_range("node id " + std::to_string(id) + " out of range");
  }
  return nodes_[id - 1];
}

std::size_t NodeTable::count(int mode) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(),
      [mode](const Node& n) { return n.mode == mode; }));
}

std::vector<NodeId> NodeTable::ids(int mode) const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].mode == mode) out.push_back(static_cast<NodeId>(i + 1));
  }
  return out;
}

TemporalNetwork::TemporalNetwork(NodeTable nodes, std::vector<Link> links,
                                 TimeHorizon horizon, NetworkShape shape)
    : nodes_(std::move(nodes)),
      links_(std::move(links)),
      horizon_(horizon),
      shape_(shape) {
  if (shape_.two_mode && !shape_.directed) {
    throw std::invalid_argument("two-mode networks are stored directed");
  }
  if (!shape_.two_mode && nodes_.count(2) != 0) {
    throw std::invalid_argument("one-mode network contains mode-2 nodes");
  }
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    if (!nodes_.valid(l.tail) || !nodes_.valid(l.head)) {
      throw std::invalid_argument("link (" + std::to_string(l.tail) + ", " +
                                  std::to_string(l.head) +
                                  ") references a missing node");
    }
    if (l.quantity.empty()) {
      throw std::invalid_argument("link " + link_name(nodes_, l) +
                                  " has an empty quantity");
    }
    if (shape_.two_mode &&
        (nodes_[l.tail].mode != 1 || nodes_[l.head].mode != 2)) {
      throw std::invalid_argument("two-mode link " + link_name(nodes_, l) +
                                  " does not run from mode 1 to mode 2");
    }
    if (!shape_.directed && l.tail > l.head) {
      throw std::invalid_argument("undirected link " + link_name(nodes_, l) +
                                  " not stored with tail <= head");
    }
    if (i > 0 && !link_less(links_[i - 1], l)) {
      throw std::invalid_argument("links not sorted or duplicated at " +
                                  link_name(nodes_, l));
    }
  }
  row_start_.assign(nodes_.size() + 2, 0);
  for (const Link& l : links_) ++row_start_[l.tail + 1];
  for (std::size_t i = 1; i < row_start_.size(); ++i) {
    row_start_[i] += row_start_[i - 1];
  }
}

std::span<const Link> TemporalNetwork::out_links(NodeId tail) const {
  if (!nodes_.valid(tail)) {
    throw std::out_of_range("node id " + std::to_string(tail) +
                            " out of range");
  }
  return std::span<const Link>(links_).subspan(
      row_start_[tail], row_start_[tail + 1] - row_start_[tail]);
}

const TemporalQuantity* TemporalNetwork::find(NodeId tail, NodeId head) const {
  if (!shape_.directed && tail > head) std::swap(tail, head);
  if (!nodes_.valid(tail)) return nullptr;
  auto row = out_links(tail);
  auto it = std::lower_bound(
      row.begin(), row.end(), head,
      [](const Link& l, NodeId h) { return l.head < h; });
  if (it == row.end() || it->head != head) return nullptr;
  return &it->quantity;
}

std::vector<NodeId> TemporalNetwork::row_ids() const { return nodes_.ids(1); }

std::vector<NodeId> TemporalNetwork::col_ids() const {
  return nodes_.ids(shape_.two_mode ? 2 : 1);
}

bool operator==(const TemporalNetwork& a, const TemporalNetwork& b) {
  if (!(a.nodes_ == b.nodes_) || !(a.horizon_ == b.horizon_) ||
      a.shape_.directed != b.shape_.directed ||
      a.shape_.two_mode != b.shape_.two_mode || a.shape_.kind != b.shape_.kind ||
      a.links_.size() != b.links_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.links_.size(); ++i) {
    const Link& x = a.links_[i];
    const Link& y = b.links_[i];
    if (x.tail != y.tail || x.head != y.head || !(x.quantity == y.quantity)) {
      return false;
    }
  }
  return true;
}

NetworkBuilder::NetworkBuilder(NodeTable nodes, TimeHorizon horizon,
                               NetworkShape shape, const Semiring& sr)
    : nodes_(std::move(nodes)), horizon_(horizon), shape_(shape), sr_(&sr) {}

void NetworkBuilder::add(NodeId tail, NodeId head, TemporalQuantity quantity) {
  if (quantity.empty()) return;
  if (!shape_.directed && tail > head) std::swap(tail, head);
  pending_.push_back({tail, head, std::move(quantity)});
}

TemporalNetwork NetworkBuilder::build() && {
  std::stable_sort(pending_.begin(), pending_.end(), link_less);
  std::vector<Link> merged;
  merged.reserve(pending_.size());
  for (Link& l : pending_) {
    if (!merged.empty() && merged.back().tail == l.tail &&
        merged.back().head == l.head) {
      merged.back().quantity = sum(merged.back().quantity, l.quantity, *sr_);
    } else {
      merged.push_back(std::move(l));
    }
  }
  std::erase_if(merged, [](const Link& l) { return l.quantity.empty(); });
  return TemporalNetwork(std::move(nodes_), std::move(merged), horizon_,
                         shape_);
}

namespace {

std::optional<std::string> kind_violation(const TemporalNetwork& net) {
  for (const Link& l : net.links()) {
    bool ok = true;
    switch (net.kind()) {
      case NetworkKind::Cumulative:
        ok = is_cumulative(l.quantity, net.horizon());
        break;
      case NetworkKind::Instantaneous:
        ok = l.quantity.size() == 1 && l.quantity[0].length() == 1;
        break;
      case NetworkKind::General:
        break;
    }
    if (!ok) return link_name(net.nodes(), l);
  }
  return std::nullopt;
}

}  // namespace

bool satisfies_kind(const TemporalNetwork& net) {
  return !kind_violation(net).has_value();
}

void verify_kind(const TemporalNetwork& net) {
  if (auto bad = kind_violation(net)) {
    throw std::invalid_argument("network declared " +
                                std::string(to_string(net.kind())) +
                                " but link " + *bad + " violates it");
  }
}

TemporalNetwork transpose(const TemporalNetwork& net) {
  if (!net.directed()) return net;
  NodeTable nodes;
  for (const Node& n : net.nodes().all()) {
    nodes.add(n.label, net.two_mode() ? 3 - n.mode : n.mode);
  }
  NetworkBuilder b(std::move(nodes), net.horizon(), net.shape());
  for (const Link& l : net.links()) b.add(l.head, l.tail, l.quantity);
  return std::move(b).build();
}

TemporalNetwork del_loops(const TemporalNetwork& net) {
  if (net.two_mode()) {
    throw std::invalid_argument("del_loops: loops are undefined in a two-mode "
                                "network");
  }
  std::vector<Link> kept;
  kept.reserve(net.links().size());
  for (const Link& l : net.links()) {
    if (l.tail != l.head) kept.push_back(l);
  }
  return TemporalNetwork(net.nodes(), std::move(kept), net.horizon(),
                         net.shape());
}

TemporalNetwork one_to_two_mode(const TemporalNetwork& net) {
  if (net.two_mode()) {
    throw std::invalid_argument("one_to_two_mode: network is already two-mode");
  }
  const auto n = static_cast<NodeId>(net.nodes().size());
  NodeTable nodes;
  for (const Node& v : net.nodes().all()) nodes.add(v.label, 1);
  for (const Node& v : net.nodes().all()) nodes.add(v.label, 2);
  NetworkShape shape{true, true, net.kind()};
  NetworkBuilder b(std::move(nodes), net.horizon(), shape);
  for (const Link& l : net.links()) {
    b.add(l.tail, n + l.head, l.quantity);
    if (!net.directed() && l.tail != l.head) b.add(l.head, n + l.tail, l.quantity);
  }
  return std::move(b).build();
}

LabelIndex index_by_label(const TemporalNetwork& net, int mode) {
  std::unordered_map<std::string, NodeId> ids;
  const auto& all = net.nodes().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mode != 0 && all[i].mode != mode) continue;
    auto [it, inserted] = ids.emplace(all[i].label, static_cast<NodeId>(i + 1));
    if (!inserted) {
      throw std::invalid_argument("label '" + all[i].label +
                                  "' occurs in both modes; select a mode");
    }
  }
  return LabelIndex(std::move(ids));
}

TemporalQuantity node_activity(const TemporalNetwork& net, NodeId id) {
  if (!net.nodes().valid(id)) {
    throw std::out_of_range("node id " + std::to_string(id) + " out of range");
  }
  TemporalQuantity acc;
  auto mark = [&acc](const TemporalQuantity& q) {
    std::vector<Interval> ones;
    ones.reserve(q.size());
    for (const Interval& iv : q) ones.push_back({iv.start, iv.finish, 1.0});
    // min(1, 1) = 1 keeps the union a 0/1 indicator
    acc = sum(acc, TemporalQuantity(std::move(ones)), kMinPlus);
  };
  for (const Link& l : net.links()) {
    if (l.tail == id || l.head == id) mark(l.quantity);
  }
  return acc;
}

}  // namespace tqnet
