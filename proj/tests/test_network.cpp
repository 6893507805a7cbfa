#include <doctest.h>

#include "support.hpp"
#include "tqnet/network.hpp"

using namespace tqnet;
using tqnet::testing::Rng;

namespace {

const TimeHorizon kH(2000, 2016);

TemporalNetwork one_mode(std::vector<std::string> labels,
                         std::vector<std::pair<NodeId, NodeId>> arcs,
                         bool directed = true) {
  NodeTable nodes;
  for (auto& l : labels) nodes.add(l);
  NetworkBuilder b(std::move(nodes), kH, NetworkShape{directed, false});
  Time y = 2001;
  for (auto [u, v] : arcs) {
    b.add(u, v, TemporalQuantity({{y, y + 1, 1}}));
    ++y;
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("node table enforces per-mode label uniqueness") {
  NodeTable t;
  CHECK(t.add("x") == 1);
  CHECK(t.add("y") == 2);
  CHECK_THROWS_AS(t.add("x"), std::invalid_argument);
  CHECK(t.add("x", 2) == 3);
  CHECK_THROWS_AS(t.add("z", 3), std::invalid_argument);
  CHECK(t.ids(2) == std::vector<NodeId>{3});
  CHECK_THROWS_AS((void)t[0], std::out_of_range);
}

TEST_CASE("network constructor rejects broken invariants") {
  NodeTable nodes;
  nodes.add("w", 1);
  nodes.add("a", 2);
  const TemporalQuantity q{{2005, 2006, 1}};
  CHECK_THROWS_AS(TemporalNetwork(nodes, {{2, 1, q}}, kH, {true, true}),
                  std::invalid_argument);  // against the modes
  CHECK_THROWS_AS(TemporalNetwork(nodes, {{1, 2, TemporalQuantity{}}}, kH, {true, true}),
                  std::invalid_argument);  // empty quantity
  CHECK_THROWS_AS(TemporalNetwork(nodes, {{1, 3, q}}, kH, {true, true}),
                  std::invalid_argument);  // missing node
  CHECK_THROWS_AS(TemporalNetwork(nodes, {{1, 2, q}}, kH, {true, false}),
                  std::invalid_argument);  // mode-2 node in one-mode net
  CHECK_NOTHROW(TemporalNetwork(nodes, {{1, 2, q}}, kH, {true, true}));
}

TEST_CASE("builder merges parallel links by summation") {
  NodeTable nodes;
  nodes.add("u");
  nodes.add("v");
  NetworkBuilder b(nodes, kH, NetworkShape{false, false});
  b.add(2, 1, TemporalQuantity({{2005, 2006, 1}}));
  b.add(1, 2, TemporalQuantity({{2005, 2007, 1}}));
  const auto net = std::move(b).build();
  REQUIRE(net.links().size() == 1);
  CHECK(net.links()[0].tail == 1);
  CHECK(net.links()[0].quantity == TemporalQuantity({{2005, 2006, 2}, {2006, 2007, 1}}));
  CHECK(net.find(2, 1) == net.find(1, 2));
}

TEST_CASE("transpose") {
  const auto net = one_mode({"a", "b", "c"}, {{1, 2}, {3, 1}});
  const auto t = transpose(net);
  REQUIRE(t.find(2, 1) != nullptr);
  CHECK(*t.find(2, 1) == *net.find(1, 2));
  CHECK(t.find(1, 2) == nullptr);
  CHECK(transpose(t) == net);

  Rng rng(1);
  testing::NetShape shape;
  shape.rows = 7;
  shape.cols = 5;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_two_mode(rng, shape);
    const auto at = transpose(a);
    CHECK(transpose(at) == a);
    CHECK(at.row_ids().size() == 5);
    for (Time time = shape.horizon.first; time <= shape.horizon.last; ++time) {
      const auto m = testing::snapshot(a, time);
      const auto mt = testing::snapshot(at, time);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) CHECK(m[i][j] == mt[j][i]);
    }
  }
}

TEST_CASE("del_loops") {
  const auto net = one_mode({"a", "b"}, {{1, 1}, {1, 2}});
  const auto d = del_loops(net);
  CHECK(d.links().size() == 1);
  CHECK(d.find(1, 2) != nullptr);
  CHECK(del_loops(d) == d);

  Rng rng(2);
  NodeTable nodes;
  for (int i = 0; i < 8; ++i) nodes.add("n" + std::to_string(i));
  NetworkBuilder b(nodes, kH, NetworkShape{});
  std::uniform_int_distribution<NodeId> pick(1, 8);
  for (int k = 0; k < 40; ++k) b.add(pick(rng), pick(rng), TemporalQuantity({{2001, 2002, 1}}));
  const auto r = std::move(b).build();
  const auto rd = del_loops(r);
  for (const Link& l : rd.links()) CHECK(l.tail != l.head);
  std::size_t off = 0;
  for (const Link& l : r.links()) {
    if (l.tail == l.head) continue;
    ++off;
    REQUIRE(rd.find(l.tail, l.head) != nullptr);
    CHECK(*rd.find(l.tail, l.head) == l.quantity);
  }
  CHECK(rd.links().size() == off);

  CHECK_THROWS_AS(del_loops(testing::random_two_mode(rng, {})), std::invalid_argument);
}

TEST_CASE("one_to_two_mode") {
  const auto net = one_mode({"a", "b", "c"}, {{1, 2}, {2, 3}});
  const auto two = one_to_two_mode(net);
  CHECK(two.two_mode());
  CHECK(two.nodes().size() == 6);
  CHECK(two.links().size() == 2);
  REQUIRE(two.find(1, 3 + 2) != nullptr);
  CHECK(*two.find(1, 5) == *net.find(1, 2));
  CHECK(two.nodes()[5].label == "b");
  CHECK(two.nodes()[5].mode == 2);
  CHECK_THROWS_AS(one_to_two_mode(two), std::invalid_argument);

  const auto undirected = one_mode({"a", "b"}, {{1, 2}}, false);
  CHECK(one_to_two_mode(undirected).links().size() == 2);
}

TEST_CASE("index_by_label") {
  const auto net = one_mode({"x", "y"}, {});
  const auto idx = index_by_label(net);
  CHECK(idx.at("x") == 1);
  CHECK(idx.at("y") == 2);
  CHECK_THROWS_AS((void)idx.at("absent"), LabelNotFound);
  CHECK_FALSE(idx.find("absent").has_value());

  Rng rng(4);
  const auto two = testing::random_two_mode(rng, {});
  for (int mode : {1, 2}) {
    const auto i = index_by_label(two, mode);
    for (NodeId id : two.nodes().ids(mode)) CHECK(i.at(two.nodes()[id].label) == id);
  }
  const auto dup = one_to_two_mode(net);
  CHECK_THROWS_AS(index_by_label(dup), std::invalid_argument);
  CHECK(index_by_label(dup, 2).at("x") == 3);
}

TEST_CASE("kind verification") {
  NodeTable nodes;
  nodes.add("w", 1);
  nodes.add("a", 2);
  const TemporalNetwork cum(nodes, {{1, 2, TemporalQuantity({{2005, 2017, 1}})}}, kH,
                            {true, true, NetworkKind::Cumulative});
  CHECK(satisfies_kind(cum));
  const TemporalNetwork bad(nodes, {{1, 2, TemporalQuantity({{2005, 2010, 1}})}}, kH,
                            {true, true, NetworkKind::Cumulative});
  CHECK_FALSE(satisfies_kind(bad));
  CHECK_THROWS_AS(verify_kind(bad), std::invalid_argument);
  const TemporalNetwork inst(nodes, {{1, 2, TemporalQuantity({{2005, 2006, 1}})}}, kH,
                             {true, true, NetworkKind::Instantaneous});
  CHECK(satisfies_kind(inst));
  CHECK(satisfies_kind(transpose(cum)));
}

TEST_CASE("node activity is the union of incident link activity") {
  const auto net = one_mode({"a", "b", "c"}, {{1, 2}, {3, 1}, {2, 3}});
  CHECK(node_activity(net, 1) == TemporalQuantity({{2001, 2003, 1}}));
  CHECK(node_activity(net, 2) == TemporalQuantity({{2001, 2002, 1}, {2003, 2004, 1}}));
}
