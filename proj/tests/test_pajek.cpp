#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tqnet/algebra.hpp"
#include "tqnet/pajek.hpp"

using namespace tqnet;
using namespace tqnet::pajek;
using tqnet::testing::Rng;

namespace {

StaticNetwork parse(const std::string& text) {
  std::istringstream in(text);
  return parse_net(in);
}

TimePartition parse_part(const std::string& text) {
  std::istringstream in(text);
  return parse_clu(in);
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

StaticNetwork random_affiliation(Rng& rng, std::size_t works, std::size_t authors,
                                 double density) {
  std::uniform_real_distribution<double> unit(0, 1);
  StaticNetwork net;
  net.rows = works;
  for (std::size_t w = 0; w < works; ++w) net.labels.push_back("w" + std::to_string(w));
  for (std::size_t a = 0; a < authors; ++a) net.labels.push_back("a" + std::to_string(a));
  for (std::size_t w = 0; w < works; ++w)
    for (std::size_t a = 0; a < authors; ++a)
      if (unit(rng) < density)
        net.links.push_back({static_cast<NodeId>(w + 1),
                             static_cast<NodeId>(works + a + 1), 1.0, true});
  return net;
}

}  // namespace

TEST_CASE("parse a two-mode network") {
  const auto net = parse(
      "% works and authors\n"
      "*Vertices 3 2\n"
      "1 \"w1\"\n"
      "2 \"w2\"\n"
      "3 \"a1\"\n"
      "\n"
      "*Arcs\n"
      "1 3\n"
      "2 3\n");
  CHECK(net.two_mode());
  CHECK(net.rows == 2);
  CHECK(net.labels == std::vector<std::string>{"w1", "w2", "a1"});
  CHECK(net.links == std::vector<StaticLink>{{1, 3, 1.0, true}, {2, 3, 1.0, true}});
}

TEST_CASE("parse edges, labels and defaults") {
  const auto net = parse("*vertices 3\n1 \"New York\"\n2 bare\n*edges\n1 2 2.5\n");
  CHECK_FALSE(net.two_mode());
  CHECK(net.labels == std::vector<std::string>{"New York", "bare", "3"});
  REQUIRE(net.links.size() == 1);
  CHECK(net.links[0].weight == 2.5);
  CHECK_FALSE(net.links[0].directed);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("*vertices x\n") == 1);
  CHECK(error_line("*vertices 2\n1 a\n1 b\n") == 3);
  CHECK(error_line("*vertices 2\n*arcs\n1 2\n1 5\n") == 4);
  CHECK(error_line("*vertices 2\n*arcs\n1\n") == 3);
  CHECK(error_line("*vertices 2\n*matrix\n") == 2);
  CHECK(error_line("*arcs\n1 2\n") == 1);
  CHECK(error_line("*vertices 3 2\n*arcs\n3 1\n") == 3);
  CHECK(error_line("*vertices 2\n*arcs\n1 2 abc\n") == 3);
  CHECK(error_line("*vertices 2\n*arcs\n1 2\n") == 0);
}

TEST_CASE("write_net round-trips 1000 random arcs") {
  Rng rng(7);
  StaticNetwork net;
  for (int i = 0; i < 200; ++i) net.labels.push_back("v " + std::to_string(i));
  std::uniform_int_distribution<NodeId> pick(1, 200);
  std::uniform_int_distribution<int> w(1, 4);
  for (int k = 0; k < 1000; ++k) net.links.push_back({pick(rng), pick(rng), w(rng) * 0.5, true});
  net.links.push_back({3, 4, 1.0, false});
  std::ostringstream out;
  write_net(out, net);
  CHECK(parse(out.str()) == net);

  const auto two = random_affiliation(rng, 30, 20, 0.2);
  std::ostringstream out2;
  write_net(out2, two);
  CHECK(parse(out2.str()) == two);
}

TEST_CASE("parse_clu") {
  CHECK(parse_part("*vertices 2\n2005\n2006\n").years == std::vector<Time>{2005, 2006});
  CHECK(parse_part("*Vertices 0\n").years.empty());
  CHECK(parse_part("%c\n*vertices 3\n1\n\n2\n 3 \n").years == std::vector<Time>{1, 2, 3});
  CHECK_THROWS_AS(parse_part("*vertices 3\n1\n2\n"), ParseError);
  CHECK_THROWS_AS(parse_part("*vertices 1\nx\n"), ParseError);

  Rng rng(8);
  std::uniform_int_distribution<Time> year(1990, 2020);
  for (int trial = 0; trial < 20; ++trial) {
    TimePartition p;
    for (int i = 0; i < trial * 7; ++i) p.years.push_back(year(rng));
    std::ostringstream out;
    write_clu(out, p);
    CHECK(parse_part(out.str()) == p);
  }
}

TEST_CASE("temporalize a single affiliation link") {
  StaticNetwork net{{"e", "p"}, 1, {{1, 2, 1.0, true}}};
  const TimePartition part{{2005}};
  const auto inst = temporalize_two_mode(net, part, {Temporalization::Instantaneous, {}, 2016});
  CHECK(*inst.network.find(1, 2) == TemporalQuantity({{2005, 2006, 1}}));
  CHECK(inst.network.kind() == NetworkKind::Instantaneous);
  CHECK(inst.network.horizon() == TimeHorizon(2005, 2016));
  const auto cum = temporalize_two_mode(net, part, {Temporalization::Cumulative, {}, 2016});
  CHECK(*cum.network.find(1, 2) == TemporalQuantity({{2005, 2017, 1}}));
  CHECK(cum.network.kind() == NetworkKind::Cumulative);

  StaticNetwork cite{{"u", "v"}, 0, {{1, 2, 1.0, true}}};
  const TimePartition years{{2010, 2003}};
  const auto ci = temporalize_one_mode(cite, years, {Temporalization::Instantaneous, {}, 2016});
  CHECK(*ci.network.find(1, 2) == TemporalQuantity({{2010, 2011, 1}}));
  const auto cc = temporalize_one_mode(cite, years, {Temporalization::Cumulative, {}, 2016});
  CHECK(*cc.network.find(1, 2) == TemporalQuantity({{2010, 2017, 1}}));
}

TEST_CASE("temporalization skips undated or out-of-range events") {
  StaticNetwork net{{"e1", "e2", "e3", "p"}, 3, {{1, 4, 1, true}, {2, 4, 1, true}, {3, 4, 1, true}}};
  const TimePartition part{{2005, 0, 2020}};
  const auto r = temporalize_two_mode(net, part, {Temporalization::Instantaneous, 2000, 2016});
  CHECK(r.input_links == 3);
  CHECK(r.skipped_links == 2);
  CHECK(r.warnings.size() == 2);
  CHECK(r.network.links().size() == 1);

  const auto derived = temporalize_two_mode(net, part);
  CHECK(derived.network.horizon() == TimeHorizon(2005, 2020));
  CHECK(derived.skipped_links == 1);

  CHECK_THROWS_AS(temporalize_two_mode(net, TimePartition{{2005}}), std::invalid_argument);
}

TEST_CASE("temporalization definitions on random affiliations") {
  Rng rng(9);
  std::uniform_int_distribution<Time> year(2000, 2010);
  std::uniform_int_distribution<int> zero(0, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto net = random_affiliation(rng, 25, 15, 0.15);
    TimePartition part;
    for (std::size_t w = 0; w < 25; ++w) part.years.push_back(zero(rng) == 0 ? 0 : year(rng));
    if (trial % 2 == 1)
      for (std::size_t a = 0; a < 15; ++a) part.years.push_back(0);

    TemporalizeOptions io{Temporalization::Instantaneous, 2001, 2009};
    TemporalizeOptions co{Temporalization::Cumulative, 2001, 2009};
    const auto inst = temporalize_two_mode(net, part, io);
    const auto cum = temporalize_two_mode(net, part, co);
    CHECK(inst.skipped_links + inst.network.links().size() == inst.input_links);
    CHECK(inst.input_links == net.links.size());

    std::map<Time, std::map<NodeId, Value>> degree;  // year -> author -> count
    for (const auto& l : net.links) {
      const Time d = part.years[l.tail - 1];
      const auto* qi = inst.network.find(l.tail, l.head);
      const auto* qc = cum.network.find(l.tail, l.head);
      if (d == 0 || d < 2001 || d > 2009) {
        CHECK(qi == nullptr);
        CHECK(qc == nullptr);
        continue;
      }
      degree[d][l.head] += 1;
      REQUIRE(qi != nullptr);
      REQUIRE(qc != nullptr);
      CHECK(*qi == TemporalQuantity({{d, d + 1, 1}}));
      CHECK(*qc == TemporalQuantity({{d, 2010, 1}}));
      CHECK(*qc == cumulate(*qi, cum.network.horizon()));
    }
    for (NodeId a : inst.network.col_ids()) {
      const auto s = in_sum(inst.network, a);
      for (Time t = 2001; t <= 2009; ++t) {
        const auto it = degree[t].find(a);
        if (it == degree[t].end()) {
          CHECK_FALSE(s.at(t).has_value());
        } else {
          CHECK(s.at(t) == it->second);
        }
      }
    }
  }
}

TEST_CASE("one-mode temporalization of a random DAG") {
  Rng rng(10);
  std::uniform_int_distribution<Time> year(2000, 2016);
  for (int trial = 0; trial < 20; ++trial) {
    StaticNetwork net;
    TimePartition part;
    for (int i = 0; i < 30; ++i) {
      net.labels.push_back("w" + std::to_string(i));
      part.years.push_back(year(rng));
    }
    std::uniform_int_distribution<NodeId> pick(1, 30);
    std::size_t arcs = 0;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (int k = 0; k < 60; ++k) {
      NodeId u = pick(rng), v = pick(rng);
      if (u <= v || !seen.insert({u, v}).second) continue;
      net.links.push_back({u, v, 1.0, true});
      ++arcs;
    }
    const auto r = temporalize_one_mode(net, part);
    CHECK(r.skipped_links == 0);
    Value all = 0;
    for (const Link& l : r.network.links()) all += total(l.quantity);
    CHECK(all == static_cast<Value>(arcs));
  }
}

TEST_CASE("parallel arcs merge at temporalization") {
  StaticNetwork net{{"e", "p"}, 1, {{1, 2, 1.0, true}, {1, 2, 2.0, true}}};
  const auto r = temporalize_two_mode(net, TimePartition{{2005}});
  CHECK(r.network.links().size() == 1);
  CHECK(*r.network.find(1, 2) == TemporalQuantity({{2005, 2006, 3}}));
}
