#include "doctest.h"
#include "opetope/generator.hpp"
#include "opetope/network.hpp"
#include "support.hpp"

using namespace opetope;
using support::figure1;

namespace {

Network two_cycle() {
  NetworkData d;
  d.edges = {"e", "f"};
  d.vertices = {"v", "w"};
  d.source = {{"e", "v"}, {"f", "w"}};
  d.target = {{"f", "v"}, {"e", "w"}};
  return Network(d);
}

Network corolla() {
  NetworkData d;
  d.edges = {"x", "y"};
  d.vertices = {"v"};
  d.inputs = {"x"};
  d.outputs = {"y"};
  d.target = {{"x", "v"}};
  d.source = {{"y", "v"}};
  return Network(d);
}

}  // namespace

TEST_CASE("paths") {
  const Network& n2 = figure1().networks[2];
  CHECK(has_path(n2, "i5.5", "o8"));
  CHECK(has_path(n2, "i5", "o8"));
  CHECK_FALSE(has_path(n2, "i5", "i7"));
  CHECK_FALSE(has_path(n2, "o8", "i5"));
  for (const auto& e : n2.edges()) CHECK(has_path(n2, e, e));
  try {
    has_path(n2, "i5", "nope");
    FAIL("expected UnknownEdge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_edge);
  }
  CHECK(upstream_inputs(n2, "o9") == IdSet{"i5", "i6", "i7"});
}

TEST_CASE("paths agree with the closure oracle") {
  std::vector<Network> nets(figure1().networks.begin(), figure1().networks.end());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (auto& n : random_opetope(seed, 4, 30).networks) nets.push_back(n);
  }
  nets.push_back(two_cycle());
  for (const Network& n : nets) {
    const auto reach = support::edge_reach(n);
    std::vector<std::string> es(n.edges().begin(), n.edges().end());
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) CHECK(has_path(n, es[i], es[j]) == (reach[i][j] != 0));
  }
}

TEST_CASE("network classification") {
  const NetworkFlags n0 = classify_network(figure1().networks[0]);
  CHECK(n0.acyclic);
  CHECK(n0.linear);
  CHECK(n0.confluent);
  CHECK(n0.opetopic);
  CHECK(n0.reduced);

  const NetworkFlags n5 = classify_network(figure1().networks[5]);
  CHECK(n5.acyclic);
  CHECK(n5.linear);
  CHECK(n5.confluent);
  CHECK(n5.opetopic);
  CHECK(n5.reduced);

  const NetworkFlags n2 = classify_network(figure1().networks[2]);
  CHECK(n2.opetopic);
  CHECK(n2.reduced);
  CHECK(n2.confluent);
  CHECK_FALSE(n2.linear);

  const NetworkFlags cyc = classify_network(two_cycle());
  CHECK_FALSE(cyc.acyclic);
  CHECK_FALSE(cyc.linear);
  CHECK_FALSE(cyc.confluent);
  CHECK_FALSE(cyc.opetopic);

  // A thin input whose target also receives a non-thin edge is not reduced.
  NetworkData d = figure1().networks[1].data();
  d.thin_edges.insert("i2");
  d.thin_vertices.clear();
  const NetworkFlags fat = classify_network(Network(d));
  CHECK(fat.opetopic);
  CHECK_FALSE(fat.reduced);
}

TEST_CASE("constellations") {
  const OpetopicSequence& s = figure1();
  CHECK(is_constellation(s.networks[1], s.networks[2], s.constellations[1]));
  // Swapping v5 and v7 gives a different opetope: every pulled-back region
  // ({v7}, {v5}, {v6, v5}, {v6, v5, v7}, ...) still has one outgoing edge.
  Constellation swapped = s.constellations[1];
  swapped["v5"] = "i7";
  swapped["v7"] = "i5";
  CHECK(is_constellation(s.networks[1], s.networks[2], swapped));
  // With v5 and v6 swapped, i6 + i7 pulls back to {v5, v7}, which has two
  // outgoing edges o5 and o7.
  swapped = s.constellations[1];
  swapped["v5"] = "i6";
  swapped["v6"] = "i5";
  CHECK_FALSE(is_constellation(s.networks[1], s.networks[2], swapped));

  CHECK(is_constellation(corolla(), Network::single_edge("e"), Constellation{{"v", "e"}}));

  Constellation partial = s.constellations[1];
  partial.erase("v6");
  try {
    is_constellation(s.networks[1], s.networks[2], partial);
    FAIL("expected NotTotal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_total);
  }
}

TEST_CASE("sequence validation") {
  CHECK(validate_sequence(figure1(), true).ok());
  OpetopicSequence point;
  point.networks.push_back(Network::single_edge("e"));
  CHECK(validate_sequence(point, true).ok());

  OpetopicSequence unmarked = figure1();
  NetworkData d = unmarked.networks[1].data();
  d.thin_vertices.erase("v5.5");
  unmarked.networks[1] = Network(d);
  const SequenceReport r = validate_sequence(unmarked, false);
  CHECK_FALSE(r.ok());
  CHECK(r.internal.empty());

  // The bottom network must be linear.
  OpetopicSequence bent = figure1();
  bent.networks.erase(bent.networks.begin());
  bent.constellations.erase(bent.constellations.begin());
  CHECK_FALSE(validate_sequence(bent, false).ok());
}

TEST_CASE("network construction rejects dangling references") {
  NetworkData d;
  d.edges = {"e"};
  d.inputs = {"e"};
  d.outputs = {"e"};
  d.source = {{"e", "ghost"}};
  CHECK_THROWS_AS(Network{d}, Error);
}
