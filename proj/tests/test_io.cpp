#include "doctest.h"
#include "opetope/io.hpp"
#include "opetope/predicates.hpp"
#include "opetope/transduce.hpp"
#include "support.hpp"

using namespace opetope;
using support::fixture_path;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

// Edge statements ("a" -> "b") per cluster, in order of appearance.
std::vector<int> arrows_per_cluster(const std::string& dot) {
  std::vector<int> counts;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("subgraph") != std::string::npos) counts.push_back(0);
    if (line.find(" -> ") != std::string::npos) ++counts.back();
  }
  return counts;
}

}  // namespace

TEST_CASE("fixtures are canonical") {
  const std::string t = read_file(fixture_path("table1.odc"));
  const ComplexDocument d = parse_complex(t);
  CHECK(d.name == "table1");
  CHECK(serialize_complex(d.complex, d.name) == t);
  CHECK(classify(d.complex).reduced);

  const std::string f = read_file(fixture_path("figure1.ops"));
  const SequenceDocument s = parse_sequence(f);
  CHECK(serialize_sequence(s.sequence, s.name) == f);
  CHECK(validate_sequence(s.sequence, true).ok());
  CHECK(detect_document(t) == DocumentKind::complex);
  CHECK(detect_document(f) == DocumentKind::sequence);
}

TEST_CASE("serialization canonicalizes") {
  const std::string messy = R"({"basis": [
      {"id": "g", "dim": 1, "d_plus": [["y", 1]], "d_minus": [["x", "1"]]},
      {"id": "y", "dim": 0},
      {"id": "x", "dim": 0, "thin": false, "epsilon": 1}
    ], "name": "arrow"})";
  const std::string canon = serialize_complex(parse_complex(messy).complex, "arrow");
  CHECK(canon ==
        "{\n  \"name\": \"arrow\",\n  \"basis\": [\n"
        "    {\"id\":\"x\",\"dim\":0,\"thin\":false,\"epsilon\":1},\n"
        "    {\"id\":\"y\",\"dim\":0,\"thin\":false,\"epsilon\":1},\n"
        "    {\"id\":\"g\",\"dim\":1,\"thin\":false,\"d_minus\":[[\"x\",1]],\"d_plus\":[[\"y\",1]]}\n"
        "  ]\n}\n");
  CHECK(serialize_complex(parse_complex(canon).complex, "arrow") == canon);

  const Complex big = parse_complex(R"({"name":"b","basis":[{"id":"p","dim":0,"epsilon":"123456789012345678901234567890"}]})").complex;
  CHECK(big.cell("p").epsilon == Coefficient("123456789012345678901234567890"));
  CHECK(serialize_complex(big, "b").find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("parse errors") {
  const std::string neg =
      R"({"name":"n","basis":[{"id":"x","dim":0},{"id":"y","dim":0},)"
      R"({"id":"g","dim":1,"d_minus":[["x",1]],"d_plus":[["y",-1]]}]})";
  CHECK(code_of([&] { parse_complex(neg); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { parse_complex("{\"name\": \"x\",\n \"basis\": [}"); }) == ErrorCode::parse_error);
  try {
    parse_complex("{\"name\": \"x\",\n \"basis\": [}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  const std::string unknown_field = R"({"name":"n","basis":[{"id":"x","dim":0,"colour":"red"}]})";
  try {
    parse_complex(unknown_field);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("basis[0]") != std::string::npos);
  }
  const std::string dangling = R"({"name":"n","basis":[{"id":"x","dim":0},)"
                               R"({"id":"g","dim":1,"d_minus":[["x",1]],"d_plus":[["nope",1]]}]})";
  CHECK(code_of([&] { parse_complex(dangling); }) == ErrorCode::reference_error);
  CHECK(code_of([&] { parse_complex(R"({"name":"n","basis":[{"id":"a/b","dim":0}]})"); }) ==
        ErrorCode::parse_error);
}

TEST_CASE("sequence parse errors") {
  // v maps to the output edge of the next level, which is not an input.
  const std::string bad_const =
      R"({"name":"s","networks":[)"
      R"({"edges":["x","y"],"vertices":["v"],"inputs":["x"],"outputs":["y"],"source":[["y","v"]],"target":[["x","v"]],"thin_edges":[],"thin_vertices":[]},)"
      R"({"edges":["a","b"],"vertices":["w"],"inputs":["a"],"outputs":["b"],"source":[["b","w"]],"target":[["a","w"]],"thin_edges":[],"thin_vertices":[]}],)"
      R"("constellations":[[["v","b"]]]})";
  CHECK(code_of([&] { parse_sequence(bad_const); }) == ErrorCode::reference_error);
  const std::string few =
      R"({"name":"s","networks":[)"
      R"({"edges":["g"],"vertices":[],"inputs":["g"],"outputs":["g"],"source":[],"target":[],"thin_edges":[],"thin_vertices":[]}],)"
      R"("constellations":[[]]})";
  CHECK(code_of([&] { parse_sequence(few); }) == ErrorCode::parse_error);
  CHECK(code_of([&] { detect_document("[1, 2]"); }) == ErrorCode::parse_error);
}

TEST_CASE("DOT output") {
  const std::string dot = to_dot(support::figure1(), "figure1");
  CHECK(arrows_per_cluster(dot) == std::vector<int>{4, 7, 10, 10, 5, 1});
  CHECK(dot == to_dot(support::figure1(), "figure1"));
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("fillcolor=white") != std::string::npos);
  CHECK(dot.find("rank=min") != std::string::npos);

  const std::string single = to_dot(Network::single_edge("e"), "edge");
  CHECK(arrows_per_cluster(single) == std::vector<int>{1});
  CHECK(single.find("shape=circle") == std::string::npos);

  const std::string odd = to_dot(Network::single_edge("e"), "say \"hi\"");
  CHECK(odd.find("digraph \"say \\\"hi\\\"\"") != std::string::npos);
}

TEST_CASE("networks of table1 serialize to a valid document") {
  const std::string text = serialize_sequence(networks_of(support::table1()), "t");
  const SequenceDocument back = parse_sequence(text);
  CHECK(serialize_sequence(back.sequence, "t") == text);
  CHECK(validate_sequence(back.sequence, true).ok());
}
