#include "doctest.h"

#include "error.hpp"
#include "graph/winding.hpp"
#include "io/commands.hpp"
#include "io/corpus.hpp"
#include "io/graph_file.hpp"
#include "support/graphs.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace fukaya;
using graph::FramedGraph;

namespace {

std::string message_of(const std::string& text) {
  try {
    io::parse_graph(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorCode code_of(const std::string& text) {
  try {
    io::parse_graph(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const char* kTorus = R"({
  "name": "torus",
  "vertices": [{"id": "v", "halfedges": ["a", "b", "abar", "bbar"]}],
  "edges": [["a", "abar"], ["b", "bbar"]]
})";

// Temporary directory removed on scope exit.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() / ("fukaya_io_" + tag + "_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path / name) << text; }
};

}  // namespace

TEST_CASE("parse a torus file") {
  const auto g = io::parse_graph(kTorus);
  CHECK(g.name() == "torus");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.legs().empty());
  for (std::size_t h = 0; h < g.halfedge_count(); ++h) CHECK(g.offset(static_cast<int>(h)) == 0);
  CHECK(g.edge_id(0) == "e1");
  CHECK(g.find_edge("abar") == g.find_edge("e1"));
}

TEST_CASE("line-anchored parse errors") {
  const std::string twice = R"({
  "name": "bad",
  "vertices": [
    {"id": "v", "halfedges": ["a", "b"]},
    {"id": "w", "halfedges": ["b"]}
  ],
  "edges": []
})";
  CHECK(message_of(twice) == "line 5: half-edge 'b' appears more than once in the vertex lists");
  CHECK(code_of(twice) == ErrorCode::InvalidGraph);

  const std::string empty_vertex = "{\"name\": \"x\",\n\"vertices\": [\n{\"id\": \"v\",\n \"halfedges\": []}],\n\"edges\": []}";
  CHECK(message_of(empty_vertex) == "line 4: vertex 'v' has valency 0");

  const std::string unknown = "{\"name\": \"x\", \"vertices\": [{\"id\": \"v\", \"halfedges\": [\"a\"]}],\n\"edges\": [[\"a\",\n\"zz\"]]}";
  CHECK(message_of(unknown) == "line 3: edge refers to unknown half-edge 'zz'");

  const std::string reused = "{\"name\": \"x\", \"vertices\": [{\"id\": \"v\", \"halfedges\": [\"a\", \"b\", \"c\"]}],\n"
                             "\"edges\": [[\"a\", \"b\"],\n[\"b\", \"c\"]]}";
  CHECK(message_of(reused) == "line 3: half-edge 'b' is paired more than once");

  const std::string dup_vertex = "{\"name\": \"x\", \"vertices\": [{\"id\": \"v\", \"halfedges\": [\"a\"]},\n"
                                 "{\"id\": \"v\", \"halfedges\": [\"b\"]}], \"edges\": []}";
  CHECK(message_of(dup_vertex) == "line 2: duplicate vertex id 'v'");

  const std::string odd = "{\"name\": \"x\", \"vertices\": [{\"id\": \"v\", \"halfedges\": [\"a\"]}], \"edges\": [],\n"
                          "\"framing\": {\n\"a\": 3}}";
  CHECK(message_of(odd) == "line 3: framing offset of 'a' must be even");

  CHECK(message_of("{\"name\": \"x\",\n\"vertices\": [}").rfind("line 2: malformed JSON", 0) == 0);
  CHECK(code_of("{\"name\": \"x\",\n\"vertices\": [}") == ErrorCode::InvalidInput);
  CHECK(message_of("{\"vertices\": [], \"edges\": []}") == "line 1: missing field 'name'");
  CHECK(message_of("{\"name\": \"x\", \"vertices\": [],\n \"edges\": [], \"extra\": 1}") == "line 2: unknown field 'extra'");
  CHECK(message_of("{\"name\": \"x\", \"vertices\": [{\"id\": 3, \"halfedges\": [\"a\"]}], \"edges\": []}") ==
        "line 1: vertex id must be a string");
  CHECK(message_of("[1, 2]") == "line 1: graph document must be a JSON object");
}

TEST_CASE("rotations are normalized on load") {
  const auto rotated = io::parse_graph(R"({"name": "t", "vertices": [{"id": "v", "halfedges": ["b", "abar", "bbar", "a"]}],
    "edges": [["a", "abar"], ["b", "bbar"]]})");
  const auto spec = rotated.to_spec();
  CHECK(spec.vertices[0].halfedges == std::vector<std::string>{"a", "b", "abar", "bbar"});
  // The rotation is compensated, so walks keep their winding numbers.
  const std::vector<std::string> walk{"a", "b"};
  CHECK(graph::winding_number(rotated, walk) ==
        graph::winding_number(FramedGraph::build(graph::GraphSpec{"t", {{"v", {"b", "abar", "bbar", "a"}}},
                                                                  {{"a", "abar"}, {"b", "bbar"}}, {}, {}}),
                              walk));
}

TEST_CASE("serialize and parse round trip") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto spec = testing::random_framing(testing::random_graph(rng, 5, 4, 3), rng);
    const auto g = io::parse_graph(io::serialize_graph(FramedGraph::build(spec)));
    const auto text = io::serialize_graph(g);
    CHECK(io::serialize_graph(io::parse_graph(text)) == text);
    CHECK(io::parse_graph(text).to_spec().vertices.size() == spec.vertices.size());
  }
  CHECK(io::serialize_graph(io::parse_graph(kTorus)).find("framing") == std::string::npos);
}

TEST_CASE("coefficient and object arguments") {
  CHECK(io::parse_coefficients("z") == algebra::RingSpec::integers());
  CHECK(io::parse_coefficients("q") == algebra::RingSpec::rationals());
  CHECK(io::parse_coefficients("f7") == algebra::RingSpec::prime_field(7));
  for (const char* bad : {"f4", "f", "r", "f7x", ""}) CHECK_THROWS_AS(io::parse_coefficients(bad), Error);
  CHECK(io::parse_scalar(mf::Grading::Z2, 2, "0,0,l") == mf::ScalarMF::make(mf::Grading::Z2, 2, 0, 0, mf::Variant::L));
  CHECK_THROWS_AS(io::parse_scalar(mf::Grading::Z2, 2, "0,x"), Error);
  CHECK_THROWS_AS(io::parse_scalar(mf::Grading::Z2, 2, "0,1,q"), Error);
  CHECK(io::parse_scalar(mf::Grading::Z2, 2, "[1,1]_r") == mf::ScalarMF::make(mf::Grading::Z2, 2, 1, 1, mf::Variant::R));
  CHECK(io::parse_scalar(mf::Grading::Z2, 2, "[0,2]") == mf::ScalarMF::make(mf::Grading::Z2, 2, 0, 2));
  CHECK_THROWS_AS(io::parse_scalar(mf::Grading::Z2, 2, "[0,2"), Error);
  CHECK_THROWS_AS(io::parse_scalar(mf::Grading::Z2, 2, "[0,2]_q"), Error);
  CHECK(io::split_ids("a,b") == std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(io::split_ids("a,,b"), Error);
  CHECK_THROWS_AS(io::split_ids("a,"), Error);
}

TEST_CASE("command texts") {
  const auto torus = io::parse_graph(kTorus);
  const auto report = io::verify_main_report(torus, algebra::RingSpec::integers());
  REQUIRE(report.rows().size() == 1);
  CHECK(report.rows()[0].side_a == "(Z^2, Z)");
  CHECK(report.rows()[0].side_b == "(Z^2, Z)");
  CHECK(report.exit_code() == 0);
  CHECK(report.to_tsv() == "graph\tcheck\tsideA\tsideB\tverdict\ntorus\tmain Z\t(Z^2, Z)\t(Z^2, Z)\tpass\n");

  const auto loopleg = FramedGraph::build(testing::loopleg());
  CHECK(io::homology_text(loopleg, algebra::RingSpec::rationals(), true) == "HP_even = Q\nHP_odd = 0\n");
  CHECK(io::homology_text(FramedGraph::build(testing::corolla(4)), algebra::RingSpec::integers(), false) ==
        "H0 = Z^3\nH1 = 0\n");

  const auto kron = FramedGraph::build(testing::kronecker());
  CHECK(io::verify_contract_report(kron, "e1", algebra::RingSpec::integers()).passed());
  CHECK_THROWS_AS(io::verify_contract_report(kron, "nope", algebra::RingSpec::integers()), Error);
  const auto loc = io::verify_localize_report(kron, {"v"}, algebra::RingSpec::integers());
  CHECK(loc.rows().size() == 3);
  CHECK(loc.passed());

  const std::string info = io::info_text(torus);
  CHECK(info.find("genus 1, boundary circles 0") != std::string::npos);
  CHECK(info.find("stable") != std::string::npos);

  const auto z2 = io::mf_hom_text(mf::Grading::Z2, 1, mf::ScalarMF::make(mf::Grading::Z2, 1, 0, 1),
                                  mf::ScalarMF::make(mf::Grading::Z2, 1, 0, 1), 0);
  CHECK(z2.find("H^0 = Q[w]/(w)") != std::string::npos);
  CHECK(z2.find("H^1 = 0") != std::string::npos);
}

TEST_CASE("report rendering") {
  io::Report r;
  r.add({"g", "a\tb", "x\ny", "z", statesum::Verdict::SkipUnstable});
  CHECK(r.to_tsv() == "graph\tcheck\tsideA\tsideB\tverdict\ng\ta b\tx y\tz\tskip-unstable\n");
  CHECK(r.exit_code() == 0);
  r.add({"g", "c", "1", "2", statesum::Verdict::Fail});
  CHECK(r.exit_code() == 1);
  CHECK(r.to_text().find("skip-unstable") != std::string::npos);
}

TEST_CASE("corpus runner") {
  const auto serial = io::corpus_verify(FUKAYA_CORPUS_DIR, false);
  const auto parallel = io::corpus_verify(FUKAYA_CORPUS_DIR, true);
  CHECK(serial.to_tsv() == parallel.to_tsv());
  CHECK(serial.to_tsv() == io::corpus_verify(FUKAYA_CORPUS_DIR, false).to_tsv());
  for (const auto& row : serial.rows()) {
    CAPTURE(row.graph);
    CAPTURE(row.check);
    CAPTURE(row.side_b);
    CHECK(row.verdict == statesum::Verdict::Pass);
  }
  CHECK(serial.exit_code() == 0);

  TempDir empty("empty");
  CHECK(io::corpus_verify(empty.path.string(), false).rows().empty());
  CHECK(io::corpus_verify(empty.path.string(), false).exit_code() == 0);

  TempDir mixed("mixed");
  mixed.write("a_torus.json", kTorus);
  mixed.write("b_broken.json", "{\"name\": \"broken\",\n \"vertices\": [");
  mixed.write("notes.txt", "ignored");
  const auto report = io::corpus_verify(mixed.path.string(), true);
  CHECK(report.exit_code() == 1);
  std::size_t failing = 0;
  for (const auto& row : report.rows()) {
    if (row.verdict != statesum::Verdict::Fail) continue;
    ++failing;
    CHECK(row.graph == "b_broken.json");
    CHECK(row.check == "load");
  }
  CHECK(failing == 1);
  CHECK(report.rows().front().graph == "torus");

  CHECK_THROWS_AS(io::corpus_verify((mixed.path / "missing").string(), false), Error);
  CHECK(io::fnv1a("") == 14695981039346656037ULL);
  CHECK(io::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
