#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "graphstab/codec.hpp"
#include "graphstab/corpus.hpp"
#include "graphstab/errors.hpp"
#include "oracles.hpp"

using namespace graphstab;

namespace {

std::size_t offset_of(std::string_view record) {
  try {
    parse_graph6(record);
  } catch (const CodecError& e) {
    return e.offset();
  }
  FAIL("expected a codec error");
  return 0;
}

}  // namespace

TEST_CASE("graph6 basics") {
  CHECK(encode_graph6(fx::k1()) == "@");
  CHECK(encode_graph6(Graph()) == "?");
  CHECK(parse_graph6("?").is_null());
  CHECK(encode_graph6(fx::k2()) == "A_");
  CHECK(parse_graph6("Bw") == fx::k3());
}

TEST_CASE("graph6 agrees with the reference decoder") {
  // A 5-vertex record plus the whole n <= 5 corpus.
  const auto ref = oracle::decode_graph6("D?{");
  REQUIRE(ref);
  CHECK(parse_graph6("D?{") == oracle::to_graph(*ref));
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : labelled_graphs(n)) {
      const std::string s = encode_graph6(g);
      const auto decoded = oracle::decode_graph6(s);
      REQUIRE(decoded);
      CHECK(oracle::to_graph(*decoded) == g);
      CHECK(parse_graph6(s) == g);
    }
  }
}

TEST_CASE("graph6 exhaustive corpus is in ascending string order") {
  const auto graphs = labelled_graphs(4);
  for (std::size_t i = 1; i < graphs.size(); ++i) CHECK(encode_graph6(graphs[i - 1]) < encode_graph6(graphs[i]));
}

TEST_CASE("graph6 round trip on random graphs up to the order limit") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 63);
    EdgeSet e;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (rng() % 3 == 0) e.push_back({u, v});
    const Graph g(n, e);
    const std::string s = encode_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(encode_graph6(parse_graph6(s)) == s);
    CHECK(oracle::to_graph(*oracle::decode_graph6(s)) == g);
  }
  CHECK_THROWS_AS(encode_graph6(Graph(63)), InputError);
}

TEST_CASE("graph6 errors carry byte offsets") {
  CHECK(offset_of("") == 0);
  CHECK(offset_of("~??") == 0);
  CHECK(offset_of("D?") == 2);    // truncated: 5 vertices need two data bytes
  CHECK(offset_of("Bw?") == 2);   // trailing byte
  CHECK(offset_of("B ") == 1);    // byte below 63
  CHECK(offset_of("Bx") == 1);    // padding bits set
}

TEST_CASE("graph6 text files") {
  const auto graphs = parse_graph6_text(">>graph6<<Bw\n\nA_\r\n@\n");
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == fx::k3());
  CHECK(graphs[1] == fx::k2());
  CHECK(graphs[2] == fx::k1());
  try {
    parse_graph6_text("Bw\nB!\n");
    FAIL("expected a codec error");
  } catch (const CodecError& e) {
    CHECK(e.offset() == 4);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("edge lists") {
  const Graph c3 = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
  CHECK(c3 == fx::k3());
  CHECK(parse_edge_list(encode_edge_list(fx::c(5))) == fx::c(5));
  CHECK(parse_edge_list("0 0\n").is_null());
  CHECK_THROWS(parse_edge_list("3 2\n0 1\n"));
  CHECK_THROWS(parse_edge_list("3 1\n0 x\n"));
  CHECK_THROWS(parse_edge_list("3 1\n0 3\n"));
  CHECK_THROWS(parse_edge_list("3 1\n1 1\n"));
}
