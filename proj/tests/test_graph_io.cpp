#include <doctest.h>

#include "specham/families.hpp"
#include "specham/graph_io.hpp"
#include "specham/rng.hpp"

using namespace specham;

TEST_CASE("graph6 hand-encoded cases") {
  Graph k3 = parse_graph6("Bw");
  CHECK(k3 == build_complete(3));
  CHECK(write_graph6(build_complete(3)) == "Bw");
  // single vertex
  CHECK(parse_graph6("@").n() == 1);
  CHECK(write_graph6(build_edgeless(1)) == "@");
}

TEST_CASE("graph6 round trip on generated graphs") {
  Rng rng(2024);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(rng, rng.uniform_int(1, 70), 350000);
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
    CHECK(write_graph6(parse_graph6(write_graph6(g))) == write_graph6(g));
  }
  for (int k = 1; k <= 3; ++k) {
    auto built = build_extremal({Family::M, k, 3 * k + 2});
    CHECK(parse_graph6(write_graph6(built.graph)) == built.graph);
  }
}

TEST_CASE("graph6 long form") {
  Graph g = build_complete(2);
  Graph big(100);
  for (int i = 0; i + 1 < 100; ++i) big.add_edge(i, i + 1);
  std::string enc = write_graph6(big);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc) == big);
}

TEST_CASE("graph6 optional header prefix") {
  CHECK(parse_graph6(">>graph6<<Bw") == build_complete(3));
  CHECK(parse_graph6("Bw\n") == build_complete(3));
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // missing body
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);    // body too long
  CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError);  // character below range
  CHECK_THROWS_AS(parse_graph6("~B"), ParseError);     // truncated long header
  // nonzero padding: K_2 is "A_" (bit 1 then zero padding); "A" + char with low bits set
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
}

TEST_CASE("edge list parsing") {
  Graph p3 = parse_edge_list("0 1\n1 2");
  CHECK(p3.n() == 3);
  CHECK(p3.m() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK_FALSE(p3.has_edge(0, 2));

  Graph with_comment = parse_edge_list("# a path\n0 1\n\n1 2\n");
  CHECK(with_comment == p3);

  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);

  // vertex-count hint preserves trailing isolated vertices
  Graph hinted = parse_edge_list("# vertices: 4\n0 1\n");
  CHECK(hinted.n() == 4);
  Graph round = parse_edge_list(write_edge_list(hinted));
  CHECK(round == hinted);
}
