#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "tgl/graphs.hpp"

using namespace tgl;

TEST_CASE("pair bit order matches the column-wise upper triangle") {
  CHECK(pair_bit(0, 1) == 0);
  CHECK(pair_bit(0, 2) == 1);
  CHECK(pair_bit(1, 2) == 2);
  CHECK(pair_bit(0, 3) == 3);
  CHECK(pair_bit(2, 3) == 5);
}

TEST_CASE("graph6 anchors") {
  SimpleGraph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count == 2);
  CHECK(k2.edges == std::vector<std::pair<int, int>>{{0, 1}});

  SimpleGraph c3 = parse_graph6("Bw");
  CHECK(c3.vertex_count == 3);
  CHECK(c3.edges.size() == 3);

  SimpleGraph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count == 4);
  CHECK(k4.edges.size() == 6);

  SimpleGraph empty1 = parse_graph6("@");
  CHECK(empty1.vertex_count == 1);
  CHECK(empty1.edges.empty());

  CHECK(emit_graph6(k2) == "A_");
  CHECK(emit_graph6(c3) == "Bw");
  CHECK(emit_graph6(k4) == "C~");
}

TEST_CASE("graph6 round trip on everything we enumerate") {
  for (int n = 3; n <= 6; ++n) {
    for (const SimpleGraph& g : enumerate_biconnected(n)) {
      std::string s = emit_graph6(g);
      CHECK(parse_graph6(s) == g);
    }
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), std::runtime_error);
  CHECK_THROWS_AS(parse_graph6("Bw "), std::runtime_error);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("B"), std::runtime_error);     // truncated
  CHECK_THROWS_AS(parse_graph6("~??"), std::runtime_error);   // multi-byte order
  CHECK_THROWS_AS(parse_graph6("B\x1f"), std::runtime_error); // byte below offset
  CHECK_THROWS_AS(parse_graph6("J??????????"), std::domain_error);  // order 11 is out of scope
}

TEST_CASE("graph6 file reader skips header and blank lines") {
  std::string path = "graphs_tmp_test.g6";
  {
    std::ofstream out(path);
    out << ">>graph6<<\n" << "Bw\n" << "\n" << "A_\r\n";
  }
  auto gs = read_graph6_file(path);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].vertex_count == 3);
  CHECK(gs[1].vertex_count == 2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph6_file("no_such_file.g6"), std::runtime_error);
}

TEST_CASE("connectivity and biconnectivity") {
  SimpleGraph p3 = make_simple_graph(3, {{0, 1}, {1, 2}});
  CHECK(is_connected_graph(p3));
  CHECK_FALSE(is_biconnected(p3));

  SimpleGraph c3 = make_simple_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_biconnected(c3));

  SimpleGraph disconnected = make_simple_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected_graph(disconnected));

  // bowtie: two triangles sharing a cut vertex
  SimpleGraph bowtie =
      make_simple_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(is_connected_graph(bowtie));
  CHECK_FALSE(is_biconnected(bowtie));

  SimpleGraph k2 = make_simple_graph(2, {{0, 1}});
  CHECK(is_connected_graph(k2));
  CHECK_FALSE(is_biconnected(k2));  // fewer than three vertices
}

TEST_CASE("make_simple_graph validation") {
  CHECK_THROWS_AS(make_simple_graph(2, {{0, 0}}), std::domain_error);
  CHECK_THROWS_AS(make_simple_graph(2, {{0, 2}}), std::domain_error);
  CHECK_THROWS_AS(make_simple_graph(3, {{0, 1}, {1, 0}}), std::domain_error);
  SimpleGraph g = make_simple_graph(3, {{2, 0}, {1, 0}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("enumeration counts match the literature") {
  CHECK(enumerate_biconnected(3).size() == 1);
  CHECK(enumerate_biconnected(4).size() == 3);
  CHECK(enumerate_biconnected(5).size() == 10);
  CHECK(enumerate_biconnected(6).size() == 56);

  CHECK(enumerate_connected(1).size() == 1);
  CHECK(enumerate_connected(2).size() == 1);
  CHECK(enumerate_connected(3).size() == 2);
  CHECK(enumerate_connected(4).size() == 6);
  CHECK(enumerate_connected(5).size() == 21);

  CHECK_THROWS_AS(enumerate_biconnected(2), std::domain_error);
  CHECK_THROWS_AS(enumerate_biconnected(8), std::domain_error);
}

TEST_CASE("the min-orbit and max-orbit enumerations agree") {
  for (int n = 3; n <= 6; ++n) {
    auto lo = enumerate_biconnected(n, false);
    auto hi = enumerate_biconnected(n, true);
    REQUIRE(lo.size() == hi.size());
    // same multiset of (vertex count, edge count, canonical form)
    std::vector<Mask> canon_lo, canon_hi;
    for (const auto& g : lo) canon_lo.push_back(canonical_mask(g));
    for (const auto& g : hi) canon_hi.push_back(canonical_mask(g));
    std::sort(canon_lo.begin(), canon_lo.end());
    std::sort(canon_hi.begin(), canon_hi.end());
    CHECK(canon_lo == canon_hi);
  }
}

TEST_CASE("representatives are pairwise non-isomorphic and biconnected") {
  for (int n = 3; n <= 5; ++n) {
    auto reps = enumerate_biconnected(n);
    for (const auto& g : reps) CHECK(is_biconnected(g));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK(canonical_mask(reps[i]) != canonical_mask(reps[j]));
  }
}

TEST_CASE("cycle matroid ranks are spanning forests") {
  SimpleGraph c4 = make_simple_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  Matroid m = cycle_matroid(c4);
  CHECK(m.ground_size() == 4);
  CHECK(m.rank() == 3);
  CHECK(m.circuits() == std::vector<Mask>{0b1111});
}
