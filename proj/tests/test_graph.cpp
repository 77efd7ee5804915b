#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "transit/enumerate.hpp"
#include "transit/errors.hpp"
#include "transit/families.hpp"
#include "transit/graph.hpp"

using namespace transit;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("graph6 decodes the known small strings") {
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(0, 2));
  CHECK(k3.adjacent(1, 2));

  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.adjacent(0, 1));

  const Graph empty2 = parse_graph6("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.edge_count() == 0);

  const Graph single = parse_graph6("@");
  CHECK(single.order() == 1);
}

TEST_CASE("graph6 encoding agrees with the reference encoder") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(complete(3)) == oracles::reference_graph6_encode(complete(3)));
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(complete(2)) == oracles::reference_graph6_encode(complete(2)));
  CHECK(to_graph6(Graph(1)) == "@");

  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const double p = (trial % 3 + 1) * 0.25;
    const Graph g = oracles::random_graph(n, p, rng);
    const std::string encoded = to_graph6(g);
    CHECK(encoded == oracles::reference_graph6_encode(g));
    CHECK(parse_graph6(encoded) == g);
  }
}

TEST_CASE("graph6 roundtrips over every isomorphism class at order <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      CHECK(parse_graph6(to_graph6(g)) == g);
      CHECK(to_graph6(g) == oracles::reference_graph6_encode(g));
    }
  }
}

TEST_CASE("graph6 parse errors carry distinct kinds") {
  using Kind = Graph6ParseError::Kind;
  auto kind_of = [](const char* text) {
    try {
      parse_graph6(text);
    } catch (const Graph6ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return Kind::kEmptyInput;
  };
  CHECK(kind_of("") == Kind::kEmptyInput);
  CHECK(kind_of("B") == Kind::kTruncated);
  CHECK(kind_of("Bw?") == Kind::kTrailingGarbage);
  CHECK(kind_of("B\x01") == Kind::kBadCharacter);
  CHECK(kind_of("~???") == Kind::kUnsupportedHeader);
  CHECK(kind_of("?") == Kind::kUnsupportedHeader);
  // K2 needs one body bit; a second set bit lands in the padding.
  CHECK(kind_of("Ao") == Kind::kBadPadding);
  CHECK_THROWS_AS(to_graph6(Graph(63)), UnsupportedOrderError);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(3)));
  CHECK(is_connected(path(4)));
  CHECK_FALSE(is_connected(parse_graph6("A?")));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("distance matrix of the path, the clique, and the star") {
  const DistanceMatrix dp = distance_matrix(path(4));
  const int expected[4][4] = {{0, 1, 2, 3}, {1, 0, 1, 2}, {2, 1, 0, 1}, {3, 2, 1, 0}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(dp.at(i, j) == expected[i][j]);
  }

  const DistanceMatrix dk = distance_matrix(complete(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(dk.at(i, j) == (i == j ? 0 : 1));
  }

  const DistanceMatrix ds = distance_matrix(star(4));
  for (int j = 1; j < 4; ++j) CHECK(ds.at(0, j) == 1);
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) CHECK(ds.at(i, j) == (i == j ? 0 : 2));
  }

  CHECK_THROWS_AS(distance_matrix(parse_graph6("A?")), NotConnectedError);
}

TEST_CASE("transmission profiles of the named examples") {
  SUBCASE("star on 4 vertices") {
    const auto p = transmission_profile(distance_matrix(star(4)));
    CHECK(p.transmissions == std::vector<int>{3, 5, 5, 5});
    CHECK(p.wiener == 9);
    CHECK(p.gap == 2);  // 4*5 - 18
    CHECK_FALSE(is_transmission_regular(p));
  }
  SUBCASE("cocktail apex on 5 vertices") {
    const auto p = transmission_profile(distance_matrix(complete_multipartite({1, 2, 2})));
    CHECK(p.transmissions == std::vector<int>{4, 5, 5, 5, 5});
    CHECK(p.wiener == 12);
    CHECK(p.gap == 1);
    CHECK(p.argmax == std::vector<int>{1, 2, 3, 4});
  }
  SUBCASE("4-cycle is transmission-regular") {
    const auto p = transmission_profile(distance_matrix(cycle(4)));
    CHECK(p.transmissions == std::vector<int>{4, 4, 4, 4});
    CHECK(p.gap == 0);
    CHECK(is_transmission_regular(p));
  }
  SUBCASE("5-cycle is transmission-regular") {
    CHECK(is_transmission_regular(transmission_profile(distance_matrix(cycle(5)))));
  }
}

TEST_CASE("distance matrices satisfy metric axioms on all orders <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const DistanceMatrix d = distance_matrix(g);
      long long gap_two_ways = 0;
      const auto p = transmission_profile(d);
      for (int i = 0; i < n; ++i) {
        REQUIRE(d.at(i, i) == 0);
        gap_two_ways += p.dmax - p.transmissions[i];
        for (int j = 0; j < n; ++j) {
          if (i != j) REQUIRE(d.at(i, j) >= 1);
          REQUIRE(d.at(i, j) == d.at(j, i));
          for (int k = 0; k < n; ++k) {
            REQUIRE(d.at(i, k) <= d.at(i, j) + d.at(j, k));
          }
        }
      }
      REQUIRE(gap_two_ways == p.gap);
      REQUIRE(2 * p.wiener == std::accumulate(p.transmissions.begin(), p.transmissions.end(),
                                              0LL));
    }
  }
}

TEST_CASE("every leaf edge of a tree has transmission difference n - 2") {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& t : free_trees(n)) {
      const auto p = transmission_profile(distance_matrix(t));
      for (int v = 0; v < n; ++v) {
        if (t.degree(v) != 1) continue;
        int u = 0;
        while (!t.adjacent(v, u)) ++u;
        REQUIRE(p.transmissions[v] - p.transmissions[u] == n - 2);
      }
      if (n >= 3) REQUIRE_FALSE(is_transmission_regular(p));
    }
  }
}

TEST_CASE("graph construction guards") {
  CHECK_THROWS_AS(Graph(0), DomainError);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), DomainError);
  CHECK(Graph(99).order() == 99);  // orders past 64 are in range
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
}

TEST_SUITE_END();
