#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "regsurf/graph.hpp"
#include "test_util.hpp"

using namespace regsurf;
using namespace testutil;

TEST_CASE("complement basics") {
  Graph c4 = cycle_graph(4);
  Graph cc = complement(c4);
  CHECK(cc.edge_count() == 2);
  CHECK(cc.has_edge(0, 2));
  CHECK(cc.has_edge(1, 3));
  CHECK(complement(cc) == c4);
  CHECK(complement(complete_graph(3)) == Graph(3));
}

TEST_CASE("complement is an involution and commutes with induced subgraphs") {
  std::mt19937 rng(7);
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : load_corpus(n)) {
      CHECK(complement(complement(g)) == g);
      for (int rep = 0; rep < 3; ++rep) {
        std::uint64_t mask = rng() & ((n ? (1ull << n) : 1ull) - 1);
        Bits128 w{mask, 0};
        CHECK(complement(induced_subgraph(g, w)) == induced_subgraph(complement(g), w));
      }
    }
}

TEST_CASE("bipartite complement") {
  // C4 with its natural bipartition {0,2} vs {1,3}: the complement inside
  // K_{2,2} is the two diagonal cross pairs... those are not cross pairs;
  // the four cross pairs are the C4 edges themselves, so the bipartite
  // complement is empty; starting from the perfect matching instead gives
  // back the other matching.
  Graph c4 = cycle_graph(4);
  Bits128 part = Bits128::from_indices({0, 2});
  Graph bc = bipartite_complement(c4, part);
  CHECK(bc.edge_count() == 0);

  Graph pm(4);  // matching 0-1, 2-3 inside the bipartition {0,2} | {1,3}
  pm.add_edge(0, 1);
  pm.add_edge(2, 3);
  Graph pmbc = bipartite_complement(pm, part);
  CHECK(pmbc.edge_count() == 2);
  CHECK(pmbc.has_edge(0, 3));
  CHECK(pmbc.has_edge(2, 1));
  CHECK(bipartite_complement(pmbc, part) == pm);

  Graph k22 = complete_multipartite({2, 2});  // parts {0,1} and {2,3}
  CHECK(bipartite_complement(k22, Bits128::from_indices({0, 1})).edge_count() == 0);

  CHECK_THROWS_AS(bipartite_complement(c4, Bits128::from_indices({0, 1})),
                  std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  Graph c5 = cycle_graph(5);
  Graph p3 = induced_subgraph(c5, Bits128::from_indices({0, 1, 2}));
  CHECK(p3 == path_graph(3));
  CHECK(induced_subgraph(c5, c5.vertex_mask()) == c5);

  Graph m3 = matching_graph(3);
  Graph del = delete_vertex(m3, 5);
  CHECK(del.size() == 5);
  CHECK(del.edge_count() == 2);
  CHECK(del.degree(4) == 0);
}

TEST_CASE("deleted neighborhood subgraph") {
  Graph c5 = cycle_graph(5);
  for (int x = 0; x < 5; ++x) {
    Graph far = nonneighborhood_subgraph(c5, x);
    CHECK(far.size() == 2);
    CHECK(far.edge_count() == 1);
  }
  CHECK(nonneighborhood_subgraph(star_graph(4), 0).size() == 0);
  Graph m3 = matching_graph(3);
  CHECK(nonneighborhood_subgraph(m3, 0) == matching_graph(2));
}

TEST_CASE("contract edge") {
  CHECK(contract_edge(cycle_graph(4), 0, 1) == complete_graph(3));
  CHECK(contract_edge(path_graph(2), 0, 1) == Graph(1));
  CHECK(contract_edge(path_graph(3), 0, 1) == path_graph(2));
  CHECK_THROWS_AS(contract_edge(cycle_graph(4), 0, 2), std::invalid_argument);

  std::mt19937 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = random_graph(7, 0.5, rng);
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto [a, b] = edges[rng() % edges.size()];
    Graph h = contract_edge(g, a, b);
    CHECK(h.size() == g.size() - 1);
    h.validate();  // simple, symmetric, no loops
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(matching_graph(2)));
  CHECK(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(connected_components(matching_graph(3)).size() == 3);
}

TEST_CASE("chordality: fixed cases") {
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(5)));
  CHECK(is_chordal(complete_graph(5)));
  CHECK_FALSE(is_chordal(complete_multipartite({2, 2, 2})));
  CHECK_FALSE(is_chordal(cycle_graph(6)));
  Graph chordal_c4 = cycle_graph(4);
  chordal_c4.add_edge(0, 2);
  CHECK(is_chordal(chordal_c4));
}

TEST_CASE("chordality agrees with the induced-cycle oracle on the full corpus") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : load_corpus(n)) {
      bool mcs = is_chordal(g);
      bool brute = oracle::brute_is_chordal(g);
      bool cycle_search = !induced_long_cycle(g, 4).has_value();
      INFO("n=" << n << " edges=" << g.edge_count());
      CHECK(mcs == brute);
      CHECK(cycle_search == brute);
    }
}

TEST_CASE("induced long cycles") {
  auto c6 = induced_long_cycle(cycle_graph(6), 4);
  REQUIRE(c6.has_value());
  CHECK(c6->size() == 6);
  CHECK_FALSE(induced_long_cycle(complete_graph(4), 4).has_value());
  auto anti = induced_long_cycle(complement(matching_graph(2)), 4);
  REQUIRE(anti.has_value());
  CHECK(anti->size() == 4);
  CHECK(has_anticycle(matching_graph(2)));

  // any reported cycle really is an induced cycle of the stated length
  std::mt19937 rng(13);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = random_graph(8, 0.4, rng);
    auto cyc = induced_long_cycle(g, 4);
    if (!cyc) continue;
    int len = static_cast<int>(cyc->size());
    REQUIRE(len >= 4);
    Graph ind = induced_subgraph(g, Bits128::from_indices(*cyc));
    CHECK(is_connected(ind));
    for (int v = 0; v < ind.size(); ++v) CHECK(ind.degree(v) == 2);
  }
}

TEST_CASE("matching numbers: fixed cases") {
  CHECK(matching_number(matching_graph(3)) == 3);
  CHECK(induced_matching_number(matching_graph(3)) == 3);
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(induced_matching_number(cycle_graph(5)) == 1);
  CHECK(induced_matching_number(path_graph(4)) == 1);
  CHECK(matching_number(Graph(4)) == 0);
  CHECK(induced_matching_number(Graph(0)) == 0);
}

TEST_CASE("matching numbers agree with brute force") {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : load_corpus(n)) {
      CHECK(matching_number(g) == oracle::brute_matching(g));
      CHECK(induced_matching_number(g) == oracle::brute_induced_matching(g));
    }
  std::mt19937 rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    Graph g = random_graph(7, 0.5, rng);
    CHECK(matching_number(g) == oracle::brute_matching(g));
    CHECK(induced_matching_number(g) == oracle::brute_induced_matching(g));
  }
}

TEST_CASE("induced matching never exceeds matching") {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : load_corpus(n))
      CHECK(induced_matching_number(g) <= matching_number(g));
}

TEST_CASE("graphs across the 64-bit word boundary") {
  Graph p100 = path_graph(100);
  CHECK(is_connected(p100));
  CHECK(is_chordal(p100));
  CHECK(matching_number(p100) == 50);
  Graph c100 = cycle_graph(100);
  CHECK_FALSE(is_chordal(c100));
  auto cyc = induced_long_cycle(c100, 4);
  REQUIRE(cyc.has_value());
  CHECK(cyc->size() == 100);
  CHECK(complement(complement(c100)) == c100);
  Graph far = nonneighborhood_subgraph(c100, 0);
  CHECK(far.size() == 97);
  CHECK(contract_edge(c100, 0, 1).size() == 99);
}
