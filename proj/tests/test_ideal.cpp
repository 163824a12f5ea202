#include <catch2/catch.hpp>

#include "regsurf/ideal.hpp"
#include "test_util.hpp"

using namespace regsurf;
using namespace testutil;

namespace {
Bits128 supp(std::initializer_list<int> idx) { return Bits128::from_indices(std::vector<int>(idx)); }
}  // namespace

TEST_CASE("edge ideal") {
  SquarefreeIdeal k2 = edge_ideal(path_graph(2));
  REQUIRE(k2.gens.size() == 1);
  CHECK(k2.gens[0] == supp({0, 1}));

  SquarefreeIdeal c4 = edge_ideal(cycle_graph(4));
  CHECK(c4.gens.size() == 4);
  CHECK(edge_ideal(Graph(5)).is_zero());
}

TEST_CASE("ideal minimalization and canonical order") {
  SquarefreeIdeal i(3, {supp({0, 1, 2}), supp({0, 1}), supp({2})});
  REQUIRE(i.gens.size() == 2);
  CHECK(i.gens[0] == supp({2}));       // size 1 first
  CHECK(i.gens[1] == supp({0, 1}));    // {0,1,2} absorbed
  CHECK_THROWS_AS(SquarefreeIdeal(2, {Bits128::zero()}), std::invalid_argument);
}

TEST_CASE("colon by a variable") {
  // ({xy, yz} : y) = (x, z)
  SquarefreeIdeal i(3, {supp({0, 1}), supp({1, 2})});
  SquarefreeIdeal c = colon_by_variable(i, 1);
  CHECK(c == SquarefreeIdeal(3, {supp({0}), supp({2})}));

  // (I(C4) : x0) = (x1, x3)
  SquarefreeIdeal c4 = edge_ideal(cycle_graph(4));
  CHECK(colon_by_variable(c4, 0) == SquarefreeIdeal(4, {supp({1}), supp({3})}));

  // stripping can absorb other generators: ({xy, yz} : z) = (y)
  CHECK(colon_by_variable(i, 2) == SquarefreeIdeal(3, {supp({1})}));
  // untouched variable: identity
  SquarefreeIdeal no_z(3, {supp({0, 1})});
  CHECK(colon_by_variable(no_z, 2) == no_z);
}

TEST_CASE("adding a variable") {
  SquarefreeIdeal i(2, {supp({0, 1})});
  CHECK(add_variable(i, 0) == SquarefreeIdeal(2, {supp({0})}));

  SquarefreeIdeal c4 = edge_ideal(cycle_graph(4));
  CHECK(add_variable(c4, 0) ==
        SquarefreeIdeal(4, {supp({0}), supp({1, 2}), supp({2, 3})}));
  CHECK(add_variable(add_variable(c4, 0), 0) == add_variable(c4, 0));
}

TEST_CASE("intersection") {
  SquarefreeIdeal x(2, {supp({0})}), y(2, {supp({1})});
  CHECK(intersect(x, y) == SquarefreeIdeal(2, {supp({0, 1})}));

  SquarefreeIdeal a(3, {supp({0, 1}), supp({0, 2})});
  SquarefreeIdeal b(3, {supp({1, 2})});
  CHECK(intersect(a, b) == SquarefreeIdeal(3, {supp({0, 1, 2})}));
  CHECK(intersect(a, a) == a);
  CHECK_THROWS_AS(intersect(x, SquarefreeIdeal(3, {})), std::invalid_argument);
}

TEST_CASE("intersection is commutative, associative, idempotent") {
  // exhaustive antichain ideals on 3 variables, sampled triples on 4 and 5
  auto all_ideals = [](int nvars) {
    std::vector<SquarefreeIdeal> out;
    int subsets = (1 << nvars) - 1;  // nonempty supports
    std::vector<Bits128> pool;
    for (int m = 1; m <= subsets; ++m) pool.push_back(Bits128{static_cast<std::uint64_t>(m), 0});
    // enumerate antichains by DFS over the pool
    std::vector<Bits128> cur;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
      out.emplace_back(nvars, cur);
      for (std::size_t k = start; k < pool.size(); ++k) {
        bool anti = true;
        for (const Bits128& c : cur)
          if (c.is_subset_of(pool[k]) || pool[k].is_subset_of(c)) {
            anti = false;
            break;
          }
        if (!anti) continue;
        cur.push_back(pool[k]);
        self(self, k + 1);
        cur.pop_back();
      }
    };
    dfs(dfs, 0);
    return out;
  };
  auto ideals3 = all_ideals(3);
  for (const auto& a : ideals3) {
    CHECK(intersect(a, a) == a);
    for (const auto& b : ideals3) CHECK(intersect(a, b) == intersect(b, a));
  }
  std::mt19937 rng(41);
  auto ideals4 = all_ideals(4);
  for (int rep = 0; rep < 200; ++rep) {
    const auto& a = ideals4[rng() % ideals4.size()];
    const auto& b = ideals4[rng() % ideals4.size()];
    const auto& c = ideals4[rng() % ideals4.size()];
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
  }
}

TEST_CASE("x-partition") {
  SquarefreeIdeal tri(3, {supp({0, 1}), supp({0, 2}), supp({1, 2})});
  auto [ip, ipp] = x_partition(tri, 0);
  CHECK(ip == SquarefreeIdeal(3, {supp({0, 1}), supp({0, 2})}));
  CHECK(ipp == SquarefreeIdeal(3, {supp({1, 2})}));

  auto [zp, zpp] = x_partition(ipp, 0);
  CHECK(zp.is_zero());
  CHECK(zpp == ipp);

  // reassembly
  std::vector<Bits128> merged = ip.gens;
  merged.insert(merged.end(), ipp.gens.begin(), ipp.gens.end());
  CHECK(SquarefreeIdeal(3, merged) == tri);
}

TEST_CASE("disjoint sum") {
  SquarefreeIdeal k2 = edge_ideal(path_graph(2));
  CHECK(disjoint_sum(k2, k2) == edge_ideal(matching_graph(2)));
  SquarefreeIdeal padded = disjoint_sum(k2, SquarefreeIdeal::zero(3));
  CHECK(padded.nvars == 5);
  CHECK(padded.gens.size() == 1);
}

TEST_CASE("ideal text round trip") {
  SquarefreeIdeal tri(3, {supp({0, 1}), supp({0, 2}), supp({1, 2})});
  CHECK(parse_ideal(format_ideal(tri)) == tri);
  CHECK(parse_ideal("4\n") == SquarefreeIdeal::zero(4));
  CHECK_THROWS_AS(parse_ideal("2\n0 5\n"), parse_error);
  CHECK_THROWS_AS(parse_ideal(""), parse_error);
}
