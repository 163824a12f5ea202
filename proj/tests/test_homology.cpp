#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "regsurf/homology.hpp"
#include "regsurf/surfaces.hpp"
#include "test_util.hpp"

using namespace regsurf;
using namespace testutil;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex(3, {Bits128::from_indices({0, 1}), Bits128::from_indices({0, 2}),
                               Bits128::from_indices({1, 2})});
}

SimplicialComplex catalog_complex(const std::string& name) {
  for (const auto& [n, t] : catalog())
    if (n == name) return t.as_complex();
  throw std::runtime_error("no catalog entry " + name);
}

}  // namespace

TEST_CASE("boundary matrices") {
  SimplicialComplex tri = hollow_triangle();
  IntMatrix d1 = boundary_matrix(tri, 1);
  REQUIRE(d1.rows == 3);
  REQUIRE(d1.cols == 3);
  for (int c = 0; c < 3; ++c) {
    int sum = 0;
    for (int r = 0; r < 3; ++r) sum += d1.at(r, c);
    CHECK(sum == 0);  // each edge boundary is head - tail
  }
  IntMatrix d0 = boundary_matrix(tri, 0);
  CHECK(d0.rows == 1);  // augmentation to the empty face
  CHECK(d0.cols == 3);
  CHECK(boundary_matrix(tri, 5).cols == 0);
  CHECK(boundary_matrix(tri, -1).cols == 1);
  CHECK(boundary_matrix(tri, -1).rows == 0);
}

TEST_CASE("boundary of boundary vanishes") {
  std::mt19937 rng(59);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(6, 0.5, rng);
    SimplicialComplex d = independence_complex(g);
    for (int dim = 0; dim <= d.dim(); ++dim) {
      IntMatrix a = boundary_matrix(d, dim);
      IntMatrix b = boundary_matrix(d, dim + 1);
      if (a.cols == 0 || b.cols == 0) continue;
      for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < b.cols; ++c) {
          int sum = 0;
          for (int k = 0; k < a.cols; ++k) sum += a.at(r, k) * b.at(k, c);
          CHECK(sum == 0);
        }
    }
  }
}

TEST_CASE("octahedron boundary ranks") {
  SimplicialComplex oct = catalog_complex("octahedron");
  IntMatrix d2 = boundary_matrix(oct, 2);
  REQUIRE(d2.rows == 12);
  REQUIRE(d2.cols == 8);
  CHECK(rank(d2, FieldSpec::f0()) == 7);
  CHECK(rank(d2, FieldSpec::f0_exact()) == 7);
}

TEST_CASE("hemi-icosahedron boundary ranks depend on the characteristic") {
  SimplicialComplex rp2 = catalog_complex("hemi-icosahedron");
  IntMatrix d2 = boundary_matrix(rp2, 2);
  REQUIRE(d2.rows == 15);
  REQUIRE(d2.cols == 10);
  CHECK(rank(d2, FieldSpec::f2()) == 9);
  CHECK(rank_mod_p(d2, kSurrogatePrimeA) == 10);
  CHECK(rank(d2, FieldSpec::f0()) == 10);
}

TEST_CASE("reduced betti of the basic complexes") {
  for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0(), FieldSpec::fp(5)}) {
    ReducedBetti tri = reduced_betti(hollow_triangle(), f);
    CHECK(tri.h(0) == 0);
    CHECK(tri.h(1) == 1);
    CHECK(tri.h(-1) == 0);

    ReducedBetti void_c = reduced_betti(SimplicialComplex::void_complex(3), f);
    CHECK(void_c.h(-1) == 0);
    CHECK(void_c.top_nonzero() == -2);

    ReducedBetti empty_c = reduced_betti(SimplicialComplex::empty_complex(3), f);
    CHECK(empty_c.h(-1) == 1);
    CHECK(empty_c.h(0) == 0);

    ReducedBetti simplex = reduced_betti(SimplicialComplex::full_simplex(4), f);
    for (int t = -1; t <= 3; ++t) CHECK(simplex.h(t) == 0);
  }
}

TEST_CASE("catalog homology across characteristics") {
  SimplicialComplex oct = catalog_complex("octahedron");
  CHECK(reduced_betti(oct, FieldSpec::f2()).h(2) == 1);
  CHECK(reduced_betti(oct, FieldSpec::f0()).h(2) == 1);
  CHECK(reduced_betti(oct, FieldSpec::f0()).h(1) == 0);

  SimplicialComplex torus = catalog_complex("csaszar-torus");
  for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0()}) {
    CHECK(reduced_betti(torus, f).h(2) == 1);
    CHECK(reduced_betti(torus, f).h(1) == 2);
  }

  SimplicialComplex rp2 = catalog_complex("hemi-icosahedron");
  ReducedBetti rp2_f0 = reduced_betti(rp2, FieldSpec::f0());
  CHECK(rp2_f0.h(0) == 0);
  CHECK(rp2_f0.h(1) == 0);
  CHECK(rp2_f0.h(2) == 0);
  ReducedBetti rp2_f2 = reduced_betti(rp2, FieldSpec::f2());
  CHECK(rp2_f2.h(1) == 1);
  CHECK(rp2_f2.h(2) == 1);
}

TEST_CASE("join homology: two 2-point complexes make a hollow square") {
  SimplicialComplex two_pts(2, {Bits128::single(0), Bits128::single(1)});
  SimplicialComplex square = join(two_pts, two_pts);
  for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0()}) {
    ReducedBetti rb = reduced_betti(square, f);
    CHECK(rb.h(0) == 0);
    CHECK(rb.h(1) == 1);
  }
}

TEST_CASE("reduced betti agrees with the naive oracle on random independence complexes") {
  std::mt19937 rng(61);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.5, rng);
    SquarefreeIdeal ideal = edge_ideal(g);
    auto levels = oracle::naive_restriction_faces(ideal, Bits128::first_n(n));
    auto naive_f2 = oracle::naive_reduced_homology(levels, 2);
    auto naive_fp = oracle::naive_reduced_homology(levels, 1000003);
    SimplicialComplex d = independence_complex(g);
    ReducedBetti lib_f2 = reduced_betti(d, FieldSpec::f2());
    ReducedBetti lib_f0 = reduced_betti(d, FieldSpec::f0());
    for (int k = 0; k < static_cast<int>(naive_f2.size()); ++k) {
      CHECK(lib_f2.h(k - 1) == naive_f2[k]);
      CHECK(lib_f0.h(k - 1) == naive_fp[k]);
    }
  }
}

TEST_CASE("euler characteristic equals the alternating homology sum") {
  std::mt19937 rng(67);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = random_graph(6, 0.45, rng);
    SimplicialComplex d = independence_complex(g);
    for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0()}) {
      ReducedBetti rb = reduced_betti(d, f);
      long long alt = 0;
      for (int t = -1; t <= d.dim(); ++t) alt += ((t % 2 == 0) ? 1 : -1) * rb.h(t);
      CHECK(alt == euler_characteristic(d).reduced);
    }
  }
}
