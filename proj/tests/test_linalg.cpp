#include <catch2/catch.hpp>

#include <random>

#include "oracles.hpp"
#include "regsurf/bigint.hpp"
#include "regsurf/linalg.hpp"

using namespace regsurf;

TEST_CASE("bigint arithmetic against native 64-bit") {
  std::mt19937_64 rng(47);
  for (int rep = 0; rep < 2000; ++rep) {
    long long a = static_cast<long long>(rng() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng() % 2000001) - 1000000;
    CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
    CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
    if (b != 0) CHECK(div_exact(BigInt(a * b), BigInt(b)).to_ll() == a);
  }
  CHECK(BigInt(0).is_zero());
  CHECK((BigInt(5) - BigInt(5)).is_zero());
  CHECK_THROWS(div_exact(BigInt(7), BigInt(2)));
  CHECK_THROWS(div_exact(BigInt(7), BigInt(0)));
}

TEST_CASE("bigint grows past 64 bits") {
  // 50! / 49! = 50 computed through ~214-bit intermediates
  BigInt f49(1), f50(1);
  for (long long k = 2; k <= 49; ++k) f49 = f49 * BigInt(k);
  f50 = f49 * BigInt(50);
  CHECK(div_exact(f50, f49).to_ll() == 50);
  CHECK(f50.to_string() == "30414093201713378043612608166064768844377641568960512000000000000");
  BigInt neg = BigInt(0) - f50;
  CHECK(neg.negative());
  CHECK((neg * neg).to_string() == (f50 * f50).to_string());
}

TEST_CASE("ranks of fixed matrices") {
  IntMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0(), FieldSpec::fp(7),
                             FieldSpec::f0_exact()})
    CHECK(rank(id, f) == 3);

  IntMatrix zero(4, 2);
  for (const FieldSpec& f : {FieldSpec::f2(), FieldSpec::f0()}) CHECK(rank(zero, f) == 0);
  CHECK(rank(IntMatrix(0, 5), FieldSpec::f0()) == 0);

  // rank depends on the characteristic: [[1,1],[1,-1]] has det -2
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = -1;
  CHECK(rank(m, FieldSpec::f2()) == 1);
  CHECK(rank(m, FieldSpec::f0()) == 2);
  CHECK(rank(m, FieldSpec::f0_exact()) == 2);
}

TEST_CASE("all rank routes agree on small random matrices") {
  // entries in {-1,0,1}, sizes <= 6: every minor is below the Hadamard bound
  // 6^3 = 216, far under the surrogate primes, so the exact rank and every
  // large-prime rank must agree; GF(2) is checked against the naive oracle.
  std::mt19937 rng(53);
  for (int rep = 0; rep < 300; ++rep) {
    int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
    IntMatrix m(r, c);
    std::vector<std::vector<long long>> raw(r, std::vector<long long>(c, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        int v = static_cast<int>(rng() % 3) - 1;
        m.at(i, j) = static_cast<std::int8_t>(v);
        raw[i][j] = v;
      }
    int exact = rank_exact(m);
    CHECK(rank_mod_p(m, kSurrogatePrimeA) == exact);
    CHECK(rank_mod_p(m, kSurrogatePrimeB) == exact);
    CHECK(rank(m, FieldSpec::f0()) == exact);
    CHECK(rank_gf2(m) == oracle::naive_rank_mod(raw, 2));
    CHECK(rank_mod_p(m, 5) == oracle::naive_rank_mod(raw, 5));
  }
}

TEST_CASE("surrogate disagreement escalates to the exact rank") {
  // a 1x1 matrix holding the first surrogate prime: rank 0 mod that prime,
  // rank 1 mod the other; the dispatcher must fall back to exact elimination
  IntMatrix m(1, 1);
  m.at(0, 0) = 1;  // placeholder; build the value via repeated elimination instead
  // IntMatrix holds int8, so emulate with a 2x2 whose determinant is the prime:
  // [[a, b], [c, d]] with ad - bc = p is out of int8 range too; instead test
  // the dispatcher directly through rank_mod_p disagreement on a crafted case.
  // 3x3 circulant with determinant 18: vanishes mod 2 and mod 3 only, so both
  // surrogates agree; the genuine escalation path is unit-tested through the
  // RankStats counter with a synthetic FieldSpec whose primes divide 18.
  IntMatrix c(3, 3);
  int vals[3][3] = {{1, 2, 3}, {3, 1, 2}, {2, 3, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.at(i, j) = static_cast<std::int8_t>(vals[i][j]);
  CHECK(rank_exact(c) == 3);  // det = 18
  FieldSpec f = FieldSpec::f0();
  f.surrogate_a = 3;  // 3 divides 18: rank drops to 2 mod 3
  f.surrogate_b = 5;
  RankStats stats;
  CHECK(rank_mod_p(c, 3) == 2);
  CHECK(rank_mod_p(c, 5) == 3);
  CHECK(rank(c, f, &stats) == 3);
  CHECK(stats.escalations == 1);
  (void)m;
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("f2").char_two());
  CHECK(FieldSpec::parse("f0").kind == FieldSpec::Kind::zero_surrogate);
  CHECK(FieldSpec::parse("f0exact").kind == FieldSpec::Kind::zero_exact);
  CHECK(FieldSpec::parse("fp:7").p == 7);
  CHECK(FieldSpec::parse("fp:1073741789").p == kSurrogatePrimeA);
  CHECK_THROWS_AS(FieldSpec::parse("fp:6"), parse_error);
  CHECK_THROWS_AS(FieldSpec::parse("fp:2"), parse_error);
  CHECK_THROWS_AS(FieldSpec::parse("fq:3"), parse_error);
  CHECK_THROWS_AS(FieldSpec::parse("fp:"), parse_error);
  CHECK(FieldSpec::parse("fp:7").to_string() == "fp:7");
  // the surrogate primes really are prime
  CHECK(is_prime_u32(kSurrogatePrimeA));
  CHECK(is_prime_u32(kSurrogatePrimeB));
}
