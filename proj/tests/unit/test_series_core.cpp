// Exactness and algebra laws for the series kernel: ZetaLaurent windows and
// truncated bivariate arithmetic. Random inputs are seeded, so failures
// reproduce; every identity here is exact, no tolerances.

#include "qrank/bivariate_series.hpp"
#include "qrank/brute_force.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace qrank;

namespace {

ZetaLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<long> exp_d(-4, 4);
  std::uniform_int_distribution<long> coeff_d(-9, 9);
  std::uniform_int_distribution<int> size_d(0, 5);
  ZetaLaurent z;
  const int terms = size_d(rng);
  for (int i = 0; i < terms; ++i) z.set(exp_d(rng), BigInt(coeff_d(rng)));
  return z;
}

BivariateSeries random_series(std::mt19937& rng, long order, bool unit_constant) {
  BivariateSeries s(order);
  for (long n = 0; n <= order; ++n) s[n] = random_laurent(rng);
  if (unit_constant) s[0] = ZetaLaurent::one();
  return s;
}

}  // namespace

TEST_CASE("ZetaLaurent canonical form and access") {
  ZetaLaurent z;
  REQUIRE(z.is_zero());
  REQUIRE(z.at(0) == 0);
  REQUIRE(z.at(-7) == 0);

  z.set(2, BigInt(5));
  z.set(-1, BigInt(-3));
  REQUIRE(z.lo() == -1);
  REQUIRE(z.hi() == 2);
  REQUIRE(z.support_size() == 4);
  REQUIRE(z.at(2) == 5);
  REQUIRE(z.at(-1) == -3);
  REQUIRE(z.at(0) == 0);
  REQUIRE(z.at(100) == 0);

  // Zeroing a window end re-canonicalizes.
  z.set(2, BigInt(0));
  REQUIRE(z.hi() == -1);
  z.set(-1, BigInt(0));
  REQUIRE(z.is_zero());

  // Setting zero into an empty polynomial stays empty.
  ZetaLaurent w;
  w.set(3, BigInt(0));
  REQUIRE(w.is_zero());

  REQUIRE(ZetaLaurent::monomial(BigInt(0), 5).is_zero());
  REQUIRE(ZetaLaurent::one().at(0) == 1);
}

TEST_CASE("ZetaLaurent mirrored, sums and moments") {
  ZetaLaurent z;
  z.set(-2, BigInt(1));
  z.set(0, BigInt(4));
  z.set(3, BigInt(-2));

  ZetaLaurent m = z.mirrored();
  REQUIRE(m.at(2) == 1);
  REQUIRE(m.at(0) == 4);
  REQUIRE(m.at(-3) == -2);
  REQUIRE(m.mirrored() == z);

  REQUIRE(z.sum() == 3);
  REQUIRE(z.moment(0) == 3);
  // Σ m f(m) = -2*1 + 0 + 3*(-2) = -8; Σ m² f(m) = 4 - 18 = -14.
  REQUIRE(z.moment(1) == -8);
  REQUIRE(z.moment(2) == -14);
  REQUIRE(z.abs_moment(1) == BigInt(2 + 0 - 6));
  REQUIRE(z.abs_moment(2) == -14);

  // Mirroring flips odd moments and fixes even ones.
  REQUIRE(m.moment(1) == 8);
  REQUIRE(m.moment(2) == -14);
  REQUIRE(m.moment(3) == -z.moment(3));
}

TEST_CASE("ZetaLaurent ring laws on random inputs") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 200; ++trial) {
    ZetaLaurent a = random_laurent(rng);
    ZetaLaurent b = random_laurent(rng);
    ZetaLaurent c = random_laurent(rng);

    REQUIRE(a.mul(b) == b.mul(a));
    REQUIRE(a.mul(b).mul(c) == a.mul(b.mul(c)));

    ZetaLaurent bc(b);
    bc.add(c);
    ZetaLaurent lhs = a.mul(bc);
    ZetaLaurent rhs = a.mul(b);
    rhs.add(a.mul(c));
    REQUIRE(lhs == rhs);

    // Multiplication commutes with the ζ -> 1/ζ substitution.
    REQUIRE(a.mul(b).mirrored() == a.mirrored().mul(b.mirrored()));

    ZetaLaurent neg = a.negated();
    neg.add(a);
    REQUIRE(neg.is_zero());
  }
}

TEST_CASE("add_scaled_shifted equals explicit monomial multiply") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    ZetaLaurent a = random_laurent(rng);
    ZetaLaurent b = random_laurent(rng);
    for (long shift : {-3L, 0L, 2L}) {
      for (int sign : {+1, -1}) {
        ZetaLaurent via_add(a);
        via_add.add_scaled_shifted(b, shift, sign);
        ZetaLaurent via_mul(a);
        via_mul.add(b.mul(ZetaLaurent::monomial(BigInt(sign), shift)));
        REQUIRE(via_add == via_mul);
      }
    }
  }
}

TEST_CASE("BivariateSeries shifts and one-factor passes") {
  // 1/(1-q) is the all-ones series.
  BivariateSeries geo = BivariateSeries::one(10);
  geo.divide_one_minus(+1, 0, 1);
  for (long n = 0; n <= 10; ++n) REQUIRE(geo[n] == ZetaLaurent::one());

  // Multiplying back telescopes to 1.
  geo.multiply_one_minus(+1, 0, 1);
  REQUIRE(geo == BivariateSeries::one(10));

  // multiply_q shifts and drops past the order.
  BivariateSeries s = BivariateSeries::one(4);
  s[1] = ZetaLaurent::monomial(BigInt(2), 1);
  s.multiply_q(3);
  REQUIRE(s[0].is_zero());
  REQUIRE(s[3] == ZetaLaurent::one());
  REQUIRE(s[4] == ZetaLaurent::monomial(BigInt(2), 1));

  REQUIRE_THROWS_AS(s.divide_one_minus(+1, 0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(s.multiply_one_minus(+1, 0, -2), std::invalid_argument);
}

TEST_CASE("divide/multiply_one_minus are mutually inverse on random series") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    BivariateSeries s = random_series(rng, 12, false);
    BivariateSeries original = s;
    for (auto [sign, ze, qp] : {std::tuple<int, long, long>{+1, 1, 1},
                                {-1, -1, 2},
                                {+1, 0, 3}}) {
      s.divide_one_minus(sign, ze, qp);
      s.multiply_one_minus(sign, ze, qp);
      REQUIRE(s == original);
    }
  }
}

TEST_CASE("series ring laws and inversion") {
  std::mt19937 rng(20240101);
  for (int trial = 0; trial < 25; ++trial) {
    BivariateSeries a = random_series(rng, 10, false);
    BivariateSeries b = random_series(rng, 10, false);
    BivariateSeries c = random_series(rng, 10, false);

    REQUIRE(series_mul(a, b) == series_mul(b, a));
    REQUIRE(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    REQUIRE(series_mul(a, series_add(b, c)) ==
            series_add(series_mul(a, b), series_mul(a, c)));

    BivariateSeries u = random_series(rng, 10, true);
    REQUIRE(series_mul(u, series_invert(u)) == BivariateSeries::one(10));
  }
}

TEST_CASE("series order and invertibility guards") {
  BivariateSeries a(5), b(6);
  REQUIRE_THROWS_AS(series_mul(a, b), order_mismatch_error);
  REQUIRE_THROWS_AS(series_add(a, b), order_mismatch_error);
  REQUIRE_THROWS_AS(series_invert(a), not_invertible_error);  // constant term 0
  REQUIRE_THROWS_AS(BivariateSeries(-1), std::invalid_argument);

  REQUIRE_THROWS_AS(pochhammer_infinite({{+1, 0, 0}}, 5), divergent_product_error);
  REQUIRE_THROWS_AS(pochhammer_finite({{+1, 0, 1}}, -1, 5), std::invalid_argument);
}

TEST_CASE("pochhammer_finite equals an explicitly assembled product") {
  const long N = 15;
  BivariateSeries via_poch = pochhammer_finite({{+1, +1, 1}, {-1, -1, 1}}, 3, N);

  // Same product from scratch: rows set by hand, then Cauchy-multiplied.
  BivariateSeries explicit_prod = BivariateSeries::one(N);
  for (long j = 1; j <= 3; ++j) {
    BivariateSeries f1(N), f2(N);
    f1[0] = ZetaLaurent::one();
    f1[j] = ZetaLaurent::monomial(BigInt(-1), +1);  // 1 - ζ q^j
    f2[0] = ZetaLaurent::one();
    f2[j] = ZetaLaurent::monomial(BigInt(+1), -1);  // 1 + ζ^{-1} q^j
    explicit_prod = series_mul(series_mul(explicit_prod, f1), f2);
  }
  REQUIRE(via_poch == explicit_prod);
}

TEST_CASE("Euler product expands to pentagonal-number signs") {
  const long N = 60;
  BivariateSeries e = pochhammer_infinite({{+1, 0, 1}}, N);
  std::vector<int> expected(N + 1, 0);
  expected[0] = 1;
  for (long j = 1;; ++j) {
    const long g1 = j * (3 * j - 1) / 2;
    const long g2 = j * (3 * j + 1) / 2;
    if (g1 > N) break;
    const int s = (j % 2 == 0) ? +1 : -1;
    expected[g1] = s;
    if (g2 <= N) expected[g2] = s;
  }
  for (long n = 0; n <= N; ++n) {
    REQUIRE(e[n].at(0) == expected[n]);
    REQUIRE(e[n].support_size() <= 1);  // ζ-free series stays ζ-free
  }
}

TEST_CASE("1/(q;q)_inf counts partitions") {
  const long N = 200;
  BivariateSeries p = series_invert(pochhammer_infinite({{+1, 0, 1}}, N));
  std::vector<BigInt> counts = partition_counts(N);
  for (long n = 0; n <= N; ++n) {
    REQUIRE(p[n].at(0) == counts[static_cast<size_t>(n)]);
    REQUIRE(p[n].support_size() == 1);
  }
}

TEST_CASE("multiply_zeta_poly matches per-row convolution") {
  std::mt19937 rng(5150);
  ZetaLaurent z = random_laurent(rng);
  z.set(0, BigInt(3));  // keep it nonzero
  BivariateSeries s = random_series(rng, 8, false);
  BivariateSeries expect(8);
  for (long n = 0; n <= 8; ++n) expect[n] = s[n].mul(z);
  s.multiply_zeta_poly(z);
  REQUIRE(s == expect);
}

TEST_CASE("mirrored series mirrors every row") {
  std::mt19937 rng(31337);
  BivariateSeries s = random_series(rng, 7, false);
  BivariateSeries m = s.mirrored();
  for (long n = 0; n <= 7; ++n) REQUIRE(m[n] == s[n].mirrored());
  REQUIRE(m.mirrored() == s);
}
