#pragma once

// Coefficientwise verification of the three decomposition identities that
// drive the moment asymptotics. Each left side comes from the incremental
// table builder; each right side is assembled independently from crank
// products and theta-type sums, so a bug in either pipeline shows up as a
// mismatch at some q-order.
//
//   U(ζ;q) = C(ζ;q) G₁(ζ;q) + H₁(ζ;q)
//     G₁ = (1/(q;q)_∞) Σ_{n>=0} (-1)^n ζ^{2n+1} q^{n(n+1)/2}
//     H₁ = (1-ζ) Σ_{n>=0} (-1)^n ζ^{3n} q^{n(3n+1)/2} (1 - ζ² q^{2n+1})
//
//   V(ζ;q) = C(ζ;q) G₂(ζ;q) + H₂(ζ;q)
//     G₂ = (1/(q;q)_∞) Σ_{n>=0} ζ^{3n+1} q^{3n²+2n} (1 - ζ q^{2n+1})
//     H₂ = (1-ζ) Σ_{n>=0} ζ^n q^{n²+n}
//
//   D(ζ;q) = D*(ζ;q) + q(1-ζ^{-1})/(1+ζ^{-2}q)
//     D* = q (-ζ^{-1}q;q)_∞ / (ζ (1+ζ^{-2}q) (ζq;q)_∞)
//
// The theta sums truncate at the first index whose minimal q-exponent exceeds
// the order; quadratic exponents keep them tiny. The D identity involves
// negative ζ-powers down to about -2N on each side separately before they
// cancel in the sum, which exercises the Laurent window machinery.

#include "qrank/bivariate_series.hpp"
#include "qrank/build_tables.hpp"

#include <string>

namespace qrank {

struct IdentityReport {
  bool ok = true;
  long first_bad_order = -1;
  std::string detail;
};

namespace detail {

// C(ζ;q) = (q;q)_∞ / ((ζq;q)_∞ (ζ^{-1}q;q)_∞) as a truncated series.
inline BivariateSeries crank_series(long N) {
  BivariateSeries num = pochhammer_infinite({{+1, 0, 1}}, N);
  BivariateSeries den = pochhammer_infinite({{+1, +1, 1}, {+1, -1, 1}}, N);
  return series_mul(num, series_invert(den));
}

inline IdentityReport compare_tables(const RankTable& lhs, const BivariateSeries& rhs,
                                     const std::string& label) {
  IdentityReport rep;
  for (long n = 0; n <= lhs.order; ++n) {
    ZetaLaurent r = rhs[n];
    r.trim();
    if (lhs.row(n) != r) {
      rep.ok = false;
      rep.first_bad_order = n;
      rep.detail = label + ": first mismatch at q^" + std::to_string(n);
      return rep;
    }
  }
  rep.detail = label + ": identical through q^" + std::to_string(lhs.order);
  return rep;
}

}  // namespace detail

inline IdentityReport verify_identity_U(long N, bool perturb = false) {
  RankTable lhs = build_unimodal_table(N);

  BivariateSeries theta1(N);
  for (long n = 0;; ++n) {
    const long e = n * (n + 1) / 2;
    if (e > N) break;
    theta1[e].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), 2 * n + 1), 0,
                                 (n % 2 == 0) ? +1 : -1);
  }
  BivariateSeries g1 = series_mul(series_invert(pochhammer_infinite({{+1, 0, 1}}, N)), theta1);
  if (perturb && N >= 2) g1[N / 2].set(0, g1[N / 2].at(0) + 1);

  BivariateSeries h1(N);
  for (long n = 0;; ++n) {
    const long e1 = n * (3 * n + 1) / 2;
    if (e1 > N) break;
    const int s = (n % 2 == 0) ? +1 : -1;
    h1[e1].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), 3 * n), 0, s);
    const long e2 = e1 + 2 * n + 1;
    if (e2 <= N)
      h1[e2].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), 3 * n + 2), 0, -s);
  }
  ZetaLaurent one_minus_zeta = ZetaLaurent::one();
  one_minus_zeta.set(1, BigInt(-1));
  h1.multiply_zeta_poly(one_minus_zeta);

  BivariateSeries rhs = series_mul(detail::crank_series(N), g1);
  rhs.add_inplace(h1);
  return detail::compare_tables(lhs, rhs, "U = C*G1 + H1 at order " + std::to_string(N));
}

inline IdentityReport verify_identity_V(long N, bool perturb = false) {
  RankTable lhs = build_durfee_table(N);

  BivariateSeries theta2(N);
  for (long n = 0;; ++n) {
    const long e1 = 3 * n * n + 2 * n;
    if (e1 > N) break;
    theta2[e1].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), 3 * n + 1), 0, +1);
    const long e2 = e1 + 2 * n + 1;
    if (e2 <= N)
      theta2[e2].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), 3 * n + 2), 0, -1);
  }
  BivariateSeries g2 = series_mul(series_invert(pochhammer_infinite({{+1, 0, 1}}, N)), theta2);
  if (perturb && N >= 2) g2[N / 2].set(0, g2[N / 2].at(0) + 1);

  BivariateSeries h2(N);
  for (long n = 0;; ++n) {
    const long e = n * n + n;
    if (e > N) break;
    h2[e].add_scaled_shifted(ZetaLaurent::monomial(BigInt(1), n), 0, +1);
  }
  ZetaLaurent one_minus_zeta = ZetaLaurent::one();
  one_minus_zeta.set(1, BigInt(-1));
  h2.multiply_zeta_poly(one_minus_zeta);

  BivariateSeries rhs = series_mul(detail::crank_series(N), g2);
  rhs.add_inplace(h2);
  return detail::compare_tables(lhs, rhs, "V = C*G2 + H2 at order " + std::to_string(N));
}

inline IdentityReport verify_identity_D(long N, bool perturb = false) {
  RankTable lhs = build_semistrict_table(N);

  // (1 + ζ^{-2} q) and its reciprocal expand with ζ-powers down to -2N.
  BivariateSeries one_plus = BivariateSeries::one(N);
  one_plus.multiply_one_minus(-1, -2, 1);

  BivariateSeries dstar = series_mul(pochhammer_infinite({{-1, -1, 1}}, N),
                                     series_invert(series_mul(one_plus,
                                                              pochhammer_infinite({{+1, +1, 1}}, N))));
  dstar.multiply_q();
  dstar.multiply_zeta_poly(ZetaLaurent::monomial(BigInt(1), -1));  // 1/ζ
  if (perturb && N >= 2) dstar[N / 2].set(0, dstar[N / 2].at(0) + 1);

  // q (1 - ζ^{-1}) / (1 + ζ^{-2} q)
  BivariateSeries corr = series_invert(one_plus);
  corr.multiply_q();
  ZetaLaurent pref = ZetaLaurent::one();
  pref.set(-1, BigInt(-1));
  corr.multiply_zeta_poly(pref);

  BivariateSeries rhs = series_add(dstar, corr);
  return detail::compare_tables(lhs, rhs, "D = D* + q(1-1/ζ)/(1+q/ζ²) at order " + std::to_string(N));
}

}  // namespace qrank
