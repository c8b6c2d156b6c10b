#pragma once

// Exact table builders for the five rank families, driven by their generating
// functions with incremental term updates (term_n from term_{n-1} costs one
// q-shift plus a handful of one-factor passes, instead of a fresh Pochhammer
// product per n).
//
//   unimodal      U(ζ;q) = Σ_{n>=0} q^n / ((ζq;q)_n (ζ^{-1}q;q)_n)
//                 term_n = term_{n-1} * q / ((1-ζq^n)(1-ζ^{-1}q^n))
//
//   durfee        V(ζ;q) = Σ_{n>=0} (q^{n+1};q)_n q^n / ((ζq;q)_n (ζ^{-1}q;q)_n)
//                 extra factor ratio (q^{n+1};q)_n / (q^n;q)_{n-1}
//                   = (1-q^{2n-1})(1-q^{2n}) / (1-q^n)
//
//   semistrict    D(ζ;q) = Σ_{n>=0} (-ζ^{-1}q;q)_n / (ζq;q)_n * q^{n+1}
//                 term_n = term_{n-1} * q (1+ζ^{-1}q^n) / (1-ζq^n)
//
//   partition     R(ζ;q) = Σ_{j>=0} q^{j^2} / ((ζq;q)_j (ζ^{-1}q;q)_j)
//   rank          (Durfee-square dissection; validated against brute force)
//
//   partition     C(ζ;q) = (q;q)_∞ / ((ζq;q)_∞ (ζ^{-1}q;q)_∞)
//   crank         full divide passes, then one sparse multiply by (q;q)_∞ via
//                 the pentagonal number theorem
//
// Each term has q-valuation n (n+1 for semistrict, j^2 for the rank series),
// so the accumulation stops once the valuation passes the truncation order.

#include "qrank/bivariate_series.hpp"
#include "qrank/rank_table.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace qrank {

using ProgressFn = std::function<void(long done, long total)>;

namespace detail {

inline void report(const ProgressFn& progress, long done, long total) {
  if (progress && (done % 50 == 0 || done == total)) progress(done, total);
}

inline RankTable to_table(Family family, BivariateSeries&& acc) {
  RankTable t;
  t.family = family;
  t.order = acc.order();
  t.rows.reserve(static_cast<size_t>(acc.order()) + 1);
  for (long n = 0; n <= acc.order(); ++n) {
    acc[n].trim();
    t.rows.push_back(std::move(acc[n]));
  }
  return t;
}

}  // namespace detail

inline RankTable build_unimodal_table(long N, const ProgressFn& progress = {}) {
  BivariateSeries acc = BivariateSeries::one(N);
  BivariateSeries term = BivariateSeries::one(N);
  for (long n = 1; n <= N; ++n) {
    term.multiply_q();
    term.divide_one_minus(+1, +1, n);
    term.divide_one_minus(+1, -1, n);
    acc.add_inplace(term);
    detail::report(progress, n, N);
  }
  return detail::to_table(Family::unimodal, std::move(acc));
}

inline RankTable build_durfee_table(long N, const ProgressFn& progress = {}) {
  BivariateSeries acc = BivariateSeries::one(N);
  BivariateSeries term = BivariateSeries::one(N);
  for (long n = 1; n <= N; ++n) {
    term.multiply_q();
    if (2 * n - 1 <= N) term.multiply_one_minus(+1, 0, 2 * n - 1);
    if (2 * n <= N) term.multiply_one_minus(+1, 0, 2 * n);
    term.divide_one_minus(+1, 0, n);
    term.divide_one_minus(+1, +1, n);
    term.divide_one_minus(+1, -1, n);
    acc.add_inplace(term);
    detail::report(progress, n, N);
  }
  return detail::to_table(Family::durfee, std::move(acc));
}

inline RankTable build_semistrict_table(long N, const ProgressFn& progress = {}) {
  BivariateSeries acc(N);
  BivariateSeries term = BivariateSeries::one(N);
  term.multiply_q();  // term_0 = q
  acc.add_inplace(term);
  for (long n = 1; n + 1 <= N; ++n) {
    term.multiply_q();
    term.multiply_one_minus(-1, -1, n);  // * (1 + ζ^{-1} q^n)
    term.divide_one_minus(+1, +1, n);
    acc.add_inplace(term);
    detail::report(progress, n, N);
  }
  return detail::to_table(Family::semistrict, std::move(acc));
}

inline RankTable build_partition_rank_table(long N, const ProgressFn& progress = {}) {
  BivariateSeries acc = BivariateSeries::one(N);
  BivariateSeries term = BivariateSeries::one(N);
  for (long j = 1; j * j <= N; ++j) {
    term.multiply_q(2 * j - 1);
    term.divide_one_minus(+1, +1, j);
    term.divide_one_minus(+1, -1, j);
    acc.add_inplace(term);
    detail::report(progress, j * j, N);
  }
  detail::report(progress, N, N);
  return detail::to_table(Family::partition_rank, std::move(acc));
}

inline RankTable build_crank_table(long N, const ProgressFn& progress = {}) {
  BivariateSeries p = BivariateSeries::one(N);
  for (long n = 1; n <= N; ++n) {
    p.divide_one_minus(+1, +1, n);
    p.divide_one_minus(+1, -1, n);
    detail::report(progress, n, N);
  }
  // Multiply by (q;q)_∞ = Σ_{j∈Z} (-1)^j q^{j(3j-1)/2} (pentagonal numbers).
  std::vector<std::pair<long, int>> pent{{0, +1}};
  for (long j = 1;; ++j) {
    const long g1 = j * (3 * j - 1) / 2;
    const long g2 = j * (3 * j + 1) / 2;
    const int s = (j % 2 == 0) ? +1 : -1;
    if (g1 > N) break;
    pent.emplace_back(g1, s);
    if (g2 <= N) pent.emplace_back(g2, s);
  }
  BivariateSeries acc(N);
  for (long i = 0; i <= N; ++i)
    for (const auto& [g, s] : pent)
      if (g <= i) acc[i].add_scaled_shifted(p[i - g], 0, s);
  return detail::to_table(Family::partition_crank, std::move(acc));
}

inline RankTable build_table(Family family, long N, const ProgressFn& progress = {}) {
  switch (family) {
    case Family::unimodal: return build_unimodal_table(N, progress);
    case Family::durfee: return build_durfee_table(N, progress);
    case Family::semistrict: return build_semistrict_table(N, progress);
    case Family::partition_rank: return build_partition_rank_table(N, progress);
    case Family::partition_crank: return build_crank_table(N, progress);
  }
  throw std::invalid_argument("build_table: bad family");
}

}  // namespace qrank
