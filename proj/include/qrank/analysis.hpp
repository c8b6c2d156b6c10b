#pragma once

// Statistical analysis over finished rank tables: moment extraction,
// convergence-to-main-term diagnostics, empirical distributions with exact
// Kolmogorov-Smirnov distances, log-concavity scans over conjectured
// regions, and the two-variable discriminant check.
//
// Everything that can stay exact does: moments and partial CDF sums are
// integer/rational until the final conversion, so the only floating error
// in a reported deviation comes from the main-term evaluation itself.

#include "qrank/asymptotics.hpp"
#include "qrank/bigint.hpp"
#include "qrank/parallel.hpp"
#include "qrank/rank_table.hpp"
#include "qrank/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrank {

enum class MomentKind { signed_moment, absolute_moment };

inline double moment_value(const ZetaLaurent& row, unsigned k, MomentKind kind) {
  return to_double(kind == MomentKind::signed_moment ? row.moment(k) : row.abs_moment(k));
}

// k-th moments for every n = 0..order of the table.
inline std::vector<double> moments(const RankTable& table, unsigned k, MomentKind kind) {
  std::vector<double> out(static_cast<std::size_t>(table.order) + 1);
  for (long n = 0; n <= table.order; ++n)
    out[static_cast<std::size_t>(n)] = moment_value(table.row(n), k, kind);
  return out;
}

struct ConvergenceReport {
  std::vector<long> ns;
  std::vector<double> deviations;  // |observed / main_term - 1| per checkpoint
  bool trend_ok = false;           // non-increasing across the last trend_points
  bool final_ok = false;           // last deviation within tolerance
  bool ok = false;
  double final_deviation = 0.0;
};

// Deviation of observed values from a main term across growing checkpoints.
// trend_ok demands the deviations be non-increasing over the last
// `trend_points` checkpoints; a microscopic slack absorbs double rounding.
inline ConvergenceReport convergence_ratio(const std::vector<long>& ns,
                                           const std::vector<double>& observed,
                                           const std::function<double(double)>& main_term,
                                           double final_tol, std::size_t trend_points = 3) {
  if (ns.size() != observed.size() || ns.empty())
    throw std::invalid_argument("convergence_ratio: checkpoint/value size mismatch");
  ConvergenceReport rep;
  rep.ns = ns;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double mt = main_term(static_cast<double>(ns[i]));
    rep.deviations.push_back(std::fabs(observed[i] / mt - 1.0));
  }
  rep.final_deviation = rep.deviations.back();
  rep.final_ok = rep.final_deviation <= final_tol;
  rep.trend_ok = true;
  const std::size_t first = rep.deviations.size() > trend_points
                                ? rep.deviations.size() - trend_points
                                : 0;
  for (std::size_t i = first + 1; i < rep.deviations.size(); ++i)
    if (rep.deviations[i] > rep.deviations[i - 1] * (1.0 + 1e-9)) rep.trend_ok = false;
  rep.ok = rep.final_ok && rep.trend_ok;
  return rep;
}

struct NormalizedLimitReport {
  std::vector<long> ns;
  std::vector<double> values;  // normalized k-th moment per checkpoint
  double target = 0.0;
};

// Normalized moment along the documented limit law:
//   unimodal/durfee:  u_k(n) / ((3n)^{k/2} u(n))        -> (2^k - 2)|B_k|
//   semistrict:       dm_k(n) / ((sqrt(n) log(n)/pi)^k dm(n)) -> 1
// The logistic target covers every k >= 1 (odd k gives 0); k = 0 is 1.
inline NormalizedLimitReport normalized_moment_limit(const RankTable& table, unsigned k,
                                                     const std::vector<long>& ns) {
  NormalizedLimitReport rep;
  rep.ns = ns;
  const bool logistic =
      table.family == Family::unimodal || table.family == Family::durfee;
  if (!logistic && table.family != Family::semistrict)
    throw std::invalid_argument("normalized_moment_limit: no documented limit law for family");

  if (k == 0) {
    rep.target = 1.0;
  } else if (logistic) {
    std::vector<Rational> b = bernoulli_numbers(k);
    rep.target = (std::pow(2.0, static_cast<double>(k)) - 2.0) * std::fabs(to_double(b[k]));
  } else {
    rep.target = 1.0;  // point mass at 1: every moment is 1
  }

  for (long n : ns) {
    const ZetaLaurent& row = table.row(n);
    const double total = to_double(row.sum());
    const double scale = logistic
                             ? std::pow(3.0 * n, 0.5 * k)
                             : std::pow(std::sqrt(static_cast<double>(n)) * std::log(n) / M_PI,
                                        static_cast<double>(k));
    rep.values.push_back(to_double(row.moment(k)) / (scale * total));
  }
  return rep;
}

struct EmpiricalCdf {
  std::vector<double> xs;  // jump locations, strictly increasing
  std::vector<double> F;   // CDF value at and right of xs[i]
};

// Exact empirical CDF of the rank statistic at size n, with the statistic
// scaled by 1/scale. Partial sums stay rational until the final division.
inline EmpiricalCdf empirical_cdf(const ZetaLaurent& row, double scale) {
  if (row.is_zero()) throw std::invalid_argument("empirical_cdf: empty distribution");
  EmpiricalCdf out;
  const BigInt total = row.sum();
  BigInt partial = 0;
  for (long m = row.lo(); m < row.lo() + static_cast<long>(row.support_size()); ++m) {
    const BigInt& c = row.at(m);
    if (c == 0) continue;
    partial += c;
    out.xs.push_back(static_cast<double>(m) / scale);
    out.F.push_back(to_double(Rational(partial) / Rational(total)));
  }
  return out;
}

// sup_x |F_n(x) - T(x)| against a continuous CDF T: attained at a jump,
// comparing T with the CDF values just before and at the jump.
inline double ks_distance(const EmpiricalCdf& cdf, const std::function<double(double)>& target) {
  double ks = 0.0, prev = 0.0;
  for (std::size_t i = 0; i < cdf.xs.size(); ++i) {
    const double t = target(cdf.xs[i]);
    ks = std::max(ks, std::max(cdf.F[i] - t, t - prev));
    prev = cdf.F[i];
  }
  return ks;
}

inline double ks_logistic(const EmpiricalCdf& cdf) {
  return ks_distance(cdf, [](double x) { return logistic_cdf(x); });
}

// Against the point mass at c the supremum is max(F(c^-), 1 - F(c)).
inline double ks_point_mass(const EmpiricalCdf& cdf, double c = 1.0) {
  double below = 0.0, at_or_below = 0.0;
  for (std::size_t i = 0; i < cdf.xs.size(); ++i) {
    if (cdf.xs[i] < c) below = cdf.F[i];
    if (cdf.xs[i] <= c) at_or_below = cdf.F[i];
  }
  return std::max(below, 1.0 - at_or_below);
}

struct ScanRule {
  std::string name;
  Family family = Family::unimodal;
  long n_min = 0;
  long margin = 0;  // inequality checked for |m| <= n - margin
};

// Named log-concavity regions. The first spelling is canonical; the
// bracketed spellings are accepted aliases.
inline ScanRule parse_scan_rule(const std::string& s) {
  if (s == "unimodal" || s == "conjecture-4.1") return {"unimodal", Family::unimodal, 37, 23};
  if (s == "partition-rank" || s == "conjecture-N")
    return {"partition-rank", Family::partition_rank, 123, 72};
  if (s == "partition-crank" || s == "conjecture-M")
    return {"partition-crank", Family::partition_crank, 125, 71};
  throw std::invalid_argument("unknown scan rule: " + s + " (expected unimodal, partition-rank, partition-crank, or custom)");
}

struct ScanViolation {
  long n = 0;
  long m = 0;
};

struct ScanReport {
  long n_lo = 0, n_hi = 0, margin = 0;
  long checked = 0;  // number of (n, m) inequalities evaluated
  std::vector<ScanViolation> violations;  // capped at 32 entries
  long violation_count = 0;
  bool ok = false;
};

// Checks f(m,n)^2 >= f(m-1,n) f(m+1,n) in exact integers for every n in
// [n_lo, n_hi] and |m| <= n - margin. Chunked per n; chunk results merge in
// order, so output is independent of the worker count.
inline ScanReport logconcavity_scan(const RankTable& table, long n_lo, long n_hi, long margin) {
  if (n_hi > table.order) throw std::invalid_argument("logconcavity_scan: table too small");
  struct Chunk {
    long checked = 0;
    long violation_count = 0;
    std::vector<ScanViolation> violations;
  };
  auto scan_range = [&](long a, long b) {
    Chunk ch;
    BigInt lhs, rhs;
    for (long n = a; n < b; ++n) {
      const ZetaLaurent& row = table.row(n);
      const long bound = n - margin;
      for (long m = -bound; m <= bound; ++m) {
        lhs = row.at(m) * row.at(m);
        rhs = row.at(m - 1) * row.at(m + 1);
        ++ch.checked;
        if (lhs < rhs) {
          ++ch.violation_count;
          if (ch.violations.size() < 32) ch.violations.push_back({n, m});
        }
      }
    }
    return ch;
  };

  ScanReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.margin = margin;
  for (const Chunk& ch : parallel_chunk_map<Chunk>(n_lo, n_hi + 1, scan_range)) {
    rep.checked += ch.checked;
    rep.violation_count += ch.violation_count;
    for (const ScanViolation& v : ch.violations)
      if (rep.violations.size() < 32) rep.violations.push_back(v);
  }
  rep.ok = rep.violation_count == 0;
  return rep;
}

inline ScanReport logconcavity_scan(const RankTable& table, const ScanRule& rule, long n_hi) {
  if (table.family != rule.family)
    throw std::invalid_argument("logconcavity_scan: rule targets a different family");
  return logconcavity_scan(table, rule.n_min, n_hi, rule.margin);
}

struct DiscriminantReport {
  long m = 0;
  std::vector<long> ns;
  std::vector<double> ratios;  // exact discriminant / pi^6/2 X_3 X_5
};

// The two-variable expansion makes u(m,n)^2 - u(m-1,n) u(m+1,n) collapse to
// pi^4 X_5 times the leading sum, i.e. (pi^6/2) X_3 X_5 to first order, with
// the m dependence cancelling. The ratio of the exact discriminant to that
// prediction should drift to 1 uniformly in small m.
inline DiscriminantReport lemma_discriminant_check(const RankTable& table, long m,
                                                   const std::vector<long>& ns) {
  DiscriminantReport rep;
  rep.m = m;
  rep.ns = ns;
  const double pi6 = std::pow(M_PI, 6);
  for (long n : ns) {
    const ZetaLaurent& row = table.row(n);
    const BigInt disc = row.at(m) * row.at(m) - row.at(m - 1) * row.at(m + 1);
    const double main = 0.5 * pi6 * bessel_term_x(3, static_cast<double>(n)) *
                        bessel_term_x(5, static_cast<double>(n));
    rep.ratios.push_back(to_double(disc) / main);
  }
  return rep;
}

}  // namespace qrank
