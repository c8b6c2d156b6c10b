#pragma once

// Euler-Maclaurin style expansions of one-dimensional lattice sums
//
//   S(w)  = sum_{m>=0} f(w(m+a))            (plain and pole variants)
//   S±(w) = sum_{m>=0} (-1)^m f(w(m+a))     (alternating variant)
//
// as w -> 0+, with a in (0,1]. Three regimes:
//
//   plain        S = (1/w)Int_0^inf f  - sum_{n<N} B_{n+1}(a)/(n+1)! f^(n)(0) w^n + O(w^N)
//   alternating  S± = (1/2) sum_{n<N} E_n(a)/n! f^(n)(0) w^n + O(w^N)
//   simple pole  f(x) = b_{-1}/x + sum b_n x^n near 0:
//                S = -b_{-1} Log(w)/w + b_{-1} C_a / w
//                    + (1/w)Int_0^inf (f(x) - b_{-1} e^{-x}/x) dx
//                    - sum_{n<N} B_{n+1}(a) b_n/(n+1) w^n + O(w^N),
//                with C_a = -EulerGamma - psi(a).
//
// The caller certifies the decay of f so the reference sum can be truncated
// with a provable tail bound; a certificate too weak to reach the target
// accuracy raises decay_violation_error instead of returning a wrong value.
// The regularized pole integral is evaluated with a Taylor patch near zero
// (the subtraction f - b_{-1}e^{-x}/x cancels catastrophically in doubles),
// so the pole variant wants generous `laurent` data: ~12 coefficients give
// patch truncation below 1e-13.

#include "qrank/bigint.hpp"
#include "qrank/special_fn.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qrank {

struct decay_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecayCertificate {
  enum class Kind { exponential, gaussian, power };
  Kind kind = Kind::exponential;
  double C = 1.0;   // |f(x)| <= C K(x) for x >= x0
  double c = 1.0;   // K = e^{-cx}, e^{-cx^2}, or x^{-c} (power needs c > 1)
  double x0 = 0.0;
};

struct ExpansionInput {
  std::function<double(double)> f;
  std::vector<double> derivs;   // f^(n)(0) for n = 0..order-1 (plain/alternating)
  double b_minus1 = 0.0;        // residue of the simple pole at 0 (pole variant)
  std::vector<double> laurent;  // Taylor part b_0, b_1, ... (pole variant)
  Rational a = Rational(1);     // lattice offset, 0 < a <= 1
  int order = 1;                // N in the O(w^N) remainder
  DecayCertificate decay;
};

struct EmResult {
  double sum = 0.0;        // truncated reference sum
  double expansion = 0.0;  // the expansion through w^{N-1}
  double remainder = 0.0;  // sum - expansion, should be O(w^N)
};

namespace detail {

// Upper bound for the tail sum over lattice points >= x with spacing w.
inline double tail_bound(const DecayCertificate& d, double x, double w) {
  if (x < d.x0) return HUGE_VAL;
  switch (d.kind) {
    case DecayCertificate::Kind::exponential:
      return d.C * std::exp(-d.c * x) / (1.0 - std::exp(-d.c * w));
    case DecayCertificate::Kind::gaussian: {
      if (x <= 0.0) return HUGE_VAL;
      const double ratio = std::exp(-d.c * (2.0 * x * w + w * w));
      return d.C * std::exp(-d.c * x * x) / (1.0 - ratio);
    }
    case DecayCertificate::Kind::power: {
      if (d.c <= 1.0 || x <= 0.0) return HUGE_VAL;
      return d.C * std::pow(x, -d.c) + d.C * std::pow(x, 1.0 - d.c) / (w * (d.c - 1.0));
    }
  }
  return HUGE_VAL;
}

inline double em_direct_sum(const ExpansionInput& inp, double w, bool alternating) {
  const double a = to_double(inp.a);
  double sum = 0.0;
  int sign = 1;
  constexpr long kMaxTerms = 50'000'000;
  for (long m = 0; m < kMaxTerms; ++m) {
    const double x = w * (m + a);
    sum += sign * inp.f(x);
    if (alternating) sign = -sign;
    const double bound = tail_bound(inp.decay, x + w, w);
    if (bound < 1e-17 * (std::fabs(sum) + 1.0)) return sum;
  }
  throw decay_violation_error("em_direct_sum: certificate too weak to truncate the sum");
}

inline double integrate_0_inf(const std::function<double(double)>& g) {
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double head = ts.integrate(g, 0.0, 1.0);
  const double tail = es.integrate([&](double t) { return g(1.0 + t); });
  return head + tail;
}

inline void check_offset(const Rational& a) {
  if (!(a > 0) || a > 1) throw std::invalid_argument("expansion offset must be in (0,1]");
}

}  // namespace detail

inline EmResult em_expand(const ExpansionInput& inp, double w) {
  detail::check_offset(inp.a);
  if (inp.order < 1 || inp.derivs.size() < static_cast<std::size_t>(inp.order))
    throw std::invalid_argument("em_expand: need f^(n)(0) for n < order");

  EmResult r;
  r.sum = detail::em_direct_sum(inp, w, false);
  double exp_val = detail::integrate_0_inf(inp.f) / w;
  double wn = 1.0, factorial = 1.0;  // (n+1)! tracked incrementally
  for (int n = 0; n < inp.order; ++n) {
    factorial *= n + 1;
    exp_val -= to_double(bernoulli_poly(n + 1).eval(inp.a)) * inp.derivs[n] / factorial * wn;
    wn *= w;
  }
  r.expansion = exp_val;
  r.remainder = r.sum - r.expansion;
  return r;
}

inline EmResult em_expand_alternating(const ExpansionInput& inp, double w) {
  detail::check_offset(inp.a);
  if (inp.order < 1 || inp.derivs.size() < static_cast<std::size_t>(inp.order))
    throw std::invalid_argument("em_expand_alternating: need f^(n)(0) for n < order");

  EmResult r;
  r.sum = detail::em_direct_sum(inp, w, true);
  double exp_val = 0.0, wn = 1.0, factorial = 1.0;
  for (int n = 0; n < inp.order; ++n) {
    if (n > 0) factorial *= n;
    exp_val += 0.5 * to_double(euler_poly(n).eval(inp.a)) * inp.derivs[n] / factorial * wn;
    wn *= w;
  }
  r.expansion = exp_val;
  r.remainder = r.sum - r.expansion;
  return r;
}

inline EmResult em_expand_pole(const ExpansionInput& inp, double w) {
  detail::check_offset(inp.a);
  if (inp.order < 1 || inp.laurent.size() < static_cast<std::size_t>(inp.order))
    throw std::invalid_argument("em_expand_pole: need Laurent data b_n for n < order");

  EmResult r;
  r.sum = detail::em_direct_sum(inp, w, false);

  // Regularized integral of g = f - b_{-1} e^{-x}/x. On [0, xp] use the
  // Taylor series g_n = b_n + (-1)^n b_{-1}/(n+1)!; past xp the subtraction
  // is numerically benign.
  const double xp = 0.1;
  double patch = 0.0, xpn = xp, factorial = 1.0;
  for (std::size_t n = 0; n < inp.laurent.size(); ++n) {
    factorial *= n + 1;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double gn = inp.laurent[n] + sign * inp.b_minus1 / factorial;
    patch += gn * xpn / (n + 1);
    xpn *= xp;
  }
  auto g = [&](double x) { return inp.f(x) - inp.b_minus1 * std::exp(-x) / x; };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double mid = ts.integrate(g, xp, 1.0);
  const double tail = es.integrate([&](double t) { return g(1.0 + t); });
  const double reg_integral = patch + mid + tail;

  const double ca = digamma_const(to_double(inp.a));
  double exp_val = -inp.b_minus1 * std::log(w) / w + inp.b_minus1 * ca / w + reg_integral / w;
  double wn = 1.0;
  for (int n = 0; n < inp.order; ++n) {
    exp_val -= to_double(bernoulli_poly(n + 1).eval(inp.a)) * inp.laurent[n] / (n + 1) * wn;
    wn *= w;
  }
  r.expansion = exp_val;
  r.remainder = r.sum - r.expansion;
  return r;
}

}  // namespace qrank
