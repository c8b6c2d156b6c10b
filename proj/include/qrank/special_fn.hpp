#pragma once

// Special-function kernel: Bernoulli/Euler polynomials with exact rational
// coefficients, zeta values, the digamma-based pole constant, modified
// Bessel functions, and the logistic distribution. Everything here is either
// exact arithmetic or double precision with a stated accuracy target; the
// asymptotic layer on top consumes these values verbatim.

#include "qrank/bigint.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qrank {

inline constexpr double kEulerGamma = 0.57721566490153286061;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Dense polynomial with exact rational coefficients, ascending powers.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
    return acc;
  }

  // p(scale*x + shift), used to build Euler polynomials from Bernoulli ones.
  RationalPolynomial compose_affine(const Rational& scale, const Rational& shift) const {
    std::vector<Rational> out(c_.size(), Rational(0));
    // Maintain (scale*x + shift)^k incrementally.
    std::vector<Rational> pw{Rational(1)};
    for (std::size_t k = 0; k < c_.size(); ++k) {
      for (std::size_t i = 0; i < pw.size(); ++i) out[i] += c_[k] * pw[i];
      if (k + 1 < c_.size()) {
        std::vector<Rational> next(pw.size() + 1, Rational(0));
        for (std::size_t i = 0; i < pw.size(); ++i) {
          next[i] += pw[i] * shift;
          next[i + 1] += pw[i] * scale;
        }
        pw = std::move(next);
      }
    }
    return RationalPolynomial(std::move(out));
  }

  RationalPolynomial operator-(const RationalPolynomial& rhs) const {
    std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return RationalPolynomial(std::move(out));
  }

  RationalPolynomial scaled(const Rational& s) const {
    std::vector<Rational> out = c_;
    for (auto& v : out) v *= s;
    return RationalPolynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// B_0..B_m with the B_1 = -1/2 convention.
inline std::vector<Rational> bernoulli_numbers(unsigned m) {
  std::vector<Rational> b(m + 1, Rational(0));
  b[0] = 1;
  for (unsigned n = 1; n <= m; ++n) {
    Rational acc(0);
    for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * b[j];
    b[n] = -acc / Rational(n + 1);
  }
  return b;
}

// B_n(x) = sum_{k=0}^n C(n,k) B_k x^{n-k}.
inline RationalPolynomial bernoulli_poly(unsigned n) {
  std::vector<Rational> b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * b[k];
  return RationalPolynomial(std::move(c));
}

// E_n(x) = (2^{n+1}/(n+1)) (B_{n+1}((x+1)/2) - B_{n+1}(x/2)).
inline RationalPolynomial euler_poly(unsigned n) {
  RationalPolynomial b = bernoulli_poly(n + 1);
  const Rational half = make_rational(1, 2);
  RationalPolynomial diff = b.compose_affine(half, half) - b.compose_affine(half, Rational(0));
  BigInt two_pow = BigInt(1) << (n + 1);
  return diff.scaled(Rational(two_pow) / Rational(n + 1));
}

// zeta(k) for integer k >= 2; even orders exact via Bernoulli numbers, odd
// orders by direct summation with a tail correction (abs error < 1e-13).
inline double zeta_value(unsigned k) {
  if (k < 2) throw std::domain_error("zeta_value: requires k >= 2");
  if (k % 2 == 0) {
    const unsigned m = k / 2;
    std::vector<Rational> b = bernoulli_numbers(k);
    double factorial = 1.0;
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    return sign * to_double(b[k]) * std::pow(2.0 * M_PI, static_cast<double>(k)) /
           (2.0 * factorial);
  }
  const double M = 100.0;
  double s = 0.0;
  for (unsigned n = 99; n >= 1; --n) s += std::pow(static_cast<double>(n), -static_cast<double>(k));
  const double kk = static_cast<double>(k);
  double tail = std::pow(M, 1.0 - kk) / (kk - 1.0) + 0.5 * std::pow(M, -kk) +
                kk / 12.0 * std::pow(M, -kk - 1.0) -
                kk * (kk + 1.0) * (kk + 2.0) / 720.0 * std::pow(M, -kk - 3.0);
  return s + tail;
}

namespace detail {

// psi(x) for x > 0: shift to x >= 10 then the standard asymptotic series.
inline double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  static const double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  double r = std::log(x) - 0.5 / x;
  const double x2 = x * x;
  double p = x2;
  for (unsigned j = 1; j <= 6; ++j) {
    r -= b2j[j - 1] / (2.0 * j * p);
    p *= x2;
  }
  return r + acc;
}

}  // namespace detail

// The constant C_a = -EulerGamma - psi(a) from the pole-term expansion.
inline double digamma_const(double a) { return -kEulerGamma - detail::digamma(a); }

// Modified Bessel function I_j(x) for integer j >= 0, x >= 0, target 1e-12
// relative accuracy. Ascending series below x = 30, asymptotic expansion
// above; `scaled` returns e^{-x} I_j(x) to keep huge arguments finite.
inline double bessel_i(unsigned j, double x, bool scaled = false) {
  if (x < 0.0) throw std::domain_error("bessel_i: requires x >= 0");
  if (x < 30.0) {
    double term = 1.0;
    for (unsigned i = 1; i <= j; ++i) term *= (x / 2.0) / i;
    double sum = term;
    const double q = x * x / 4.0;
    for (unsigned m = 1; m <= 400; ++m) {
      term *= q / (static_cast<double>(m) * (m + j));
      sum += term;
      if (term < 1e-17 * sum) break;
    }
    return scaled ? sum * std::exp(-x) : sum;
  }
  const double mu = 4.0 * static_cast<double>(j) * j;
  double term = 1.0, sum = 1.0, prev = HUGE_VAL;
  for (unsigned k = 1; k <= 30; ++k) {
    const double l = 2.0 * k - 1.0;
    term *= -(mu - l * l) / (8.0 * k * x);
    if (std::fabs(term) >= prev) break;  // asymptotic series: stop at smallest term
    sum += term;
    prev = std::fabs(term);
    if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
  }
  const double envelope = 1.0 / std::sqrt(2.0 * M_PI * x);
  return scaled ? envelope * sum : envelope * sum * std::exp(x);
}

// CDF 1/(1 + e^{-pi x}) of the logistic law with scale 1/pi; its k-th moment
// is (2^k - 2)|B_k|, the limit law behind the normalized even rank moments.
inline double logistic_cdf(double x) { return 1.0 / (1.0 + std::exp(-M_PI * x)); }

}  // namespace qrank
