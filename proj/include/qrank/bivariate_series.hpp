#pragma once

// Truncated power series in q whose coefficients are ZetaLaurent values.
//
// The truncation order is fixed at construction and checked on every binary
// operation: coefficient c_n of any sum/product of order-N inputs equals the
// true coefficient of the untruncated series for all n <= N. Silent order
// coercion is the classic source of wrong q-series results, hence the checks.
//
// The in-place primitives divide_one_minus / multiply_one_minus apply one
// factor (1 - s ζ^e q^p)^{∓1} with a single pass of shifted row additions:
//
//   P / (1 - s ζ^e q^p):  P_i += s ζ^e P_{i-p}   for i ascending  (P_{i-p} is
//                                                 already the updated row)
//   P * (1 - s ζ^e q^p):  P_i -= s ζ^e P_{i-p}   for i descending
//
// Every table build in the enumerate layer reduces to these two passes, which
// makes a full build O(N^2 * W) big-integer additions with no multiplies.

#include "qrank/bigint.hpp"
#include "qrank/zeta_laurent.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrank {

class order_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class not_invertible_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class divergent_product_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BivariateSeries {
 public:
  explicit BivariateSeries(long order) : order_(order), c_(check_order(order) + 1) {}

  static BivariateSeries one(long order) {
    BivariateSeries s(order);
    s.c_[0] = ZetaLaurent::one();
    return s;
  }

  long order() const { return order_; }

  ZetaLaurent& operator[](long n) { return c_[static_cast<size_t>(n)]; }
  const ZetaLaurent& operator[](long n) const { return c_[static_cast<size_t>(n)]; }

  bool operator==(const BivariateSeries& other) const {
    return order_ == other.order_ && c_ == other.c_;
  }
  bool operator!=(const BivariateSeries& other) const { return !(*this == other); }

  void add_inplace(const BivariateSeries& other) {
    require_same_order(other);
    for (long n = 0; n <= order_; ++n) c_[n].add(other.c_[n]);
  }

  void sub_inplace(const BivariateSeries& other) {
    require_same_order(other);
    for (long n = 0; n <= order_; ++n) c_[n].sub(other.c_[n]);
  }

  // P *= q^p: shifts rows up, dropping what falls past the order.
  void multiply_q(long p = 1) {
    if (p <= 0) return;
    for (long i = order_; i >= p; --i) c_[i] = std::move(c_[i - p]);
    for (long i = 0; i < p && i <= order_; ++i) c_[i] = ZetaLaurent();
  }

  // P /= (1 - sign ζ^e q^p), p >= 1.
  void divide_one_minus(int sign, long zeta_exp, long q_pow) {
    if (q_pow < 1) throw std::invalid_argument("divide_one_minus: q power must be >= 1");
    for (long i = q_pow; i <= order_; ++i)
      c_[i].add_scaled_shifted(c_[i - q_pow], zeta_exp, sign);
  }

  // P *= (1 - sign ζ^e q^p), p >= 1.
  void multiply_one_minus(int sign, long zeta_exp, long q_pow) {
    if (q_pow < 1) throw std::invalid_argument("multiply_one_minus: q power must be >= 1");
    for (long i = order_; i >= q_pow; --i)
      c_[i].add_scaled_shifted(c_[i - q_pow], zeta_exp, -sign);
  }

  // P *= z for a fixed Laurent polynomial z (used for prefactors like 1 - ζ).
  void multiply_zeta_poly(const ZetaLaurent& z) {
    for (long n = 0; n <= order_; ++n) {
      ZetaLaurent r;
      r.add_mul(c_[n], z);
      c_[n] = std::move(r);
    }
  }

  // ζ -> ζ^{-1} on every coefficient.
  BivariateSeries mirrored() const {
    BivariateSeries r(order_);
    for (long n = 0; n <= order_; ++n) r.c_[n] = c_[n].mirrored();
    return r;
  }

 private:
  static long check_order(long order) {
    if (order < 0) throw std::invalid_argument("BivariateSeries: order must be >= 0");
    return order;
  }

  void require_same_order(const BivariateSeries& other) const {
    if (order_ != other.order_)
      throw order_mismatch_error("series order mismatch: " + std::to_string(order_) +
                                 " vs " + std::to_string(other.order_));
  }

  long order_;
  std::vector<ZetaLaurent> c_;
};

inline BivariateSeries series_add(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(a);
  r.add_inplace(b);
  return r;
}

inline BivariateSeries series_sub(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(a);
  r.sub_inplace(b);
  return r;
}

// Cauchy product truncated at the common order.
inline BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.order() != b.order())
    throw order_mismatch_error("series_mul: order mismatch");
  BivariateSeries r(a.order());
  for (long i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (long j = 0; i + j <= a.order(); ++j) r[i + j].add_mul(a[i], b[j]);
  }
  return r;
}

// Schoolbook reciprocal: with a_0 = 1, c_n = -Σ_{j=1..n} a_j c_{n-j}.
inline BivariateSeries series_invert(const BivariateSeries& a) {
  if (a[0] != ZetaLaurent::one())
    throw not_invertible_error("series_invert: constant term is not 1");
  BivariateSeries r(a.order());
  r[0] = ZetaLaurent::one();
  for (long n = 1; n <= a.order(); ++n) {
    for (long j = 1; j <= n; ++j) {
      if (a[j].is_zero()) continue;
      r[n].sub_mul(a[j], r[n - j]);
    }
  }
  return r;
}

// One q-Pochhammer factor descriptor: (1 - sign ζ^{zeta_exp} q^{j + q_shift})
// over the product index j. (ζq;q)_n is {+1, +1, 1}; (-ζ^{-1}q;q)_n is
// {-1, -1, 1}; (q^{n+1};q)_n is {+1, 0, n+1}.
struct PochFactor {
  int sign = +1;
  long zeta_exp = 0;
  long q_shift = 1;
};

inline BivariateSeries pochhammer_finite(const std::vector<PochFactor>& factors, long n,
                                         long order) {
  if (n < 0) throw std::invalid_argument("pochhammer_finite: n must be >= 0");
  BivariateSeries r = BivariateSeries::one(order);
  for (const auto& f : factors) {
    for (long j = 0; j < n; ++j) {
      const long p = j + f.q_shift;
      if (p > order) break;
      if (p < 1) throw std::invalid_argument("pochhammer_finite: factor with q power < 1");
      r.multiply_one_minus(f.sign, f.zeta_exp, p);
    }
  }
  return r;
}

inline BivariateSeries pochhammer_infinite(const std::vector<PochFactor>& factors,
                                           long order) {
  BivariateSeries r = BivariateSeries::one(order);
  for (const auto& f : factors) {
    if (f.q_shift < 1)
      throw divergent_product_error(
          "pochhammer_infinite: factor has q-valuation 0, product does not stabilize");
    for (long j = 0;; ++j) {
      const long p = j + f.q_shift;
      if (p > order) break;
      r.multiply_one_minus(f.sign, f.zeta_exp, p);
    }
  }
  return r;
}

}  // namespace qrank
