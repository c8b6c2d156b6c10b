#pragma once

// Laurent polynomial in ζ with exact integer coefficients over a dense window.
//
// One value of this type is one q-coefficient of a bivariate series: it holds
// the finite family {f(m)} of rank counts at a fixed size, with f(m) stored at
// index m - lo. Supports here are contiguous intervals (ranks fill [-n, n]
// without gaps), so a dense window beats a sparse map.
//
// Canonical form: the window ends are nonzero, and the zero polynomial has an
// empty window. All arithmetic is exact.

#include "qrank/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace qrank {

class ZetaLaurent {
 public:
  ZetaLaurent() = default;

  static ZetaLaurent monomial(BigInt value, long exponent) {
    ZetaLaurent z;
    if (value != 0) {
      z.lo_ = exponent;
      z.c_.push_back(std::move(value));
    }
    return z;
  }

  static ZetaLaurent one() { return monomial(BigInt(1), 0); }

  bool is_zero() const { return c_.empty(); }
  long lo() const { return lo_; }
  long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }
  size_t support_size() const { return c_.size(); }

  // Coefficient of ζ^e; zero outside the window.
  const BigInt& at(long e) const {
    static const BigInt kZero(0);
    if (c_.empty() || e < lo_ || e > hi()) return kZero;
    return c_[static_cast<size_t>(e - lo_)];
  }

  // this += sign * ζ^shift * src. The workhorse of every table build.
  void add_scaled_shifted(const ZetaLaurent& src, long shift, int sign) {
    if (src.is_zero()) return;
    const long slo = src.lo_ + shift;
    const long shi = src.hi() + shift;
    ensure_window(slo, shi);
    BigInt* dst = c_.data() + (slo - lo_);
    const BigInt* s = src.c_.data();
    const size_t n = src.c_.size();
    if (sign >= 0) {
      for (size_t i = 0; i < n; ++i) dst[i] += s[i];
    } else {
      for (size_t i = 0; i < n; ++i) dst[i] -= s[i];
    }
    trim();
  }

  void add(const ZetaLaurent& other) { add_scaled_shifted(other, 0, +1); }
  void sub(const ZetaLaurent& other) { add_scaled_shifted(other, 0, -1); }

  // this += a * b (schoolbook convolution, fused multiply-add per pair).
  void add_mul(const ZetaLaurent& a, const ZetaLaurent& b) {
    if (a.is_zero() || b.is_zero()) return;
    ensure_window(a.lo_ + b.lo_, a.hi() + b.hi());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      const long base = a.lo_ + static_cast<long>(i) + b.lo_ - lo_;
      BigInt* dst = c_.data() + base;
      const BigInt& ai = a.c_[i];
      for (size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(dst[j].get_mpz_t(), ai.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    trim();
  }

  void sub_mul(const ZetaLaurent& a, const ZetaLaurent& b) {
    if (a.is_zero() || b.is_zero()) return;
    ensure_window(a.lo_ + b.lo_, a.hi() + b.hi());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      const long base = a.lo_ + static_cast<long>(i) + b.lo_ - lo_;
      BigInt* dst = c_.data() + base;
      const BigInt& ai = a.c_[i];
      for (size_t j = 0; j < b.c_.size(); ++j)
        mpz_submul(dst[j].get_mpz_t(), ai.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    trim();
  }

  ZetaLaurent mul(const ZetaLaurent& other) const {
    ZetaLaurent r;
    r.add_mul(*this, other);
    return r;
  }

  ZetaLaurent negated() const {
    ZetaLaurent r(*this);
    for (auto& v : r.c_) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
    return r;
  }

  // Substitution ζ -> ζ^{-1}: mirrors the window.
  ZetaLaurent mirrored() const {
    ZetaLaurent r;
    if (is_zero()) return r;
    r.lo_ = -hi();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
  }

  // Evaluation at ζ = 1, i.e. the row total.
  BigInt sum() const {
    BigInt s(0);
    for (const auto& v : c_) s += v;
    return s;
  }

  // Σ m^k f(m): exact signed moment of the exponent against the coefficients.
  BigInt moment(unsigned k) const {
    if (k == 0) return sum();
    BigInt s(0);
    for (size_t i = 0; i < c_.size(); ++i) {
      const long m = lo_ + static_cast<long>(i);
      if (m == 0 || c_[i] == 0) continue;
      BigInt p = int_pow_abs(m, k);
      if (m < 0 && (k & 1u)) {
        mpz_submul(s.get_mpz_t(), p.get_mpz_t(), c_[i].get_mpz_t());
      } else {
        mpz_addmul(s.get_mpz_t(), p.get_mpz_t(), c_[i].get_mpz_t());
      }
    }
    return s;
  }

  // Σ |m|^k f(m).
  BigInt abs_moment(unsigned k) const {
    if (k == 0) return sum();
    BigInt s(0);
    for (size_t i = 0; i < c_.size(); ++i) {
      const long m = lo_ + static_cast<long>(i);
      if (m == 0 || c_[i] == 0) continue;
      BigInt p = int_pow_abs(m, k);
      mpz_addmul(s.get_mpz_t(), p.get_mpz_t(), c_[i].get_mpz_t());
    }
    return s;
  }

  bool operator==(const ZetaLaurent& other) const {
    return lo_ == other.lo_ && c_ == other.c_;
  }
  bool operator!=(const ZetaLaurent& other) const { return !(*this == other); }

  // Mutable access for direct construction; callers must re-trim if they zero
  // out a window end.
  void set(long e, BigInt v) {
    if (v == 0 && (c_.empty() || e < lo_ || e > hi())) return;
    ensure_window(std::min(e, c_.empty() ? e : lo_), std::max(e, c_.empty() ? e : hi()));
    c_[static_cast<size_t>(e - lo_)] = std::move(v);
    trim();
  }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      lo_ += static_cast<long>(lead);
    }
    if (c_.empty()) lo_ = 0;
  }

 private:
  void ensure_window(long new_lo, long new_hi) {
    if (c_.empty()) {
      lo_ = new_lo;
      c_.resize(static_cast<size_t>(new_hi - new_lo + 1));
      return;
    }
    new_lo = std::min(new_lo, lo_);
    new_hi = std::max(new_hi, hi());
    if (new_lo == lo_ && new_hi == hi()) return;
    std::vector<BigInt> nc(static_cast<size_t>(new_hi - new_lo + 1));
    for (size_t i = 0; i < c_.size(); ++i)
      nc[static_cast<size_t>(lo_ - new_lo) + i] = std::move(c_[i]);
    c_.swap(nc);
    lo_ = new_lo;
  }

  long lo_ = 0;
  std::vector<BigInt> c_;
};

}  // namespace qrank
