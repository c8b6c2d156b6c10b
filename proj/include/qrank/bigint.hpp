#pragma once

// Exact scalar types. All table coefficients are arbitrary-precision integers;
// rationals appear only in the special-function layer (Bernoulli/Euler values).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrank {

using BigInt = mpz_class;
using Rational = mpq_class;

inline double to_double(const BigInt& x) { return x.get_d(); }
inline double to_double(const Rational& x) { return x.get_d(); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Reduced rational with positive denominator.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// |x|^k as an exact integer (k small, |x| may exceed what fits in 64-bit powers).
inline BigInt int_pow_abs(long x, unsigned k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(x < 0 ? -x : x), k);
  return r;
}

// Little-endian magnitude bytes; sign is carried separately (cache format).
inline std::vector<std::uint8_t> export_magnitude(const BigInt& x) {
  std::vector<std::uint8_t> out;
  if (x == 0) return out;
  const size_t nbytes = (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
  out.resize(nbytes);
  size_t written = 0;
  mpz_export(out.data(), &written, -1, 1, 0, 0, x.get_mpz_t());
  out.resize(written);
  return out;
}

inline BigInt import_magnitude(const std::uint8_t* data, size_t len, bool negative) {
  BigInt x;
  if (len > 0) mpz_import(x.get_mpz_t(), len, -1, 1, 0, 0, data);
  if (negative) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  return x;
}

}  // namespace qrank
