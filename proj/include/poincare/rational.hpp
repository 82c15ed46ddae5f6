#pragma once

#include <gmpxx.h>

#include <string>

#include "poincare/error.hpp"

namespace poincare {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Binomial coefficient with C(m,k)=0 for k<0 or 0<=m<k. Negative m with
/// k>=0 is outside the counting formulas this library serves and is rejected.
inline Integer binomial(long m, long k) {
  if (k < 0) return 0;
  if (m < 0) {
    throw Error(Errc::unsupported_argument,
                "binomial(" + std::to_string(m) + ", " + std::to_string(k) + ") with negative m");
  }
  if (k > m) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return r;
}

inline Integer kronecker(long a, long b) { return a == b ? 1 : 0; }

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_int(const Rational& base, long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e < 0) {
    if (r.get_num() == 0) throw Error(Errc::division_by_zero, "zero raised to a negative power");
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  r.canonicalize();
  return r;
}

/// Exact integer from a rational known to be integral.
inline Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw Error(Errc::invalid_spec, "expected an integer, got " + to_string(q));
  return q.get_num();
}

}  // namespace poincare
