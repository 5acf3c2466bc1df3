#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace cyclocover {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms with q > 0; integers keep the "/1".
inline std::string to_fraction_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction_string(const std::string& s);

/// Floor of a rational as a rational.
inline Rational floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - floor(r); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::size_t hash_value(const Integer& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  if (p->_mp_size != 0) h = h * 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(mpz_getlimbn(p, 0));
  return h;
}

inline std::size_t hash_value(const Rational& q) {
  return hash_value(q.get_num()) * 31 + hash_value(q.get_den());
}

inline double to_double(const Integer& z) { return z.get_d(); }
inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational to_rational(const Integer& z) { return Rational(z); }
inline Rational to_rational(const Rational& q) { return q; }

}  // namespace cyclocover
