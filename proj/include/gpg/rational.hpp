#ifndef GPG_RATIONAL_HPP
#define GPG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gpg {

// Exact rational value type. All verification-grade arithmetic in this
// library is done in Rational; floating point appears only where a
// logarithm or exponential is unavoidable.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// q^e for e >= 0.
inline Rational rational_pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_str(const Rational& q) {
  return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

// Accepts "p", "p/q", and optional surrounding sign.
inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: bad literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

// Every finite double is exactly representable as a rational.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::optional<std::int64_t> to_int64(const Rational& q) {
  if (!is_integer(q)) return std::nullopt;
  if (!q.get_num().fits_slong_p()) return std::nullopt;
  long v = q.get_num().get_si();
  return static_cast<std::int64_t>(v);
}

}  // namespace gpg

#endif  // GPG_RATIONAL_HPP
