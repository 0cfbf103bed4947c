#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "loopsl2/errors.hpp"

namespace loopsl2 {

// Exact rationals; every value is kept canonical (lowest terms, positive
// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Loop-algebra generator indices, monomial exponents and t-degrees.
using Index = std::int64_t;

inline Rational make_rational(long num, long den = 1)
{
  if (den == 0)
    throw parse_error("zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

// "p/q" or "p"; whitespace is not accepted.
inline Rational parse_rational(std::string_view text)
{
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw parse_error("malformed rational '" + std::string(text) + "'");
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer n(strip_plus(num)), d(strip_plus(den));
  if (d == 0)
    throw parse_error("zero denominator in '" + std::string(text) + "'");
  Rational r{n, d};
  r.canonicalize();
  return r;
}

// Lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r)
{
  return r.get_str();
}

inline Rational rational_pow(const Rational& base, Index exponent)
{
  if (exponent == 0)
    return Rational(1);
  if (base == 0) {
    if (exponent < 0)
      throw domain_error("negative power of zero");
    return Rational(0);
  }
  Rational result;
  auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), e);
  result.canonicalize();
  if (exponent < 0)
    result = 1 / result;
  return result;
}

} // namespace loopsl2
