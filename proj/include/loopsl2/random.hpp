#pragma once

// Small random elements for property checks. All generators are driven by a
// caller-owned engine so runs are reproducible from the seed.

#include <random>

#include "loopsl2/expmod.hpp"

namespace loopsl2 {

using Rng = std::mt19937_64;

inline Index random_index(Rng& rng, Index lo, Index hi)
{
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

// Nonzero rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_nonzero_rational(Rng& rng, long max_num = 5, long max_den = 3)
{
  long p = 0;
  while (p == 0)
    p = std::uniform_int_distribution<long>(-max_num, max_num)(rng);
  long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  return make_rational(p, q);
}

inline std::vector<Index> random_exponents(Rng& rng, std::size_t n, Index lo, Index hi)
{
  std::vector<Index> out(n);
  for (auto& e : out)
    e = random_index(rng, lo, hi);
  return out;
}

// Nonzero layer-homogeneous element with up to `max_terms` terms.
inline ModuleElement random_module_element(Rng& rng, std::size_t layer, Index lo, Index hi, std::size_t max_terms = 3)
{
  ModuleElement x;
  while (x.empty()) {
    std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    for (std::size_t t = 0; t < terms; ++t)
      x.add(FMonomial(random_exponents(rng, layer, lo, hi)), random_nonzero_rational(rng));
  }
  return x;
}

// Nonzero.
inline SymElement random_sym_element(Rng& rng, std::size_t n, Index lo, Index hi, std::size_t max_terms = 3)
{
  SymElement p(n);
  while (p.is_zero()) {
    std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
    for (std::size_t t = 0; t < terms; ++t)
      p.add(random_exponents(rng, n, lo, hi), random_nonzero_rational(rng));
  }
  return p;
}

inline std::vector<Rational> random_roots(Rng& rng, std::size_t n, long max_num = 4, long max_den = 3)
{
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(random_nonzero_rational(rng, max_num, max_den));
  return out;
}

} // namespace loopsl2
