#pragma once

// Maps tying U(H) and the layers M_n to S_n:
//   Ψ: h_k ↦ -2 p_k,   Θ: f_χ v ↦ m_χ,
// the S_n-module structure on M_n, evaluation z_i ↦ α_i t, and the
// classification of algebra homomorphisms S_n → Q.

#include <numeric>
#include <string>
#include <vector>

#include "loopsl2/loopmod.hpp"
#include "loopsl2/symlaurent.hpp"

namespace loopsl2 {

// h_{k1}···h_{km} in U(H).
using HWord = std::vector<Index>;

inline SymElement psi(std::size_t n, const HWord& word)
{
  SymElement out = SymElement::one(n);
  for (Index k : word)
    out = sym_mul(out, Rational(-2) * power_sum(n, k));
  return out;
}

inline SymElement theta(const ModuleElement& x)
{
  if (x.empty())
    throw layer_mismatch("theta: zero element has no layer; pass the arity explicitly");
  std::size_t n = homogeneous_layer(x);
  if (n == 0)
    throw layer_mismatch("theta: layer 0 is not realized in S_n");
  SymElement out(n);
  for (const auto& [mono, coeff] : x)
    out.add(mono.exponent_vector(), coeff);
  return out;
}

inline ModuleElement theta_inv(const SymElement& p)
{
  ModuleElement out;
  for (const auto& [gamma, coeff] : p.terms())
    out.add(FMonomial(gamma), coeff);
  return out;
}

// m_γ · f_χ v = (1/n!) Σ_σ Π_i f_{χ_i + γ_σ(i)} v
inline ModuleElement apply_sym(const SymElement& p, const ModuleElement& x)
{
  const std::size_t n = p.arity();
  ModuleElement out;
  for (const auto& [mono, cx] : x) {
    if (mono.layer() != n)
      throw layer_mismatch("apply_sym: element of S_" + std::to_string(n) + " applied to layer " +
                           std::to_string(mono.layer()));
    const auto chi = mono.exponents();
    for (const auto& [gamma, cp] : p.terms()) {
      std::vector<FMonomial> images;
      std::size_t count = for_each_distinct_arrangement(gamma, [&](const ExponentVector& arr) {
        std::vector<Index> exps(n);
        for (std::size_t i = 0; i < n; ++i)
          exps[i] = chi[i] + arr[i];
        images.emplace_back(std::move(exps));
      });
      Rational w = cx * cp / Rational(static_cast<long>(count));
      for (auto& m : images)
        out.add(std::move(m), w);
    }
  }
  return out;
}

// Laurent polynomials in the single variable t.
using LaurentT = LinearCombination<Index>;

inline std::string to_string(const LaurentT& p)
{
  if (p.empty())
    return "0";
  std::string out;
  for (const auto& [k, c] : p) {
    if (!out.empty())
      out += " + ";
    out += "(" + to_string(c) + ") t^" + std::to_string(k);
  }
  return out;
}

inline LaurentT laurent_mul(const LaurentT& a, const LaurentT& b)
{
  LaurentT out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      out.add(ka + kb, ca * cb);
  return out;
}

inline void check_nonzero_roots(const std::vector<Rational>& alphas)
{
  for (const auto& a : alphas)
    if (a == 0)
      throw domain_error("evaluation point has a zero coordinate");
}

// η: z_i ↦ α_i t, restricted to S_n.
inline LaurentT eval_eta(const std::vector<Rational>& alphas, const SymElement& p)
{
  check_nonzero_roots(alphas);
  if (alphas.size() != p.arity())
    throw arity_mismatch("eval_eta: " + std::to_string(alphas.size()) + " values for S_" + std::to_string(p.arity()));
  LaurentT out;
  for (const auto& [gamma, coeff] : p.terms()) {
    Rational sum(0);
    std::size_t count = for_each_distinct_arrangement(gamma, [&](const ExponentVector& arr) {
      Rational term(1);
      for (std::size_t i = 0; i < arr.size(); ++i)
        term *= rational_pow(alphas[i], arr[i]);
      sum += term;
    });
    out.add(total_degree(gamma), coeff * sum / Rational(static_cast<long>(count)));
  }
  return out;
}

namespace detail {

inline std::vector<Integer> prime_factors(Integer n)
{
  std::vector<Integer> primes;
  if (n < 0)
    n = -n;
  for (Integer p = 2; p * p <= n; ++p) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 25) != 0)
      break;
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

inline std::vector<Integer> divisors(Integer n)
{
  if (n < 0)
    n = -n;
  std::vector<Integer> out{1};
  for (const auto& p : prime_factors(n)) {
    std::size_t mult = 0;
    for (Integer m = n; m % p == 0; m /= p)
      ++mult;
    std::size_t base = out.size();
    Integer power = 1;
    for (std::size_t e = 1; e <= mult; ++e) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i)
        out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Horner evaluation, coefficients ascending.
inline Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x)
{
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Quotient by (x - root), coefficients ascending; the root must be exact.
inline std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& root)
{
  std::vector<Rational> out(coeffs.size() - 1);
  Rational carry(0);
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    carry = coeffs[i + 1] + carry * root;
    out[i] = carry;
  }
  return out;
}

} // namespace detail

// Rational roots with multiplicity of a polynomial with nonzero constant
// term (coefficients ascending). `residual` receives the factor left over.
inline std::vector<Rational> rational_roots(std::vector<Rational> coeffs, std::vector<Rational>* residual = nullptr)
{
  while (!coeffs.empty() && coeffs.back() == 0)
    coeffs.pop_back();
  std::vector<Rational> roots;
  bool found = true;
  while (coeffs.size() > 1 && found) {
    found = false;
    Integer lcm = 1;
    for (const auto& c : coeffs)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer c0 = Rational(coeffs.front() * lcm).get_num();
    Integer cn = Rational(coeffs.back() * lcm).get_num();
    if (c0 == 0)
      throw domain_error("rational_roots: zero constant term");
    for (const auto& p : detail::divisors(c0)) {
      for (const auto& q : detail::divisors(cn)) {
        for (int sign : {1, -1}) {
          Rational cand{Integer(sign * p), q};
          cand.canonicalize();
          if (detail::poly_eval(coeffs, cand) == 0) {
            roots.push_back(cand);
            coeffs = detail::deflate(coeffs, cand);
            found = true;
            break;
          }
        }
        if (found)
          break;
      }
      if (found)
        break;
    }
  }
  if (residual)
    *residual = coeffs;
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Given ζ(e_1), ..., ζ(e_n), factor 1 + Σ ζ(e_i) t^i = Π (1 + α_i t) over Q.
// The α_i (sorted) satisfy e_i(α) = ζ(e_i), hence ζ(p_k) = Σ α_i^k.
inline std::vector<Rational> classify_hom(std::size_t n, const std::vector<Rational>& zeta)
{
  if (n == 0 || zeta.size() != n)
    throw arity_mismatch("classify_hom: expected " + std::to_string(n) + " values");
  if (zeta.back() == 0)
    throw no_homomorphism("zeta(e_n) = 0 but e_n is invertible in S_n");
  // s^n g(1/s) = s^n + ζ1 s^{n-1} + ... + ζn = Π (s + α_i)
  std::vector<Rational> reversed(n + 1);
  reversed[n] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    reversed[n - i] = zeta[i - 1];
  std::vector<Rational> residual;
  auto roots = rational_roots(reversed, &residual);
  if (roots.size() != n)
    throw requires_extension("g(t) does not split over the rationals");
  std::vector<Rational> alphas;
  for (const auto& s : roots)
    alphas.push_back(-s);
  std::sort(alphas.begin(), alphas.end());
  return alphas;
}

// e_i evaluated at α.
inline std::vector<Rational> elementary_values(const std::vector<Rational>& alphas)
{
  std::vector<Rational> e(alphas.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& a : alphas)
    for (std::size_t i = alphas.size(); i >= 1; --i)
      e[i] += a * e[i - 1];
  return {e.begin() + 1, e.end()};
}

// Minimal positive degree m with a nonzero component in im η. S_n is generated
// by p_1..p_n together with e_n^{-1}, and k[t^±1] is a domain, so the support
// of the image is the subgroup generated by {k in 1..n : η(p_k) ≠ 0} and n.
inline Index graded_image_period(const std::vector<Rational>& alphas)
{
  check_nonzero_roots(alphas);
  const std::size_t n = alphas.size();
  if (n == 0)
    throw domain_error("graded_image_period: no roots");
  Index m = static_cast<Index>(n);
  for (std::size_t k = 1; k <= n; ++k) {
    LaurentT image = eval_eta(alphas, power_sum(n, static_cast<Index>(k)));
    if (!image.empty())
      m = std::gcd(m, static_cast<Index>(k));
  }
  if (static_cast<Index>(n) % m != 0)
    throw error("graded_image_period: period does not divide n");
  return m;
}

} // namespace loopsl2
