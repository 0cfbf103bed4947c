#pragma once

// Symmetric Laurent polynomials S_n = k[z1^±1..zn^±1]^{S_n} in the averaged
// orbit basis
//   m_γ = (1/n!) Σ_σ Π_i z_{σ(i)}^{γ_i},
// so m_γ depends only on the multiset γ. Keys are stored nonincreasing.

#include <functional>
#include <string>
#include <vector>

#include "loopsl2/linear_combination.hpp"
#include "loopsl2/permutations.hpp"

namespace loopsl2 {

using ExponentVector = std::vector<Index>;

inline ExponentVector canonical_index(ExponentVector gamma)
{
  std::sort(gamma.begin(), gamma.end(), std::greater<>());
  return gamma;
}

inline Index total_degree(const ExponentVector& v)
{
  return std::accumulate(v.begin(), v.end(), Index{0});
}

class SymElement {
public:
  using Terms = LinearCombination<ExponentVector>;

  explicit SymElement(std::size_t n) : n_(n)
  {
    if (n == 0)
      throw domain_error("S_n needs n >= 1");
  }

  static SymElement basis(ExponentVector gamma, const Rational& coeff = Rational(1))
  {
    SymElement out(gamma.size());
    out.add(std::move(gamma), coeff);
    return out;
  }

  // m_{(0,...,0)}, the unit.
  static SymElement one(std::size_t n) { return basis(ExponentVector(n, 0)); }

  std::size_t arity() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& gamma) const { return terms_.coefficient(canonical_index(gamma)); }

  void add(ExponentVector gamma, const Rational& coeff)
  {
    if (gamma.size() != n_)
      throw arity_mismatch("index of length " + std::to_string(gamma.size()) + " in S_" + std::to_string(n_));
    terms_.add(canonical_index(std::move(gamma)), coeff);
  }

  SymElement& operator+=(const SymElement& other)
  {
    check_arity(other);
    terms_ += other.terms_;
    return *this;
  }
  SymElement& operator-=(const SymElement& other)
  {
    check_arity(other);
    terms_ -= other.terms_;
    return *this;
  }
  SymElement& operator*=(const Rational& s)
  {
    terms_ *= s;
    return *this;
  }

  friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
  friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
  friend SymElement operator*(const Rational& s, SymElement a) { return a *= s; }
  friend SymElement operator*(SymElement a, const Rational& s) { return a *= s; }
  friend bool operator==(const SymElement& a, const SymElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  void check_arity(const SymElement& other) const
  {
    if (other.n_ != n_)
      throw arity_mismatch("S_" + std::to_string(n_) + " vs S_" + std::to_string(other.n_));
  }

private:
  std::size_t n_;
  Terms terms_;
};

// m_γ·m_χ = (1/n!) Σ_τ m_{γ+χ_τ}. Summing over distinct rearrangements of χ
// instead of all of S_n replaces 1/n! by 1/#rearrangements.
inline SymElement sym_mul(const SymElement& a, const SymElement& b)
{
  a.check_arity(b);
  SymElement out(a.arity());
  const std::size_t n = a.arity();
  for (const auto& [gamma, ca] : a.terms())
    for (const auto& [chi, cb] : b.terms()) {
      const bool swap = count_distinct_arrangements(chi) > count_distinct_arrangements(gamma);
      const ExponentVector& fixed = swap ? chi : gamma;
      const ExponentVector& moving = swap ? gamma : chi;
      std::vector<ExponentVector> sums;
      std::size_t count = for_each_distinct_arrangement(moving, [&](const ExponentVector& arr) {
        ExponentVector s(n);
        for (std::size_t i = 0; i < n; ++i)
          s[i] = fixed[i] + arr[i];
        sums.push_back(std::move(s));
      });
      Rational w = ca * cb / Rational(static_cast<long>(count));
      for (auto& s : sums)
        out.add(std::move(s), w);
    }
  return out;
}

inline SymElement operator*(const SymElement& a, const SymElement& b)
{
  return sym_mul(a, b);
}

// p_k = Σ z_i^k = n·m_{(k,0,...,0)}
inline SymElement power_sum(std::size_t n, Index k)
{
  ExponentVector gamma(n, 0);
  gamma[0] = k;
  return SymElement::basis(std::move(gamma), Rational(static_cast<long>(n)));
}

inline Integer binomial(std::size_t n, std::size_t k)
{
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// e_i = C(n,i)·m_{(1^i, 0^{n-i})}
inline SymElement elem_sym(std::size_t n, std::size_t i)
{
  if (i < 1 || i > n)
    throw domain_error("elementary symmetric e_" + std::to_string(i) + " undefined for n = " + std::to_string(n));
  ExponentVector gamma(n, 0);
  std::fill(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(i), 1);
  return SymElement::basis(std::move(gamma), Rational(binomial(n, i)));
}

// Λ_n = Φ_n² with the alternant Φ_n = Σ_σ sign(σ) Π z_i^{σ(i)}; Φ_n = ±Πz_i·Π_{i<j}(z_i - z_j),
// so Φ_n² = (Π z_i²)·D_n with no sign ambiguity. For a symmetric polynomial the
// m-coefficient of an orbit is the sum of its monomial coefficients.
inline SymElement lambda_poly(std::size_t n)
{
  SymElement out(n);
  std::vector<std::pair<std::vector<int>, int>> perms;
  for_each_permutation(n, [&](const std::vector<int>& p, int sign) { perms.emplace_back(p, sign); });
  for (const auto& [sigma, s1] : perms)
    for (const auto& [tau, s2] : perms) {
      ExponentVector exps(n);
      for (std::size_t i = 0; i < n; ++i)
        exps[i] = sigma[i] + tau[i] + 2; // permutations are 0-based
      out.add(std::move(exps), Rational(s1 * s2));
    }
  return out;
}

// D_n = Π_{i<j}(z_i - z_j)² = m_{(-2,...,-2)}·Λ_n
inline SymElement discriminant(std::size_t n)
{
  return sym_mul(SymElement::basis(ExponentVector(n, -2)), lambda_poly(n));
}

// ---------------------------------------------------------------------------
// Laurent polynomials in n variables (expansion oracle).

class LaurentElement {
public:
  using Terms = LinearCombination<ExponentVector>;

  explicit LaurentElement(std::size_t n) : n_(n) {}

  static LaurentElement monomial(ExponentVector exps, const Rational& coeff = Rational(1))
  {
    LaurentElement out(exps.size());
    out.add(std::move(exps), coeff);
    return out;
  }

  std::size_t arity() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& e) const { return terms_.coefficient(e); }

  void add(ExponentVector exps, const Rational& coeff)
  {
    if (exps.size() != n_)
      throw arity_mismatch("exponent vector of wrong length");
    terms_.add(std::move(exps), coeff);
  }

  LaurentElement& operator+=(const LaurentElement& o)
  {
    check_arity(o);
    terms_ += o.terms_;
    return *this;
  }
  LaurentElement& operator-=(const LaurentElement& o)
  {
    check_arity(o);
    terms_ -= o.terms_;
    return *this;
  }
  LaurentElement& operator*=(const Rational& s)
  {
    terms_ *= s;
    return *this;
  }
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator*(const Rational& s, LaurentElement a) { return a *= s; }
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b)
  {
    a.check_arity(b);
    LaurentElement out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExponentVector e(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
          e[i] = ea[i] + eb[i];
        out.terms_.add(std::move(e), ca * cb);
      }
    return out;
  }

  // Multiply by Π z_i^{shift_i}.
  LaurentElement shifted(const ExponentVector& shift) const
  {
    LaurentElement out(n_);
    for (const auto& [e, c] : terms_) {
      ExponentVector s(n_);
      for (std::size_t i = 0; i < n_; ++i)
        s[i] = e[i] + shift[i];
      out.terms_.add(std::move(s), c);
    }
    return out;
  }

  // Componentwise minimum exponent; requires a nonzero element.
  ExponentVector min_exponents() const
  {
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < n_; ++i)
        m[i] = std::min(m[i], e[i]);
    return m;
  }

  void check_arity(const LaurentElement& o) const
  {
    if (o.n_ != n_)
      throw arity_mismatch("Laurent polynomials over different variable counts");
  }

private:
  std::size_t n_;
  Terms terms_;
};

// m_γ = (1/#orbit) Σ_{β in orbit(γ)} z^β
inline LaurentElement expand(const SymElement& a)
{
  LaurentElement out(a.arity());
  for (const auto& [gamma, coeff] : a.terms()) {
    std::vector<ExponentVector> orbit;
    for_each_distinct_arrangement(gamma, [&](const ExponentVector& arr) { orbit.push_back(arr); });
    Rational w = coeff / Rational(static_cast<long>(orbit.size()));
    for (auto& beta : orbit)
      out.add(std::move(beta), w);
  }
  return out;
}

// Inverse of expand. Throws not_symmetric with a witness pair when some
// monomial and one of its rearrangements carry different coefficients.
inline SymElement symmetrize(const LaurentElement& p)
{
  SymElement out(p.arity());
  std::map<ExponentVector, ExponentVector> seen; // orbit key -> first member
  for (const auto& [exps, coeff] : p.terms()) {
    ExponentVector key = canonical_index(exps);
    if (!seen.emplace(key, exps).second)
      continue;
    for_each_distinct_arrangement(exps, [&](const ExponentVector& arr) {
      if (p.coefficient(arr) != coeff)
        throw not_symmetric(exps, arr);
    });
    Rational orbit_size(static_cast<long>(count_distinct_arrangements(exps)));
    out.add(key, coeff * orbit_size);
  }
  return out;
}

// Exact division in S_n. Both operands are shifted by monomials into the
// polynomial ring (the divisor so that no variable divides it), divided with
// lex-leading terms, and shifted back. Monomials are units, and z_i is prime,
// so a Laurent quotient exists iff this polynomial division is exact.
inline SymElement divide_exact(const SymElement& a, const SymElement& b)
{
  a.check_arity(b);
  if (b.is_zero())
    throw domain_error("division by zero");
  const std::size_t n = a.arity();
  if (a.is_zero())
    return SymElement(n);

  LaurentElement la = expand(a), lb = expand(b);
  ExponentVector shift_a = la.min_exponents(), shift_b = lb.min_exponents();
  ExponentVector neg_a(n), neg_b(n), back(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_a[i] = -shift_a[i];
    neg_b[i] = -shift_b[i];
    back[i] = shift_a[i] - shift_b[i];
  }
  LaurentElement rem = la.shifted(neg_a);
  const LaurentElement divisor = lb.shifted(neg_b);
  const auto& [lead_exp, lead_coeff] = *divisor.terms().terms().rbegin();

  LaurentElement quotient(n);
  while (!rem.is_zero()) {
    const auto& [rexp, rcoeff] = *rem.terms().terms().rbegin();
    ExponentVector delta(n);
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = rexp[i] - lead_exp[i];
      if (delta[i] < 0)
        throw not_divisible("divide_exact: leading term not divisible; nonzero remainder");
    }
    Rational c = rcoeff / lead_coeff;
    quotient.add(delta, c);
    rem -= (c * divisor).shifted(delta);
  }
  return symmetrize(quotient.shifted(back));
}

// Substitute exact values for z_1..z_n.
inline Rational evaluate(const LaurentElement& p, const std::vector<Rational>& point)
{
  Rational out(0);
  for (const auto& [exps, coeff] : p.terms()) {
    Rational term = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i)
      term *= rational_pow(point[i], exps[i]);
    out += term;
  }
  return out;
}

// Terms grouped by total degree.
inline std::map<Index, SymElement> degree_decompose(const SymElement& a)
{
  std::map<Index, SymElement> out;
  for (const auto& [gamma, coeff] : a.terms())
    out.try_emplace(total_degree(gamma), a.arity()).first->second.add(gamma, coeff);
  return out;
}

} // namespace loopsl2
