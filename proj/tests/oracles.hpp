#pragma once

// Brute-force oracles used only by the tests. None of these share code paths
// with the library routine they check.

#include <numeric>
#include <vector>

#include "loopsl2/loopmod.hpp"
#include "loopsl2/symlaurent.hpp"

namespace oracle {

using loopsl2::Index;
using loopsl2::LaurentElement;
using loopsl2::ModuleElement;
using loopsl2::Rational;
using loopsl2::SymElement;

inline long factorial(std::size_t n)
{
  long f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<long>(i);
  return f;
}

// m_γ = (1/n!) Σ_σ Π z_σ(i)^γ_i over all n! permutations.
inline LaurentElement expand_all_permutations(const SymElement& p)
{
  const std::size_t n = p.arity();
  LaurentElement out(n);
  for (const auto& [gamma, coeff] : p.terms()) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    Rational w = coeff / Rational(factorial(n));
    do {
      std::vector<Index> exps(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        exps[sigma[i]] += gamma[i];
      out.add(exps, w);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

// Π_{i<j} (z_i - z_j)^2 by repeated Laurent multiplication.
inline LaurentElement discriminant_product(std::size_t n)
{
  LaurentElement out = LaurentElement::monomial(std::vector<Index>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Index> zi(n, 0), zj(n, 0);
      zi[i] = 1;
      zj[j] = 1;
      LaurentElement diff = LaurentElement::monomial(zi) - LaurentElement::monomial(zj);
      out = out * diff * diff;
    }
  return out;
}

// Identify z_j with z_i.
inline LaurentElement identify(const LaurentElement& p, std::size_t i, std::size_t j)
{
  LaurentElement out(p.arity());
  for (const auto& [exps, coeff] : p.terms()) {
    auto e = exps;
    e[i] += e[j];
    e[j] = 0;
    out.add(e, coeff);
  }
  return out;
}

// Dimension of span{vectors} by naive Gaussian elimination over a dense
// coordinate list.
inline std::size_t rank_of(std::vector<std::vector<Rational>> rows)
{
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0)
        continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the joint kernel of e_k for k in [-bound, bound] on the span of
// `monos`, computed from the closed-form e-action at concrete k.
inline std::size_t kernel_dim_by_sampling(const std::vector<loopsl2::FMonomial>& monos, Index bound)
{
  std::map<std::pair<Index, loopsl2::FMonomial>, std::size_t> row_index;
  std::vector<ModuleElement> images_per_k;
  std::vector<std::vector<std::pair<std::pair<Index, loopsl2::FMonomial>, Rational>>> cols(monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j)
    for (Index k = -bound; k <= bound; ++k)
      for (const auto& [m, c] : loopsl2::act_e(k, ModuleElement::term(monos[j]))) {
        auto key = std::make_pair(k, m);
        row_index.emplace(key, 0);
        cols[j].emplace_back(key, c);
      }
  std::size_t r = 0;
  for (auto& e : row_index)
    e.second = r++;
  // rank of the (rows x cols) matrix via its transpose
  std::vector<std::vector<Rational>> t(monos.size(), std::vector<Rational>(row_index.size(), Rational(0)));
  for (std::size_t j = 0; j < monos.size(); ++j)
    for (const auto& [key, c] : cols[j])
      t[j][row_index[key]] += c;
  return monos.size() - rank_of(t);
}

} // namespace oracle
