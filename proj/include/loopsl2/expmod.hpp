#pragma once

// Exp-functions φ(k) = -2 Σ α_i^k, the H-modules L(φ) = im φ̃ with
// φ̃(h_k) = φ(k) t^k, quotient maps M_n → L(φ), and the induced modules
// Ṽ(φ) = Ind_{H+E}^{g} L(φ) with E·L(φ) = 0.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "loopsl2/realization.hpp"

namespace loopsl2 {

class ExpFunction {
public:
  ExpFunction() = default;

  explicit ExpFunction(std::vector<Rational> roots) : roots_(std::move(roots))
  {
    for (const auto& a : roots_)
      if (a == 0)
        throw domain_error("exp-function roots must be nonzero");
    std::sort(roots_.begin(), roots_.end());
  }

  const std::vector<Rational>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  Rational operator()(Index k) const
  {
    Rational sum(0);
    for (const auto& a : roots_)
      sum += rational_pow(a, k);
    return -2 * sum;
  }

  friend bool operator==(const ExpFunction&, const ExpFunction&) = default;

private:
  std::vector<Rational> roots_;
};

inline Rational phi_eval(const ExpFunction& phi, Index k)
{
  return phi(k);
}

using PolyModElement = LaurentT;

inline PolyModElement polymod_act_h(const ExpFunction& phi, Index k, const PolyModElement& x)
{
  PolyModElement out;
  Rational scale = phi(k);
  for (const auto& [l, c] : x)
    out.add(l + k, scale * c);
  return out;
}

// M_n → L(φ): Θ followed by z_i ↦ α_i t. On layer 0, c·v ↦ c.
inline PolyModElement quotient_map(const ExpFunction& phi, const ModuleElement& x)
{
  PolyModElement out;
  if (x.empty())
    return out;
  const std::size_t n = homogeneous_layer(x);
  if (n != phi.size())
    throw layer_mismatch("quotient_map: layer " + std::to_string(n) + " but " + std::to_string(phi.size()) + " roots");
  if (n == 0) {
    out.add(0, x.begin()->second);
    return out;
  }
  return eval_eta(phi.roots(), theta(x));
}

// Degrees d with a nonzero component of L(φ) are exactly the multiples of
// the graded image period (only d = 0 when φ = 0).
inline bool in_image_support(const ExpFunction& phi, Index d)
{
  if (phi.size() == 0)
    return d == 0;
  return d % graded_image_period(phi.roots()) == 0;
}

// ---------------------------------------------------------------------------
// Induced module Ṽ(φ): f_γ ⊗ t^l.

struct InducedKey {
  FMonomial mono;
  Index l;
  friend auto operator<=>(const InducedKey&, const InducedKey&) = default;
};

using InducedElement = LinearCombination<InducedKey>;

inline InducedElement induced_term(std::vector<Index> exps, Index l, const Rational& c = Rational(1))
{
  return InducedElement::term(InducedKey{FMonomial(std::move(exps)), l}, c);
}

// f_k: prepend a factor.
// h_k: [h_k, f_γ] = -2 Σ_i f_{γ with γ_i -> γ_i + k}, then h_k acts on Λ by φ(k) t^k.
// e_k: [e_k, f_γ] = -2 Σ_{i<j} f_{γ∖{i,j}} f_{γ_i+γ_j+k} + Σ_i f_{γ∖i} h_{γ_i+k},
//      and E·Λ = 0.
inline InducedElement induced_act(const ExpFunction& phi, const Letter& letter, const InducedElement& x)
{
  InducedElement out;
  const Index k = letter.index;
  for (const auto& [key, coeff] : x) {
    const auto exps = key.mono.exponents();
    switch (letter.kind) {
    case Generator::f:
      out.add(InducedKey{key.mono.with(k), key.l}, coeff);
      break;
    case Generator::h:
      for (std::size_t i = 0; i < exps.size(); ++i)
        out.add(InducedKey{key.mono.without(i).with(exps[i] + k), key.l}, -2 * coeff);
      out.add(InducedKey{key.mono, key.l + k}, phi(k) * coeff);
      break;
    case Generator::e:
      for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i + 1; j < exps.size(); ++j)
          out.add(InducedKey{key.mono.without(i, j).with(exps[i] + exps[j] + k), key.l}, -2 * coeff);
      for (std::size_t i = 0; i < exps.size(); ++i) {
        const Index m = exps[i] + k;
        out.add(InducedKey{key.mono.without(i), key.l + m}, phi(m) * coeff);
      }
      break;
    }
  }
  return out;
}

inline InducedElement induced_act_word(const ExpFunction& phi, const Word& word, InducedElement x)
{
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = induced_act(phi, *it, x);
  return x;
}

// Component in the top layer 1 ⊗ L(φ).
inline PolyModElement top_layer(const InducedElement& x)
{
  PolyModElement out;
  for (const auto& [key, coeff] : x)
    if (key.mono.layer() == 0)
      out.add(key.l, coeff);
  return out;
}

// True when no product e_{k1}···e_{kr} with indices in [kmin, kmax] sends w to
// a nonzero top-layer vector. Each e_k lowers the layer by one, so words
// longer than the deepest layer of w need not be tried. `false` is a definite
// witness that w lies outside the maximal submodule avoiding the top layer;
// `true` is evidence limited to the window.
inline bool avoids_top_window(const ExpFunction& phi, const InducedElement& w, Index kmin, Index kmax)
{
  if (!top_layer(w).empty())
    throw domain_error("avoids_top_window: w has a top-layer component");
  std::vector<InducedElement> frontier{w};
  while (!frontier.empty()) {
    std::vector<InducedElement> next;
    for (const auto& x : frontier) {
      if (x.empty())
        continue;
      for (Index k = kmin; k <= kmax; ++k) {
        InducedElement y = induced_act(phi, {Generator::e, k}, x);
        if (y.empty())
          continue;
        if (!top_layer(y).empty())
          return false;
        if (std::find(next.begin(), next.end(), y) == next.end())
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return true;
}

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<Rational> scale; // λ with φ(k) = λ^k ψ(k)
};

// φ(k) = λ^k ψ(k) for all k iff the root multisets satisfy {α} = λ·{β}.
inline IsomorphismResult are_isomorphic(const ExpFunction& phi, const ExpFunction& psi)
{
  if (phi.size() != psi.size())
    return {};
  if (phi.size() == 0)
    return {true, Rational(1)};
  const auto& alphas = phi.roots();
  for (const auto& beta : psi.roots()) {
    Rational lambda = alphas.front() / beta;
    std::vector<Rational> scaled;
    for (const auto& b : psi.roots())
      scaled.push_back(lambda * b);
    std::sort(scaled.begin(), scaled.end());
    if (scaled == alphas)
      return {true, lambda};
  }
  return {};
}

// Irreducibility evidence for L(φ): starting from a nonzero homogeneous x,
// repeated h_k (k in the window) reach a nonzero vector in every supported
// degree of [dmin, dmax]. Intermediate degrees may leave the target window by
// up to max |k|.
inline bool cyclicity_check(const ExpFunction& phi, const PolyModElement& x, Index kmin, Index kmax, Index dmin, Index dmax)
{
  if (x.size() != 1)
    throw domain_error("cyclicity_check: x must be nonzero and homogeneous");
  const Index d0 = x.begin()->first;
  if (!in_image_support(phi, d0))
    throw domain_error("cyclicity_check: x is not in L(phi)");
  const Index reach = std::max(kmin < 0 ? -kmin : kmin, kmax < 0 ? -kmax : kmax);
  const Index lo = std::min(dmin, d0) - reach, hi = std::max(dmax, d0) + reach;

  std::map<Index, PolyModElement> reached{{d0, x}};
  std::vector<PolyModElement> frontier{x};
  while (!frontier.empty()) {
    std::vector<PolyModElement> next;
    for (const auto& y : frontier)
      for (Index k = kmin; k <= kmax; ++k) {
        PolyModElement z = polymod_act_h(phi, k, y);
        if (z.empty())
          continue;
        Index d = z.begin()->first;
        if (d < lo || d > hi || reached.count(d))
          continue;
        reached.emplace(d, z);
        next.push_back(std::move(z));
      }
    frontier = std::move(next);
  }
  for (Index d = dmin; d <= dmax; ++d)
    if (in_image_support(phi, d) && !reached.count(d))
      return false;
  return true;
}

// Graded dimensions of L(φ) on [dmin, dmax]; im φ̃ sits inside k[t^±1], so
// each is 0 or 1.
inline std::map<Index, std::size_t> component_dim(const ExpFunction& phi, Index dmin, Index dmax)
{
  if (dmin > dmax)
    throw domain_error("component_dim: dmin > dmax");
  std::map<Index, std::size_t> out;
  for (Index d = dmin; d <= dmax; ++d)
    out[d] = in_image_support(phi, d) ? 1 : 0;
  return out;
}

} // namespace loopsl2
