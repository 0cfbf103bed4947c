#pragma once

// Elements of N(0), the highest-weight-zero canonical quotient for loop sl(2),
// in the PBW basis f_{γ1}···f_{γn}·v (γ nondecreasing), and the exact action of
// the generators e_k, h_k, f_k.

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "loopsl2/linear_combination.hpp"

namespace loopsl2 {

// f_{γ1}···f_{γn}·v as the sorted multiset γ; the empty monomial is v.
class FMonomial {
public:
  FMonomial() = default;

  explicit FMonomial(std::vector<Index> exponents) : exps_(std::move(exponents))
  {
    std::sort(exps_.begin(), exps_.end());
  }

  FMonomial(std::initializer_list<Index> exponents) : FMonomial(std::vector<Index>(exponents)) {}

  std::span<const Index> exponents() const { return exps_; }
  const std::vector<Index>& exponent_vector() const { return exps_; }
  std::size_t layer() const { return exps_.size(); }
  Index degree() const { return std::accumulate(exps_.begin(), exps_.end(), Index{0}); }

  // f_k · (this)
  FMonomial with(Index k) const
  {
    FMonomial out;
    out.exps_.reserve(exps_.size() + 1);
    auto pos = std::upper_bound(exps_.begin(), exps_.end(), k);
    out.exps_.insert(out.exps_.end(), exps_.begin(), pos);
    out.exps_.push_back(k);
    out.exps_.insert(out.exps_.end(), pos, exps_.end());
    return out;
  }

  // Drop the factor at sorted position i.
  FMonomial without(std::size_t i) const
  {
    FMonomial out;
    out.exps_ = exps_;
    out.exps_.erase(out.exps_.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  FMonomial without(std::size_t i, std::size_t j) const
  {
    FMonomial out;
    out.exps_.reserve(exps_.size());
    for (std::size_t p = 0; p < exps_.size(); ++p)
      if (p != i && p != j)
        out.exps_.push_back(exps_[p]);
    return out;
  }

  // The factor at sorted position i replaced by f_k.
  FMonomial replaced(std::size_t i, Index k) const
  {
    FMonomial out;
    out.exps_ = exps_;
    out.exps_[i] = k;
    while (i > 0 && out.exps_[i - 1] > out.exps_[i]) {
      std::swap(out.exps_[i - 1], out.exps_[i]);
      --i;
    }
    while (i + 1 < out.exps_.size() && out.exps_[i + 1] < out.exps_[i]) {
      std::swap(out.exps_[i + 1], out.exps_[i]);
      ++i;
    }
    return out;
  }

  friend auto operator<=>(const FMonomial&, const FMonomial&) = default;

private:
  std::vector<Index> exps_;
};

using ModuleElement = LinearCombination<FMonomial>;

inline ModuleElement generator_v()
{
  return ModuleElement::term(FMonomial{});
}

inline ModuleElement monomial_element(std::vector<Index> exps, const Rational& coeff = Rational(1))
{
  return ModuleElement::term(FMonomial(std::move(exps)), coeff);
}

inline ModuleElement make_element(const std::vector<std::pair<std::vector<Index>, Rational>>& terms)
{
  ModuleElement out;
  for (const auto& [exps, coeff] : terms)
    out.add(FMonomial(exps), coeff);
  return out;
}

enum class Generator { e, h, f };

struct Letter {
  Generator kind;
  Index index;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A product of generators; the rightmost letter acts first.
using Word = std::vector<Letter>;

inline ModuleElement act_f(Index k, const ModuleElement& x)
{
  ModuleElement out;
  for (const auto& [mono, coeff] : x)
    out.add(mono.with(k), coeff);
  return out;
}

// h_k f_γ v = -2 Σ_i f_γ with γ_i replaced by γ_i + k.
inline ModuleElement act_h(Index k, const ModuleElement& x)
{
  ModuleElement out;
  for (const auto& [mono, coeff] : x) {
    Rational c = -2 * coeff;
    const auto exps = mono.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i)
      out.add(mono.replaced(i, exps[i] + k), c);
  }
  return out;
}

// e_k f_γ v = -2 Σ_{i<j} f_γ with γ_i, γ_j merged into γ_i + γ_j + k.
inline ModuleElement act_e(Index k, const ModuleElement& x)
{
  ModuleElement out;
  for (const auto& [mono, coeff] : x) {
    Rational c = -2 * coeff;
    const auto exps = mono.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::size_t j = i + 1; j < exps.size(); ++j)
        out.add(mono.without(i, j).with(exps[i] + exps[j] + k), c);
  }
  return out;
}

inline ModuleElement act(const Letter& letter, const ModuleElement& x)
{
  switch (letter.kind) {
  case Generator::e:
    return act_e(letter.index, x);
  case Generator::h:
    return act_h(letter.index, x);
  case Generator::f:
    return act_f(letter.index, x);
  }
  return {};
}

inline ModuleElement act_word(const Word& word, ModuleElement x)
{
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = act(*it, x);
  return x;
}

inline std::map<std::size_t, ModuleElement> layer_decompose(const ModuleElement& x)
{
  std::map<std::size_t, ModuleElement> out;
  for (const auto& [mono, coeff] : x)
    out[mono.layer()].add(mono, coeff);
  return out;
}

// Layer of a nonzero layer-homogeneous element; throws otherwise.
inline std::size_t homogeneous_layer(const ModuleElement& x)
{
  if (x.empty())
    throw layer_mismatch("zero element has no layer");
  std::size_t n = x.begin()->first.layer();
  for (const auto& [mono, coeff] : x)
    if (mono.layer() != n)
      throw layer_mismatch("element mixes layers");
  return n;
}

inline bool is_layer_homogeneous(const ModuleElement& x)
{
  return x.empty() || layer_decompose(x).size() == 1;
}

// ---------------------------------------------------------------------------
// Formal e-action. The key (μ, s) stands for the monomial μ ∪ {s + k}, so one
// certificate encodes e_k·x for every k simultaneously.

struct FormalKey {
  FMonomial rest;
  Index merged;
  friend auto operator<=>(const FormalKey&, const FormalKey&) = default;
};

using FormalEElement = LinearCombination<FormalKey>;

inline FormalEElement formal_e(const ModuleElement& x)
{
  FormalEElement out;
  if (x.empty())
    return out;
  std::size_t n = homogeneous_layer(x);
  if (n < 2)
    return out;
  for (const auto& [mono, coeff] : x) {
    Rational c = -2 * coeff;
    const auto exps = mono.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (std::size_t j = i + 1; j < exps.size(); ++j)
        out.add(FormalKey{mono.without(i, j), exps[i] + exps[j]}, c);
  }
  return out;
}

// e_k·x read off from its certificate.
inline ModuleElement instantiate(const FormalEElement& cert, Index k)
{
  ModuleElement out;
  for (const auto& [key, coeff] : cert)
    out.add(key.rest.with(key.merged + k), coeff);
  return out;
}

// Two distinct keys can only give the same monomial when k = m - s for an
// entry m of some μ and some merged index s. Any |k| beyond every such
// difference separates all keys, so a nonempty certificate has a witness
// k = certificate_bound(cert) with e_k·x ≠ 0.
inline Index certificate_bound(const FormalEElement& cert)
{
  if (cert.empty())
    return 0;
  std::vector<Index> entries, merged;
  for (const auto& entry : cert) {
    merged.push_back(entry.first.merged);
    for (Index m : entry.first.rest.exponents())
      entries.push_back(m);
  }
  Index bound = 0;
  for (Index s : merged)
    for (Index m : entries)
      bound = std::max(bound, m > s ? m - s : s - m);
  return bound + 1;
}

inline bool is_singular(const ModuleElement& x)
{
  for (const auto& [layer, component] : layer_decompose(x))
    if (!formal_e(component).empty())
      return false;
  return true;
}

inline std::string to_string(const FMonomial& m)
{
  if (m.layer() == 0)
    return "v";
  std::string out;
  for (Index e : m.exponents())
    out += "f" + std::to_string(e) + " ";
  return out + "v";
}

inline std::string to_string(const ModuleElement& x)
{
  if (x.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : x) {
    if (!first)
      out += " + ";
    first = false;
    out += "(" + to_string(coeff) + ") " + to_string(mono);
  }
  return out;
}

} // namespace loopsl2
