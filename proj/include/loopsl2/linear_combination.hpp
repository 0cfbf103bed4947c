#pragma once

#include <map>
#include <utility>

#include "loopsl2/rational.hpp"

namespace loopsl2 {

// Finite rational combination of basis keys. Zero coefficients are never
// stored, so equality of combinations is equality of the term maps.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
public:
  using key_type = Key;
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination term(Key key, Rational coeff = Rational(1))
  {
    LinearCombination out;
    out.add(std::move(key), coeff);
    return out;
  }

  void add(const Key& key, const Rational& coeff)
  {
    if (coeff == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& coeff)
  {
    if (coeff == 0)
      return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
      return;
    }
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }

  void add_scaled(const LinearCombination& other, const Rational& scale)
  {
    if (scale == 0)
      return;
    for (const auto& [key, coeff] : other.terms_)
      add(key, coeff * scale);
  }

  Rational coefficient(const Key& key) const
  {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& other)
  {
    add_scaled(other, Rational(1));
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& other)
  {
    add_scaled(other, Rational(-1));
    return *this;
  }

  LinearCombination& operator*=(const Rational& scale)
  {
    if (scale == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_)
      entry.second *= scale;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b)
  {
    return a.terms_ == b.terms_;
  }

  // Term-wise key transformation, merging collisions.
  template <class Fn>
  auto transform_keys(Fn&& fn) const
  {
    using NewKey = std::decay_t<decltype(fn(std::declval<const Key&>()))>;
    LinearCombination<NewKey> out;
    for (const auto& [key, coeff] : terms_)
      out.add(fn(key), coeff);
    return out;
  }

private:
  map_type terms_;
};

} // namespace loopsl2
