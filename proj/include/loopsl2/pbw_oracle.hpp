#pragma once

// Independent evaluation of a word acting on N(0). The word is normal-ordered
// in U(g) using only the brackets
//   [e_k, f_l] = h_{k+l},  [h_k, f_l] = -2 f_{k+l},  [F, F] = 0,
// after which any e or h letter standing next to v kills it. Nothing here
// calls the closed-form actions in loopmod.hpp.

#include <cstdint>

#include "loopsl2/loopmod.hpp"

namespace loopsl2 {

struct PbwOracleOptions {
  std::size_t max_word_length = 6;
};

namespace detail {

// `factor` collects the integer bracket constants along one branch; `coeff`
// is applied only when a normal-ordered monomial is reached.
inline void straighten(std::vector<Letter> letters, std::int64_t factor, const Rational& coeff, ModuleElement& out)
{
  std::size_t pos = letters.size();
  for (std::size_t i = letters.size(); i-- > 0;)
    if (letters[i].kind != Generator::f) {
      pos = i;
      break;
    }
  if (pos == letters.size()) {
    std::vector<Index> exps;
    exps.reserve(letters.size());
    for (const auto& l : letters)
      exps.push_back(l.index);
    out.add(FMonomial(std::move(exps)), coeff * factor);
    return;
  }
  if (pos + 1 == letters.size())
    return; // E·v = H·v = 0

  const Letter x = letters[pos];
  const Letter f = letters[pos + 1];

  // X f = f X + [X, f]
  std::vector<Letter> bracket;
  bracket.reserve(letters.size() - 1);
  bracket.insert(bracket.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos));
  std::int64_t bracket_factor = factor;
  if (x.kind == Generator::e) {
    bracket.push_back({Generator::h, x.index + f.index});
  } else {
    bracket.push_back({Generator::f, x.index + f.index});
    bracket_factor *= -2;
  }
  bracket.insert(bracket.end(), letters.begin() + static_cast<std::ptrdiff_t>(pos + 2), letters.end());

  std::swap(letters[pos], letters[pos + 1]);
  straighten(std::move(letters), factor, coeff, out);
  straighten(std::move(bracket), bracket_factor, coeff, out);
}

} // namespace detail

inline ModuleElement pbw_oracle(const Word& word, const ModuleElement& x, PbwOracleOptions options = {})
{
  if (word.size() > options.max_word_length)
    throw bound_exceeded("pbw_oracle: word of length " + std::to_string(word.size()) +
                         " exceeds bound " + std::to_string(options.max_word_length));
  ModuleElement out;
  for (const auto& [mono, coeff] : x) {
    std::vector<Letter> letters = word;
    for (Index e : mono.exponents())
      letters.push_back({Generator::f, e});
    detail::straighten(std::move(letters), 1, coeff, out);
  }
  return out;
}

} // namespace loopsl2
