#pragma once

// Self-check batteries behind `loopsl2 verify <suite>`. Each check names the
// identity it exercises; a failing check carries a short counterexample.

#include <string>
#include <vector>

#include "loopsl2/json_io.hpp"
#include "loopsl2/pbw_oracle.hpp"
#include "loopsl2/random.hpp"
#include "loopsl2/singular.hpp"

namespace loopsl2 {

struct CheckResult {
  std::string name;
  std::string identity;
  bool passed = true;
  std::string detail;
};

namespace detail {

inline std::vector<Letter> all_letters(Index lo, Index hi)
{
  std::vector<Letter> out;
  for (auto kind : {Generator::e, Generator::h, Generator::f})
    for (Index i = lo; i <= hi; ++i)
      out.push_back({kind, i});
  return out;
}

// All monomials of layer <= max_layer with exponents in [lo, hi].
inline std::vector<FMonomial> small_monomials(std::size_t max_layer, Index lo, Index hi)
{
  std::vector<FMonomial> out;
  for (std::size_t n = 0; n <= max_layer; ++n)
    for (auto& m : window_monomials(Window{lo, hi, n, std::nullopt}))
      out.push_back(std::move(m));
  return out;
}

inline std::vector<std::vector<Index>> integer_box(std::size_t n, Index lo, Index hi)
{
  std::vector<std::vector<Index>> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Index>> next;
    for (const auto& v : out)
      for (Index e = lo; e <= hi; ++e) {
        auto w = v;
        w.push_back(e);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace detail

// Calls fn(word) for every word of length <= max_len over `letters`.
template <class Fn>
void for_each_word(const std::vector<Letter>& letters, std::size_t max_len, Fn&& fn)
{
  Word word;
  auto rec = [&](auto&& self) -> void {
    fn(static_cast<const Word&>(word));
    if (word.size() == max_len)
      return;
    for (const auto& l : letters) {
      word.push_back(l);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<CheckResult> verify_actions(std::size_t max_word = 3, std::size_t max_layer = 2)
{
  std::vector<CheckResult> out;
  {
    CheckResult c{"oracle-equivalence", "act_word = PBW straightening on v", true, ""};
    auto letters = detail::all_letters(-2, 2);
    for (const auto& m : detail::small_monomials(max_layer, -2, 2)) {
      ModuleElement x = ModuleElement::term(m);
      for_each_word(letters, max_word, [&](const Word& w) {
        if (c.passed && act_word(w, x) != pbw_oracle(w, x)) {
          c.passed = false;
          c.detail = "word '" + to_string(w) + "' on " + to_string(m);
        }
      });
    }
    out.push_back(c);
  }
  Rng rng(7);
  CheckResult ef{"bracket-e-f", "[e_k, f_l] = h_{k+l}", true, ""};
  CheckResult hf{"bracket-h-f", "[h_k, f_l] = -2 f_{k+l}", true, ""};
  CheckResult he{"bracket-h-e", "[h_k, e_l] = 2 e_{k+l}", true, ""};
  CheckResult grading{"layer-grading", "f raises, h keeps, e lowers the layer; degree shifts by the index", true, ""};
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t layer = static_cast<std::size_t>(random_index(rng, 0, 3));
    ModuleElement x = random_module_element(rng, layer, -3, 3);
    Index k = random_index(rng, -3, 3), l = random_index(rng, -3, 3);
    auto fail = [&](CheckResult& c) {
      if (c.passed) {
        c.passed = false;
        c.detail = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " x=" + to_string(x);
      }
    };
    if (act_e(k, act_f(l, x)) - act_f(l, act_e(k, x)) != act_h(k + l, x))
      fail(ef);
    if (act_h(k, act_f(l, x)) - act_f(l, act_h(k, x)) != Rational(-2) * act_f(k + l, x))
      fail(hf);
    if (act_h(k, act_e(l, x)) - act_e(l, act_h(k, x)) != Rational(2) * act_e(k + l, x))
      fail(he);
    auto check = [&](const ModuleElement& y, std::size_t want_layer, Index want_deg) {
      for (const auto& [mono, coeff] : y)
        if (mono.layer() != want_layer || mono.degree() != want_deg)
          fail(grading);
    };
    // x is layer-homogeneous but not degree-homogeneous; check per monomial.
    for (const auto& [mono, coeff] : x) {
      ModuleElement single = ModuleElement::term(mono);
      check(act_f(k, single), mono.layer() + 1, mono.degree() + k);
      check(act_h(k, single), mono.layer(), mono.degree() + k);
      if (mono.layer() > 0)
        check(act_e(k, single), mono.layer() - 1, mono.degree() + k);
    }
  }
  out.push_back(ef);
  out.push_back(hf);
  out.push_back(he);
  out.push_back(grading);
  return out;
}

inline std::vector<CheckResult> verify_realization(int trials = 100)
{
  Rng rng(11);
  CheckResult tri{"psi-triangle", "h_k acts on M_n as Psi(h_k) = -2 p_k", true, ""};
  CheckResult iso{"theta-module-iso", "Theta(p . x) = p * Theta(x)", true, ""};
  CheckResult grade{"theta-grading", "deg Theta(x) = deg x", true, ""};
  CheckResult inv{"theta-inverse", "theta_inv(Theta(x)) = x", true, ""};
  CheckResult hom{"classify-hom-roundtrip", "classify_hom(e_1(a),...,e_n(a)) = a", true, ""};
  for (int t = 0; t < trials; ++t) {
    std::size_t n = static_cast<std::size_t>(random_index(rng, 1, 3));
    ModuleElement x = random_module_element(rng, n, -3, 3);
    Index k = random_index(rng, -3, 3);
    if (act_h(k, x) != apply_sym(Rational(-2) * power_sum(n, k), x) && tri.passed) {
      tri.passed = false;
      tri.detail = "k=" + std::to_string(k) + " x=" + to_string(x);
    }
    SymElement p = random_sym_element(rng, n, -2, 2);
    if (theta(apply_sym(p, x)) != sym_mul(p, theta(x)) && iso.passed) {
      iso.passed = false;
      iso.detail = "x=" + to_string(x);
    }
    for (const auto& [mono, coeff] : x)
      if (theta(ModuleElement::term(mono)).terms().begin()->first.size() != n ||
          total_degree(theta(ModuleElement::term(mono)).terms().begin()->first) != mono.degree())
        grade.passed = false;
    if (theta_inv(theta(x)) != x)
      inv.passed = false;
    auto alphas = random_roots(rng, static_cast<std::size_t>(random_index(rng, 1, 4)));
    std::sort(alphas.begin(), alphas.end());
    try {
      if (classify_hom(alphas.size(), elementary_values(alphas)) != alphas)
        hom.passed = false;
    } catch (const error& e) {
      hom.passed = false;
      hom.detail = e.what();
    }
  }
  return {tri, iso, grade, inv, hom};
}

inline std::vector<CheckResult> verify_singular(std::size_t max_n = 3, Index range = 2)
{
  CheckResult sing{"s-chi-singular", "E . S_chi = 0", true, ""};
  CheckResult anti{"s-chi-antisymmetric", "S_{chi o tau} = sign(tau) S_chi", true, ""};
  CheckResult rep{"s-chi-repeats", "S_chi = 0 when chi has a repeated entry", true, ""};
  CheckResult hstab{"h-stability", "h_l maps singular vectors to singular vectors", true, ""};
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& chi : detail::integer_box(n, -range, range)) {
      ModuleElement s = build_singular(chi);
      if (!is_singular(s))
        sing.passed = false;
      std::vector<Index> sorted = chi;
      std::sort(sorted.begin(), sorted.end());
      bool repeated = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      if (repeated && !s.empty())
        rep.passed = false;
      for_each_permutation(n, [&](const std::vector<int>& tau, int sign) {
        std::vector<Index> permuted(n);
        for (std::size_t i = 0; i < n; ++i)
          permuted[i] = chi[static_cast<std::size_t>(tau[i])];
        if (build_singular(permuted) != Rational(sign) * s)
          anti.passed = false;
      });
    }
  for (const auto& v : singular_space(Window{0, 4, 2, 4}))
    for (Index l = -2; l <= 2; ++l)
      if (!is_singular(act_h(l, v)))
        hstab.passed = false;
  CheckResult example{"window-kernel", "dim of singular vectors, n=2, exps in [0,4], degree 4, is 2", true, ""};
  example.passed = singular_space(Window{0, 4, 2, 4}).size() == 2;
  return {sing, anti, rep, hstab, example};
}

inline std::vector<CheckResult> verify_span(std::size_t max_n = 3, Index range = 2)
{
  CheckResult ident{"span-identity", "Lambda_n . f_chi v = sum_sigma sign(sigma) S_{chi(sigma)}", true, ""};
  CheckResult div{"discriminant-divides", "D_n divides Theta(S_chi) in S_n", true, ""};
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& chi : detail::integer_box(n, -range, range)) {
      if (!verify_span_identity(chi) && ident.passed) {
        ident.passed = false;
        ident.detail = "n=" + std::to_string(n);
      }
      ModuleElement s = build_singular(chi);
      if (s.empty())
        continue;
      try {
        SymElement q = theta_divisibility(chi);
        if (sym_mul(discriminant(n), q) != theta(s))
          div.passed = false;
      } catch (const error& e) {
        div.passed = false;
        div.detail = e.what();
      }
    }
  return {ident, div};
}

inline std::vector<CheckResult> verify_expmod(int trials = 50)
{
  Rng rng(13);
  CheckResult inter{"quotient-intertwines", "q(h_k x) = phi(k) t^k q(x)", true, ""};
  CheckResult top{"e-kills-top", "E . (1 (x) t^l) = 0", true, ""};
  CheckResult brackets{"induced-brackets", "[e_k,f_l] = h_{k+l}, [h_k,f_l] = -2f_{k+l}, [h_k,e_l] = 2e_{k+l} on V~(phi)", true, ""};
  for (int t = 0; t < trials; ++t) {
    std::size_t n = static_cast<std::size_t>(random_index(rng, 1, 3));
    ExpFunction phi(random_roots(rng, n));
    ModuleElement x = random_module_element(rng, n, -3, 3);
    Index k = random_index(rng, -3, 3), l = random_index(rng, -3, 3);
    if (quotient_map(phi, act_h(k, x)) != polymod_act_h(phi, k, quotient_map(phi, x)))
      inter.passed = false;
    if (!induced_act(phi, {Generator::e, k}, induced_term({}, l)).empty())
      top.passed = false;
    InducedElement w = induced_term(random_exponents(rng, static_cast<std::size_t>(random_index(rng, 0, 2)), -2, 2),
                                    random_index(rng, -2, 2));
    auto op = [&](Generator g, Index i, const InducedElement& y) { return induced_act(phi, {g, i}, y); };
    if (op(Generator::e, k, op(Generator::f, l, w)) - op(Generator::f, l, op(Generator::e, k, w)) !=
            op(Generator::h, k + l, w) ||
        op(Generator::h, k, op(Generator::f, l, w)) - op(Generator::f, l, op(Generator::h, k, w)) !=
            Rational(-2) * op(Generator::f, k + l, w) ||
        op(Generator::h, k, op(Generator::e, l, w)) - op(Generator::e, l, op(Generator::h, k, w)) !=
            Rational(2) * op(Generator::e, k + l, w))
      brackets.passed = false;
  }
  CheckResult iso{"isomorphism-examples", "{2,3} ~ {4,6} with lambda = 1/2; {1,4} !~ {2,3}", true, ""};
  auto r1 = are_isomorphic(ExpFunction({Rational(2), Rational(3)}), ExpFunction({Rational(4), Rational(6)}));
  auto r2 = are_isomorphic(ExpFunction({Rational(1), Rational(4)}), ExpFunction({Rational(2), Rational(3)}));
  iso.passed = r1.isomorphic && r1.scale == make_rational(1, 2) && !r2.isomorphic;
  CheckResult dims{"component-dims", "L(phi) for roots (1,-1): dim 1 on even, 0 on odd degrees", true, ""};
  for (const auto& [d, dim] : component_dim(ExpFunction({Rational(1), Rational(-1)}), -6, 6))
    if (dim != (d % 2 == 0 ? 1u : 0u))
      dims.passed = false;
  return {inter, top, brackets, iso, dims};
}

inline const std::vector<std::string>& verify_suite_names()
{
  static const std::vector<std::string> names{"actions", "realization", "singular", "span", "expmod"};
  return names;
}

inline std::vector<CheckResult> run_verify_suite(const std::string& name)
{
  if (name == "actions")
    return verify_actions();
  if (name == "realization")
    return verify_realization();
  if (name == "singular")
    return verify_singular();
  if (name == "span")
    return verify_span();
  if (name == "expmod")
    return verify_expmod();
  throw domain_error("unknown verify suite '" + name + "'");
}

} // namespace loopsl2
