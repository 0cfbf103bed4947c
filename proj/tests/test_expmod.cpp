#include <gtest/gtest.h>

#include "loopsl2/expmod.hpp"
#include "loopsl2/random.hpp"
#include "loopsl2/verify.hpp"

using namespace loopsl2;

namespace {

std::vector<Rational> Q(std::initializer_list<long> xs)
{
  std::vector<Rational> out;
  for (long x : xs)
    out.emplace_back(x);
  return out;
}

LaurentT tpow(Index k, Rational c = Rational(1))
{
  return LaurentT::term(k, c);
}

ModuleElement mono(std::vector<Index> e, long c = 1)
{
  return monomial_element(std::move(e), Rational(c));
}

} // namespace

TEST(ExpFunction, RejectsZeroRoot)
{
  EXPECT_THROW(ExpFunction(Q({2, 0})), domain_error);
}

TEST(PhiEval, Examples)
{
  EXPECT_EQ(phi_eval(ExpFunction(Q({3})), 2), -18);
  for (Index k = -3; k <= 3; ++k)
    EXPECT_EQ(phi_eval(ExpFunction(), k), 0);
  EXPECT_EQ(phi_eval(ExpFunction(Q({1, 2})), 0), -4);
  EXPECT_EQ(phi_eval(ExpFunction(Q({2})), -2), make_rational(-1, 2));
}

TEST(PolymodActH, Examples)
{
  ExpFunction three(Q({3}));
  for (Index k = -2; k <= 2; ++k)
    for (Index l = -2; l <= 2; ++l)
      EXPECT_EQ(polymod_act_h(three, k, tpow(l)), tpow(k + l, -2 * rational_pow(Rational(3), k)));
  EXPECT_TRUE(polymod_act_h(ExpFunction(), 2, tpow(0)).empty());
  EXPECT_TRUE(polymod_act_h(ExpFunction(Q({1, -1})), 1, tpow(0)).empty());
}

TEST(QuotientMap, Examples)
{
  ExpFunction three(Q({3}));
  for (Index k = -3; k <= 3; ++k)
    EXPECT_EQ(quotient_map(three, mono({k})), tpow(k, rational_pow(Rational(3), k)));
  EXPECT_TRUE(quotient_map(ExpFunction(Q({1, -1})), mono({0, 1})).empty());
  EXPECT_EQ(quotient_map(ExpFunction(Q({1, 2})), mono({0, 0})), tpow(0));
  EXPECT_EQ(quotient_map(ExpFunction(), Rational(4) * generator_v()), tpow(0, Rational(4)));
  EXPECT_THROW(quotient_map(three, mono({0, 0})), layer_mismatch);
}

TEST(QuotientMap, Intertwines)
{
  Rng rng(89);
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(random_index(rng, 1, 3));
    ExpFunction phi(random_roots(rng, n));
    auto x = random_module_element(rng, n, -3, 3);
    for (Index k = -2; k <= 2; ++k)
      EXPECT_EQ(quotient_map(phi, act_h(k, x)), polymod_act_h(phi, k, quotient_map(phi, x)));
  }
}

TEST(InducedAct, Examples)
{
  ExpFunction phi(Q({2, -3}));
  for (Index k = -2; k <= 2; ++k)
    for (Index g = -2; g <= 2; ++g)
      for (Index l = -1; l <= 1; ++l) {
        EXPECT_EQ(induced_act(phi, {Generator::e, k}, induced_term({g}, l)),
                  induced_term({}, g + k + l, phi(g + k)));
        EXPECT_EQ(induced_act(phi, {Generator::h, k}, induced_term({}, l)), induced_term({}, k + l, phi(k)));
        EXPECT_TRUE(induced_act(phi, {Generator::e, k}, induced_term({}, l)).empty());
      }
  EXPECT_EQ(induced_act(phi, {Generator::f, 1}, induced_term({0}, 2)), induced_term({0, 1}, 2));
}

TEST(InducedAct, BracketRelations)
{
  Rng rng(97);
  auto letters = detail::all_letters(-2, 2);
  for (int t = 0; t < 40; ++t) {
    ExpFunction phi(random_roots(rng, static_cast<std::size_t>(random_index(rng, 0, 2))));
    auto w = induced_term(random_exponents(rng, static_cast<std::size_t>(random_index(rng, 0, 3)), -2, 2),
                          random_index(rng, -2, 2));
    for (const auto& a : letters)
      for (const auto& b : letters) {
        auto lhs = induced_act(phi, a, induced_act(phi, b, w)) - induced_act(phi, b, induced_act(phi, a, w));
        InducedElement rhs;
        Index s = a.index + b.index;
        using G = Generator;
        if (a.kind == G::e && b.kind == G::f)
          rhs = induced_act(phi, {G::h, s}, w);
        else if (a.kind == G::f && b.kind == G::e)
          rhs = Rational(-1) * induced_act(phi, {G::h, s}, w);
        else if (a.kind == G::h && b.kind == G::f)
          rhs = Rational(-2) * induced_act(phi, {G::f, s}, w);
        else if (a.kind == G::f && b.kind == G::h)
          rhs = Rational(2) * induced_act(phi, {G::f, s}, w);
        else if (a.kind == G::h && b.kind == G::e)
          rhs = Rational(2) * induced_act(phi, {G::e, s}, w);
        else if (a.kind == G::e && b.kind == G::h)
          rhs = Rational(-2) * induced_act(phi, {G::e, s}, w);
        EXPECT_EQ(lhs, rhs);
      }
  }
}

TEST(AvoidsTopWindow, Examples)
{
  ExpFunction three(Q({3}));
  auto kernel_lift = induced_term({0}, 1) - induced_term({1}, 0, make_rational(1, 3));
  EXPECT_TRUE(avoids_top_window(three, kernel_lift, -3, 3));
  EXPECT_FALSE(avoids_top_window(three, induced_term({0}, 0), -3, 3));
  EXPECT_TRUE(avoids_top_window(three, InducedElement{}, -3, 3));
  EXPECT_THROW(avoids_top_window(three, induced_term({}, 0), -3, 3), domain_error);
}

TEST(AreIsomorphic, Examples)
{
  auto r = are_isomorphic(ExpFunction(Q({2, 3})), ExpFunction(Q({4, 6})));
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(r.scale, make_rational(1, 2));
  EXPECT_FALSE(are_isomorphic(ExpFunction(Q({1, 4})), ExpFunction(Q({2, 3}))).isomorphic);
  auto self = are_isomorphic(ExpFunction(Q({5, -7})), ExpFunction(Q({5, -7})));
  EXPECT_TRUE(self.isomorphic);
  EXPECT_EQ(self.scale, Rational(1));
  EXPECT_FALSE(are_isomorphic(ExpFunction(Q({1})), ExpFunction(Q({1, 1}))).isomorphic);
}

TEST(AreIsomorphic, ScaleRelatesTheFunctions)
{
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    auto n = static_cast<std::size_t>(random_index(rng, 1, 3));
    auto roots = random_roots(rng, n);
    Rational lambda = random_nonzero_rational(rng);
    std::vector<Rational> scaled;
    for (const auto& a : roots)
      scaled.push_back(lambda * a);
    ExpFunction phi(scaled), psi(roots);
    auto r = are_isomorphic(phi, psi);
    ASSERT_TRUE(r.isomorphic);
    for (Index k = -3; k <= 3; ++k)
      EXPECT_EQ(phi(k), rational_pow(*r.scale, k) * psi(k));
    // symmetric and transitive
    EXPECT_TRUE(are_isomorphic(psi, phi).isomorphic);
    std::vector<Rational> twice;
    for (const auto& a : scaled)
      twice.push_back(Rational(3) * a);
    EXPECT_TRUE(are_isomorphic(ExpFunction(twice), psi).isomorphic);
  }
}

TEST(CyclicityCheck, Examples)
{
  EXPECT_TRUE(cyclicity_check(ExpFunction(Q({3})), tpow(5), -2, 2, -6, 6));
  EXPECT_TRUE(cyclicity_check(ExpFunction(Q({1, -1})), tpow(0), -2, 2, -6, 6));
  EXPECT_THROW(cyclicity_check(ExpFunction(Q({1, -1})), tpow(1), -2, 2, -6, 6), domain_error);
  EXPECT_THROW(cyclicity_check(ExpFunction(Q({3})), LaurentT{}, -2, 2, -6, 6), domain_error);
}

TEST(ComponentDim, Examples)
{
  for (const auto& [d, dim] : component_dim(ExpFunction(Q({3})), -6, 6))
    EXPECT_EQ(dim, 1u) << d;
  for (const auto& [d, dim] : component_dim(ExpFunction(Q({1, -1})), -6, 6))
    EXPECT_EQ(dim, d % 2 == 0 ? 1u : 0u) << d;
  for (const auto& [d, dim] : component_dim(ExpFunction(), -6, 6))
    EXPECT_EQ(dim, d == 0 ? 1u : 0u) << d;
  EXPECT_THROW(component_dim(ExpFunction(), 1, 0), domain_error);
}

TEST(ComponentDim, AgreesWithImagesOfMonomials)
{
  for (auto roots : {Q({3}), Q({1, -1}), Q({1, 2}), Q({2, -2, 1})}) {
    ExpFunction phi(roots);
    std::map<Index, bool> hit;
    for (const auto& g : detail::integer_box(roots.size(), -3, 3))
      for (const auto& [d, c] : quotient_map(phi, ModuleElement::term(FMonomial(g))))
        hit[d] = true;
    for (const auto& [d, dim] : component_dim(phi, -3, 3))
      EXPECT_EQ(dim, hit.count(d) ? 1u : 0u) << "d=" << d;
  }
}
