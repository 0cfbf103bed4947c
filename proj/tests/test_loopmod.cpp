#include <gtest/gtest.h>

#include "loopsl2/json_io.hpp"
#include "loopsl2/pbw_oracle.hpp"
#include "loopsl2/random.hpp"
#include "loopsl2/verify.hpp"
#include "oracles.hpp"

using namespace loopsl2;

namespace {

ModuleElement mono(std::vector<Index> e, long c = 1)
{
  return monomial_element(std::move(e), Rational(c));
}

} // namespace

TEST(MakeElement, SortsMergesAndDropsZeros)
{
  EXPECT_EQ(make_element({{{3, 1}, Rational(1)}}), mono({1, 3}));
  EXPECT_TRUE(make_element({{{0}, Rational(1)}, {{0}, Rational(-1)}}).empty());
  auto v5 = make_element({{{}, Rational(5)}});
  ASSERT_EQ(v5.size(), 1u);
  EXPECT_EQ(v5.begin()->first.layer(), 0u);
  EXPECT_EQ(v5.begin()->second, 5);
}

TEST(Actions, FAppendsAnExponent)
{
  EXPECT_EQ(act_f(2, generator_v()), mono({2}));
  EXPECT_EQ(act_f(0, mono({0})), mono({0, 0}));
  EXPECT_EQ(act_f(-1, mono({1, 3})), mono({-1, 1, 3}));
}

TEST(Actions, HShiftsOneExponent)
{
  EXPECT_EQ(act_h(2, mono({0})), mono({2}, -2));
  for (Index k = -3; k <= 3; ++k)
    EXPECT_TRUE(act_h(k, generator_v()).empty());
  EXPECT_EQ(act_h(0, mono({1, 3})), mono({1, 3}, -4));
}

TEST(Actions, H0IsMinusTwiceTheLayer)
{
  Rng rng(3);
  for (std::size_t n = 0; n <= 4; ++n) {
    auto x = random_module_element(rng, n, -3, 3);
    EXPECT_EQ(act_h(0, x), Rational(-2 * static_cast<long>(n)) * x);
  }
}

TEST(Actions, EMergesPairs)
{
  for (Index k = -3; k <= 3; ++k)
    EXPECT_TRUE(act_e(k, mono({5})).empty());
  EXPECT_EQ(act_e(0, mono({1, 3})), mono({4}, -2));
  EXPECT_EQ(act_e(1, mono({2, 2})), mono({5}, -2));
  EXPECT_TRUE(act_e(0, generator_v()).empty());
}

TEST(Actions, WordsComposeRightToLeft)
{
  EXPECT_EQ(act_word({{Generator::h, 1}}, mono({0})), mono({1}, -2));
  Word w{{Generator::e, 0}, {Generator::f, 3}, {Generator::f, 1}};
  EXPECT_EQ(act_word(w, generator_v()), mono({4}, -2));
  auto x = mono({1, 3}) - mono({2, 2}, 3);
  EXPECT_EQ(act_word({}, x), x);
}

TEST(PbwOracle, Examples)
{
  Word w{{Generator::e, 0}, {Generator::f, 1}, {Generator::f, 3}};
  EXPECT_EQ(pbw_oracle(w, generator_v()), mono({4}, -2));
  EXPECT_TRUE(pbw_oracle({{Generator::h, 3}}, generator_v()).empty());
  EXPECT_EQ(pbw_oracle({{Generator::f, 2}}, generator_v()), mono({2}));
}

TEST(PbwOracle, RejectsLongWords)
{
  Word w(7, Letter{Generator::h, 0});
  EXPECT_THROW(pbw_oracle(w, generator_v()), bound_exceeded);
  EXPECT_NO_THROW(pbw_oracle(w, generator_v(), PbwOracleOptions{7}));
}

TEST(PbwOracle, AgreesWithClosedFormOnShortWords)
{
  // Full battery (length 4, layer 3) lives in the acceptance suite.
  auto results = verify_actions(3, 2);
  ASSERT_FALSE(results.empty());
  EXPECT_TRUE(results.front().passed) << results.front().detail;
}

TEST(LayerDecompose, Examples)
{
  auto parts = layer_decompose(generator_v() + mono({0}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], generator_v());
  EXPECT_EQ(parts[1], mono({0}));
  EXPECT_TRUE(layer_decompose(ModuleElement{}).empty());
  auto x = mono({1, 3}) - mono({2, 2});
  auto single = layer_decompose(x);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[2], x);
}

TEST(LayerDecompose, ComponentsSumToInput)
{
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    ModuleElement x;
    for (std::size_t n = 0; n <= 3; ++n)
      x += random_module_element(rng, n, -2, 2);
    ModuleElement sum;
    for (const auto& [layer, part] : layer_decompose(x)) {
      sum += part;
      for (const auto& [m, c] : part)
        EXPECT_EQ(m.layer(), layer);
    }
    EXPECT_EQ(sum, x);
  }
}

TEST(FormalE, Examples)
{
  EXPECT_TRUE(formal_e(mono({1, 3}) - mono({2, 2})).empty());

  FormalEElement expected;
  expected.add(FormalKey{FMonomial{}, 4}, Rational(-2));
  EXPECT_EQ(formal_e(mono({0, 4})), expected);

  FormalEElement three;
  three.add(FormalKey{FMonomial{3}, 1}, Rational(-2));
  three.add(FormalKey{FMonomial{1}, 3}, Rational(-2));
  three.add(FormalKey{FMonomial{0}, 4}, Rational(-2));
  EXPECT_EQ(formal_e(mono({0, 1, 3})), three);
}

TEST(FormalE, LowLayersGiveEmptyCertificate)
{
  EXPECT_TRUE(formal_e(generator_v()).empty());
  EXPECT_TRUE(formal_e(mono({3}) + mono({-1})).empty());
}

TEST(FormalE, RejectsMixedLayers)
{
  EXPECT_THROW(formal_e(mono({1, 2}) + mono({0})), layer_mismatch);
}

TEST(FormalE, InstantiatesToTheEAction)
{
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto n = static_cast<std::size_t>(random_index(rng, 2, 4));
    auto x = random_module_element(rng, n, -3, 3);
    auto cert = formal_e(x);
    for (Index k = -4; k <= 4; ++k)
      EXPECT_EQ(instantiate(cert, k), act_e(k, x));
  }
}

TEST(IsSingular, Examples)
{
  EXPECT_TRUE(is_singular(mono({1, 3}) - mono({2, 2})));
  EXPECT_TRUE(is_singular(mono({7}) + mono({-2}, 3)));
  EXPECT_FALSE(is_singular(mono({0, 4})));
  EXPECT_TRUE(is_singular(ModuleElement{}));
}

TEST(Properties, Commutators)
{
  auto results = verify_actions(0, 0);
  for (const auto& r : results)
    EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Properties, SingularityClosedUnderH)
{
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    auto n = static_cast<std::size_t>(random_index(rng, 2, 3));
    ModuleElement s;
    // sums of a few singular vectors are singular
    for (int i = 0; i < 2; ++i) {
      std::vector<Index> c = random_exponents(rng, n, -2, 2);
      ModuleElement one;
      for_each_permutation(n, [&](const std::vector<int>& sigma, int sign) {
        std::vector<Index> e(n);
        for (std::size_t j = 0; j < n; ++j)
          e[j] = c[j] + sigma[j] + 1;
        one.add(FMonomial(e), Rational(sign));
      });
      s += one;
    }
    ASSERT_TRUE(is_singular(s));
    for (Index l = -3; l <= 3; ++l)
      EXPECT_TRUE(is_singular(act_h(l, s)));
  }
}

TEST(Properties, SubmoduleStartsAtTheSingularLayer)
{
  auto s = mono({1, 3}) - mono({2, 2});
  auto letters = detail::all_letters(-1, 1);
  for_each_word(letters, 3, [&](const Word& w) {
    for (const auto& [m, c] : act_word(w, s))
      EXPECT_GE(m.layer(), 2u) << to_string(w);
  });
}

TEST(Properties, CertificateHasAWitnessWithinItsBound)
{
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    auto n = static_cast<std::size_t>(random_index(rng, 2, 4));
    auto x = random_module_element(rng, n, -3, 3, 4);
    auto cert = formal_e(x);
    if (cert.empty()) {
      for (Index k = -6; k <= 6; ++k)
        EXPECT_TRUE(act_e(k, x).empty());
      continue;
    }
    Index bound = certificate_bound(cert);
    bool witnessed = false;
    for (Index k = -bound; k <= bound && !witnessed; ++k)
      witnessed = !act_e(k, x).empty();
    EXPECT_TRUE(witnessed) << to_string(x);
    EXPECT_FALSE(act_e(bound, x).empty());
  }
}

TEST(Properties, FormalKernelMatchesSampledKernel)
{
  // Empty certificate <=> e_k x = 0 for all sampled k, checked on window bases.
  for (std::size_t n = 2; n <= 3; ++n)
    for (Index d = 0; d <= 6; ++d) {
      auto monos = window_monomials(Window{0, 4, n, d});
      auto basis = singular_space(Window{0, 4, n, d});
      EXPECT_EQ(basis.size(), oracle::kernel_dim_by_sampling(monos, 12)) << "n=" << n << " d=" << d;
    }
}
