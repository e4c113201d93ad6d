#include "support/brute_force.hpp"
#include "support/models.hpp"
#include "zariski/engine.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace zariski;
using zariski::testing::brute_force_decompose;
using zariski::testing::model_affine_a2;
using zariski::testing::model_isotropic_prime;
using zariski::testing::model_s1;
using zariski::testing::model_s2;
using zariski::testing::same_decomposition;

using Coeffs = std::vector<std::pair<std::string, Rational>>;

TEST(Decompose, S1) {
  auto d = decompose(model_s1(), ClassVector{1, 2});
  EXPECT_EQ(d.positive_part, (ClassVector{1, 0}));
  EXPECT_EQ(d.negative_coeffs, (Coeffs{{"E", Rational(2)}}));
  EXPECT_EQ(d.support, (std::vector<std::string>{"E"}));
  EXPECT_EQ(d.iterations, 1u);
  EXPECT_TRUE(d.certificate.all());
}

TEST(Decompose, S2GrowsActiveSetTwice) {
  auto d = decompose(model_s2(), ClassVector{1, 2, 1});
  EXPECT_EQ(d.positive_part, (ClassVector{1, 0, 0}));
  EXPECT_EQ(d.negative_coeffs, (Coeffs{{"c1", Rational(2)}, {"c2", Rational(1)}}));
  EXPECT_EQ(d.iterations, 2u);
  EXPECT_EQ(d.active_set, (std::vector<std::string>{"c1", "c2"}));
  EXPECT_TRUE(d.certificate.all());
}

TEST(Decompose, NefInputIsFixed) {
  auto m = model_s2();
  auto d = decompose(m, m.ample);
  EXPECT_EQ(d.positive_part, m.ample);
  EXPECT_TRUE(d.negative_coeffs.empty());
  EXPECT_EQ(d.iterations, 1u);
}

TEST(Decompose, ZeroClass) {
  auto d = decompose(model_s2(), ClassVector(3));
  EXPECT_TRUE(d.positive_part.is_zero());
  EXPECT_TRUE(d.negative_coeffs.empty());
}

TEST(Decompose, OutsidePositiveCone) {
  try {
    decompose(model_s1(), ClassVector{-1, 0});
    FAIL() << "expected NotPseudoEffective";
  } catch (const NotPseudoEffective& e) {
    EXPECT_EQ(e.reason(), NotPseudoEffective::Reason::kOutsidePositiveCone);
    EXPECT_EQ(e.q_self, Rational(1));
    EXPECT_EQ(e.q_ample, Rational(-1));
  }
}

TEST(Decompose, NonNegativeDefiniteActiveSet) {
  auto m = model_affine_a2();
  // c1 + c2 + c3 = f is isotropic and nef.
  auto f = decompose(m, m.primes[0].vec + m.primes[1].vec + m.primes[2].vec);
  EXPECT_TRUE(f.negative_coeffs.empty());

  // c1 + c2 - 3h pairs to -1 with every prime, so the first round pulls in
  // the whole (semidefinite) triple.
  ClassVector beta = m.primes[0].vec + m.primes[1].vec - Rational(3) * m.ample;
  try {
    decompose(m, beta);
    FAIL() << "expected NotPseudoEffective";
  } catch (const NotPseudoEffective& e) {
    EXPECT_EQ(e.reason(), NotPseudoEffective::Reason::kGramNotNegativeDefinite);
    EXPECT_EQ(e.offending_subset, (std::vector<std::string>{"c1", "c2", "c3"}));
  }
}

TEST(Decompose, RankMismatchThrows) {
  EXPECT_THROW(decompose(model_s1(), ClassVector{1, 2, 3}), DimensionMismatch);
}

TEST(Wrappers, NegativePartProjectionVolume) {
  auto s1 = model_s1();
  EXPECT_EQ(negative_part(s1, ClassVector{1, 2}), (Coeffs{{"E", Rational(2)}}));
  EXPECT_TRUE(negative_part(s1, s1.ample).empty());
  EXPECT_EQ(zariski_projection(s1, s1.ample), s1.ample);

  ClassVector two_e{0, 2};
  EXPECT_TRUE(zariski_projection(s1, two_e).is_zero());
  EXPECT_EQ(negative_part(s1, two_e), (Coeffs{{"E", Rational(2)}}));

  EXPECT_EQ(volume(s1, ClassVector{1, 2}), Rational(1));
  EXPECT_EQ(volume(model_s2(), ClassVector{1, 2, 1}), Rational(2));
  EXPECT_EQ(volume(s1, ClassVector{0, 1}), Rational(0));
}

TEST(Wrappers, VolumeUsesExponent) {
  auto m = model_s2();
  m.m = 3;
  EXPECT_EQ(volume(m, ClassVector{1, 2, 1}), Rational(8));
}

TEST(Wrappers, IsBig) {
  auto s1 = model_s1();
  EXPECT_TRUE(is_big(s1, s1.ample));
  EXPECT_FALSE(is_big(s1, ClassVector{0, 1}));
  EXPECT_FALSE(is_big(s1, ClassVector{1, -1}));
  EXPECT_TRUE(is_big(s1, ClassVector{1, 1}));
  EXPECT_THROW(is_big(s1, ClassVector{-1, 0}), NotPseudoEffective);
}

TEST(Chambers, Examples) {
  EXPECT_TRUE(chamber_of(model_s1(), ClassVector{1, 0}).empty());
  EXPECT_EQ(chamber_of(model_s1(), ClassVector{1, 2}), (std::vector<std::string>{"E"}));
  EXPECT_EQ(chamber_of(model_s2(), ClassVector{1, 2, 1}),
            (std::vector<std::string>{"c1", "c2"}));
}

TEST(Exceptional, Membership) {
  EXPECT_TRUE(is_exceptional_family(model_s1(), {"E"}));
  EXPECT_TRUE(is_exceptional_family(model_s2(), {"c1", "c2"}));
  EXPECT_TRUE(is_exceptional_family(model_s2(), {}));
  EXPECT_FALSE(is_exceptional_family(model_affine_a2(), {"c1", "c2", "c3"}));
  EXPECT_TRUE(is_exceptional_family(model_affine_a2(), {"c3", "c1"}));
  EXPECT_THROW(is_exceptional_family(model_s2(), {"nope"}), UnknownPrime);
}

using Families = std::vector<std::vector<std::size_t>>;

TEST(Exceptional, EnumerateA2) {
  EXPECT_EQ(enumerate_exceptional_families(model_s2(), 3), (Families{{}, {0}, {0, 1}, {1}}));
  EXPECT_EQ(enumerate_exceptional_families(model_s2(), 1), (Families{{}, {0}, {1}}));
}

TEST(Exceptional, EnumerateIsotropicPrime) {
  EXPECT_EQ(enumerate_exceptional_families(model_isotropic_prime(), 5), (Families{{}}));
}

TEST(Exceptional, EnumerateAffineA2ExcludesTriple) {
  EXPECT_EQ(enumerate_exceptional_families(model_affine_a2(), 10),
            (Families{{}, {0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}}));
}

TEST(Oracle, SpecExamples) {
  auto r1 = brute_force_decompose(model_s1(), ClassVector{1, 2});
  EXPECT_EQ(r1.decomposition.support, (std::vector<std::string>{"E"}));
  EXPECT_TRUE(same_decomposition(r1.decomposition, decompose(model_s1(), ClassVector{1, 2})));

  auto r2 = brute_force_decompose(model_s2(), ClassVector{1, 2, 1});
  EXPECT_EQ(r2.decomposition.support, (std::vector<std::string>{"c1", "c2"}));
  EXPECT_EQ(r2.distinct_candidates, 1u);
  EXPECT_TRUE(same_decomposition(r2.decomposition, decompose(model_s2(), ClassVector{1, 2, 1})));

  auto r3 = brute_force_decompose(model_s2(), ClassVector{1, 0, 0});
  EXPECT_TRUE(r3.decomposition.support.empty());
}

TEST(Oracle, AgreesOnAffineA2Grid) {
  auto m = model_affine_a2();
  int compared = 0;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      for (long c = 0; c <= 3; ++c)
        for (long f = 0; f <= 2; ++f) {
          ClassVector alpha = Rational(a) * m.primes[0].vec + Rational(b) * m.primes[1].vec +
                              Rational(c) * m.primes[2].vec + Rational(f) * m.ample;
          auto d = decompose(m, alpha);
          auto o = brute_force_decompose(m, alpha);
          EXPECT_TRUE(same_decomposition(d, o.decomposition)) << alpha.str();
          ++compared;
        }
  EXPECT_EQ(compared, 192);
}

}  // namespace
