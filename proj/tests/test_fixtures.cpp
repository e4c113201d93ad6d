#include "zariski/engine.hpp"
#include "zariski/fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace zariski;

TEST(Fixtures, Rank2OnePrimeIsValid) {
  ConeModel m = gen_model({2, 1, 1});
  EXPECT_TRUE(validate(m).ok());
  EXPECT_EQ(m.primes.size(), 1u);
}

TEST(Fixtures, NoPrimesMeansPositiveConeIsNef) {
  ConeModel m = gen_model({2, 0, 5});
  EXPECT_TRUE(m.primes.empty());
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      ClassVector v{a, b};
      EXPECT_EQ(in_positive_cone_closure(m, v), is_dual_nef(m, v));
    }
}

TEST(Fixtures, TooManyPrimesExhausts) {
  // A rank-2 Lorentzian lattice has at most two negative rays meeting
  // nonnegatively.
  EXPECT_THROW(gen_model({2, 6, 3}), GenerationExhausted);
}

TEST(Fixtures, BadSpecRejected) {
  EXPECT_THROW(gen_model({1, 0, 1}), std::invalid_argument);
  EXPECT_THROW(gen_model({3, 0, 1, 0}), std::invalid_argument);
}

TEST(Fixtures, ValidLorentzianAndDeterministic) {
  int built = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    FixtureSpec spec{2 + seed % 5, seed % 7, seed * 7919 + 1, 1 + static_cast<long>(seed % 3)};
    ConeModel m;
    try {
      m = gen_model(spec);
    } catch (const GenerationExhausted&) {
      continue;
    }
    ++built;
    auto rep = validate(m);
    EXPECT_TRUE(rep.ok()) << "seed " << seed;
    EXPECT_EQ(signature(m.form), (Signature{1, spec.rank - 1, 0}));
    EXPECT_EQ(m.q(m.ample), Rational(1));
    EXPECT_EQ(m.primes.size(), spec.prime_count);
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t j = 0; j < m.rank(); ++j) EXPECT_TRUE(m.form(i, j).is_integer());
    EXPECT_EQ(gen_model(spec), m);
  }
  EXPECT_GT(built, 200);
}

TEST(Fixtures, KnownSeedIsStable) {
  // Frozen output guards against accidental changes to the generator.
  ConeModel m = gen_model({3, 2, 11});
  EXPECT_EQ(m.form, (SymmetricForm{{2, -1, -1}, {-1, 0, 0}, {-1, 0, -1}}));
  ASSERT_EQ(m.primes.size(), 2u);
  EXPECT_EQ(m.primes[0].name, "D1");
  EXPECT_EQ(m.primes[0].vec, (ClassVector{2, 3, -3}));
  EXPECT_EQ(m.primes[1].vec, (ClassVector{0, -1, 1}));
  EXPECT_EQ(m.ample, (ClassVector{1, 1, -1}));
  EXPECT_EQ(gen_pseudoeffective_class(m, 99), gen_pseudoeffective_class(gen_model({3, 2, 11}), 99));
  EXPECT_NE(gen_model({3, 2, 12}), m);
}

TEST(Fixtures, IsotropicClassIsOnBoundary) {
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ConeModel m = gen_model({2 + seed % 5, 0, seed});
    auto e = find_isotropic_class(m);
    if (!e) continue;
    ++found;
    EXPECT_TRUE(m.q(*e).is_zero());
    EXPECT_GE(m.q(*e, m.ample).sign(), 0);
    EXPECT_FALSE(e->is_zero());
  }
  EXPECT_GT(found, 40);
}

TEST(Fixtures, GeneratedClassesDecompose) {
  int classes = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    ConeModel m;
    try {
      m = gen_model({2 + seed % 5, seed % 6, seed});
    } catch (const GenerationExhausted&) {
      continue;
    }
    for (std::uint64_t k = 0; k < 5; ++k, ++classes) {
      ClassVector alpha = gen_pseudoeffective_class(m, seed * 100 + k);
      EXPECT_NO_THROW(decompose(m, alpha)) << alpha.str();
    }
  }
  EXPECT_GT(classes, 400);
}

TEST(Fixtures, PurePrimeCombinationIsOrthogonal) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    ConeModel m;
    try {
      m = gen_model({3 + seed % 4, 1 + seed % 4, seed});
    } catch (const GenerationExhausted&) {
      continue;
    }
    ClassVector alpha(m.rank());
    for (std::size_t i = 0; i < m.primes.size(); ++i)
      alpha += Rational(static_cast<long>(i + 1), 2) * m.primes[i].vec;
    auto d = decompose(m, alpha);
    for (const auto& name : d.support)
      EXPECT_TRUE(m.q(d.positive_part, m.primes[*m.prime_index(name)].vec).is_zero());
  }
}

}  // namespace
