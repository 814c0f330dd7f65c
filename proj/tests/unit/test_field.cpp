#include <gtest/gtest.h>

#include "lagten/field.hpp"
#include "lagten/rng.hpp"
#include "oracles.hpp"

using namespace lagten;

namespace {

void check_axioms(const FiniteField& f, std::uint64_t seed, int samples) {
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    const auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    ASSERT_EQ(f.add(a, b), f.add(b, a));
    ASSERT_EQ(f.mul(a, b), f.mul(b, a));
    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    ASSERT_TRUE(f.is_zero(f.add(a, f.neg(a))));
    ASSERT_EQ(f.sub(a, b), f.add(a, f.neg(b)));
    if (!f.is_zero(a)) {
      ASSERT_TRUE(f.is_one(f.mul(a, f.inv(a))));
    }
  }
}

}  // namespace

TEST(Field, PrimeFieldAxioms) {
  for (std::uint32_t p : {2u, 3u, 29u, 101u, 2147483647u}) check_axioms(FiniteField(p), p, 1000);
}

TEST(Field, ExtensionAxioms) {
  for (int k = 2; k <= 6; ++k) check_axioms(ext_field(7, k, 11), k, 1000);
  check_axioms(ext_field(29, 2, 29), 5, 1000);
}

TEST(Field, ExtensionMultiplicationMatchesSchoolbook) {
  for (int k = 2; k <= 6; ++k) {
    const FiniteField f = ext_field(13, k, 3);
    Rng rng(k);
    for (int t = 0; t < 200; ++t) {
      const auto a = f.random(rng), b = f.random(rng);
      const auto want = oracle::ext_mul(13, f.spec().min_poly, f.coefficients(a), f.coefficients(b));
      EXPECT_EQ(f.mul(a, b), f.from_coefficients(want));
    }
  }
}

TEST(Field, FrobeniusHasOrderK) {
  for (int k = 1; k <= 6; ++k) {
    const FiniteField f = ext_field(5, k, 1);
    const auto g = f.generator();
    auto x = g;
    int order = 0;
    do {
      x = f.frobenius(x);
      ++order;
    } while (x != g);
    EXPECT_EQ(order, k);
  }
}

TEST(Field, MinimalPolynomialIsIrreducible) {
  for (int k = 2; k <= 6; ++k) EXPECT_TRUE(is_irreducible(3, ext_field(3, k, 7).spec().min_poly));
  EXPECT_FALSE(is_irreducible(5, {1, 0, 1, 0, 1}));  // x^4 + x^2 + 1 = (x^2+x+1)(x^2-x+1)
  EXPECT_FALSE(is_irreducible(5, {4, 0, 1}));        // x^2 - 1
}

TEST(Field, GeneratorIsRootOfModulus) {
  const FiniteField f = ext_field(3, 4, 2);
  const auto g = f.generator();
  EXPECT_TRUE(f.is_one(f.pow(g, 80)));
  auto acc = f.zero(), pw = f.one();
  for (auto c : f.spec().min_poly) {
    acc = f.add(acc, f.mul(f.from_int(c), pw));
    pw = f.mul(pw, g);
  }
  EXPECT_TRUE(f.is_zero(acc));
}

TEST(Field, IndexBijection) {
  const FiniteField f = ext_field(3, 3, 5);
  std::vector<bool> seen(f.order(), false);
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const auto a = f.from_index(i);
    EXPECT_EQ(f.to_index(a), i);
    seen[i] = true;
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
}

TEST(Field, SquareRoots) {
  for (const FiniteField& f : {FiniteField(29), ext_field(29, 2, 29), ext_field(3, 3, 1)}) {
    int squares = 0;
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      const auto a = f.from_index(i);
      if (auto r = f.sqrt(a)) {
        EXPECT_EQ(f.mul(*r, *r), a);
        ++squares;
      }
    }
    EXPECT_EQ(static_cast<std::uint64_t>(squares), (f.order() - 1) / 2);
  }
}

TEST(Field, EmbeddingIsHomomorphism) {
  const FiniteField small = ext_field(5, 2, 1);
  const FiniteField big = ext_field(5, 4, 9);
  const FieldEmbedding e(small, big);
  Rng rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto a = small.random(rng), b = small.random(rng);
    EXPECT_EQ(e(small.add(a, b)), big.add(e(a), e(b)));
    EXPECT_EQ(e(small.mul(a, b)), big.mul(e(a), e(b)));
    EXPECT_EQ(e.preimage(e(a)), a);
  }
  EXPECT_TRUE(e(small.one()) == big.one());
}

TEST(Field, PrimeFieldLiftIsIdentityOnDigits) {
  const FiniteField p(31);
  const FiniteField q = ext_field(31, 2, 4);
  const FieldEmbedding e(p, q);
  for (int v = 0; v < 31; ++v) EXPECT_EQ(e(p.from_int(v)), q.from_int(v));
}

TEST(Field, ExtensionWithMinOrder) {
  const auto [big, r] = extension_with_min_order(FiniteField(31), 101, 1);
  EXPECT_EQ(r, 2);
  EXPECT_EQ(big.order(), 961u);
  const auto [same, r1] = extension_with_min_order(FiniteField(101), 101, 1);
  EXPECT_EQ(r1, 1);
  EXPECT_EQ(same.order(), 101u);
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(FiniteField(12), Error);
  EXPECT_THROW(FiniteField(29).inv(FiniteField(29).zero()), Error);
}
