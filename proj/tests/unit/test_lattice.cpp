#include <gtest/gtest.h>

#include "lagten/lattice.hpp"
#include "oracles.hpp"

using namespace lagten;

TEST(Lattice, PlaneClassDeterminants) {
  // 2 I_n + J has eigenvalues 2 (n - 1 times) and n + 2.
  for (int n = 2; n <= 12; ++n) {
    const IntLattice l = plane_class_gram(n - 1);
    mpz_class want = n + 2;
    for (int i = 1; i < n; ++i) want *= 2;
    EXPECT_EQ(l.det(), want);
    EXPECT_EQ(oracle::rational_det(l.gram()), want);
  }
  EXPECT_EQ(plane_class_gram(10).det(), 1024 * 13);
  EXPECT_EQ(plane_class_gram(11).det(), 2048 * 14);
  std::vector<mpz_class> want(10, 2);
  want.push_back(28);
  EXPECT_EQ(cokernel_orders(plane_class_gram(11).gram()), want);
}

TEST(Lattice, Signatures) {
  EXPECT_EQ(odd_lorentzian().signature(), (Signature{1, 10, 0}));
  EXPECT_EQ(plane_class_gram(10).signature(), (Signature{11, 0, 0}));
  EXPECT_EQ(bb_matrix().signature().positive + bb_matrix().signature().negative, 11);
  EXPECT_EQ(odd_lorentzian().twisted(-1).signature(), (Signature{10, 1, 0}));
}

TEST(Lattice, IsotropicTen) {
  const IntLattice l = odd_lorentzian();
  const auto fs = isotropic_ten();
  ASSERT_EQ(fs.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(l.product(fs[i], fs[j]), i == j ? 0 : 1);
  const auto delta = fano_class();
  EXPECT_EQ(l.product(delta, delta), 10);
  for (std::size_t k = 0; k < 11; ++k) {
    mpz_class s = 0;
    for (const auto& v : fs) s += v[k];
    EXPECT_EQ(s, 3 * delta[k]);
  }
  const auto k10 = canonical_k10();
  EXPECT_EQ(l.product(k10, k10), -1);
  EXPECT_EQ(l.product(k10, delta), -3 * 10 + 3 * 10);
}

TEST(Lattice, EmbeddingAndComplement) {
  const EmbeddingCheck ec = embed_and_complement();
  EXPECT_EQ(ec.products_checked, 66);
  EXPECT_EQ(ec.product_mismatches, 0);
  EXPECT_EQ(ec.nonzero_cross_products, 0);
  ASSERT_EQ(ec.complement.size(), 12u);
  EXPECT_EQ(abs(ec.complement_det), 1024 * 13);
  EXPECT_EQ(abs(oracle::rational_det(ec.complement_gram)), 1024 * 13);
  // The Gram of the images recomputed here.
  const IntLattice m = plane_class_gram(10);
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 11; ++j) EXPECT_EQ(ec.ambient.product(ec.images[i], ec.images[j]), m.gram()(i, j));
  const auto& s = ec.special_block;
  EXPECT_EQ(abs(s(0, 0)), 2);
  EXPECT_EQ(abs(s(1, 1)), 2);
  EXPECT_EQ(abs(s(0, 1)), 3);
  EXPECT_EQ(ec.ambient.signature(), (Signature{21, 2, 0}));
}

TEST(Lattice, BBComparison) {
  const BBComparison c = bb_discriminant_compare();
  EXPECT_EQ(abs(c.det_bb), 2048 * 13);
  EXPECT_EQ(abs(oracle::rational_det(bb_matrix().gram())), 2048 * 13);
  EXPECT_EQ(abs(c.det_epw), 2048);
  EXPECT_TRUE(c.non_isometric);
  EXPECT_FALSE(c.quoted_matches_computed);
  EXPECT_EQ(c.sigma_fourth, 108);
  EXPECT_EQ(c.h_epw_fourth, 12);
  EXPECT_TRUE(c.fujiki_consistent);
}

TEST(Lattice, DirectSumAndTwist) {
  const IntLattice a = plane_class_gram(1);
  const IntLattice b = odd_lorentzian();
  const IntLattice s = direct_sum("s", {a, b});
  EXPECT_EQ(s.rank(), 13u);
  EXPECT_EQ(s.det(), a.det() * b.det());
  const IntLattice t = b.twisted(2);
  mpz_class want = b.det();
  for (int i = 0; i < 11; ++i) want *= 2;
  EXPECT_EQ(t.det(), want);
}

TEST(Lattice, FactorString) {
  EXPECT_EQ(factor_string(mpz_class(26624)), "2^11*13");
  EXPECT_EQ(factor_string(mpz_class(-12)), "-2^2*3");
  EXPECT_EQ(factor_string(mpz_class(97)), "97");
}
