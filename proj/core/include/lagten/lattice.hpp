#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lagten/smith.hpp"

namespace lagten {

using LatticeVector = std::vector<mpz_class>;

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Integer lattice given by a Gram matrix in an explicit basis. `scale` is
/// the twist M(k): the effective form is scale * base.
class IntLattice {
 public:
  IntLattice(std::string label, IntMatrix base, long scale = 1);

  const std::string& label() const { return label_; }
  long scale() const { return scale_; }
  std::size_t rank() const { return base_.rows(); }
  IntMatrix gram() const;
  Signature signature() const;
  mpz_class det() const;
  mpz_class product(const LatticeVector& a, const LatticeVector& b) const;
  IntLattice twisted(long k) const { return IntLattice(label_ + "(" + std::to_string(k) + ")", base_, scale_ * k); }

 private:
  std::string label_;
  IntMatrix base_;
  long scale_;
};

/// Signature of a symmetric integer matrix (congruence diagonalization over Q).
Signature signature_of(const IntMatrix& gram);
/// Gram matrix of vectors under a given form.
IntMatrix gram_of(const IntLattice& ambient, const std::vector<LatticeVector>& vs);
/// Orthogonal sum.
IntLattice direct_sum(const std::string& label, const std::vector<IntLattice>& parts);

/// I^{1,10} with diagonal form (1, -1, ..., -1) in the basis e_0..e_10.
IntLattice odd_lorentzian();
LatticeVector basis_vector(std::size_t rank, std::size_t i);
/// k_10 = -3 e_0 + e_1 + ... + e_10.
LatticeVector canonical_k10();
/// f_i = 3 e_0 - sum_{j != i} e_j, i = 1..10 (returned 0-based).
std::vector<LatticeVector> isotropic_ten();
/// Delta = 10 e_0 - 3 (e_1 + ... + e_10).
LatticeVector fano_class();

/// Gram of (h^2, P_1..P_n): 2 I_{n+1} + all-ones.
IntLattice plane_class_gram(int n);

struct EmbeddingCheck {
  IntLattice ambient;                      // I^{21,2}
  std::vector<LatticeVector> images;       // iota(h^2), iota(P_1..P_10)
  std::vector<LatticeVector> complement;   // 12 generators
  IntMatrix complement_gram;
  int product_mismatches = 0;              // over pairs i <= j of the 11 images
  int products_checked = 0;
  int nonzero_cross_products = 0;          // complement vs images
  int cross_products_checked = 0;
  IntMatrix special_block;                 // Gram of (k10, -k10', 0) and (Delta, e0', -3e)
  mpz_class complement_det;
};

/// The embedding of the plane-class lattice into I^{21,2} and the explicit
/// complement generators.
EmbeddingCheck embed_and_complement();

/// The BB matrix of the Fano scheme of lines: diag(6, -2, ..., -2) with
/// first row and column 2.
IntLattice bb_matrix();
/// I^{1,10}(2), the form on the EPW side.
IntLattice epw_bb_lattice();

/// Polarized Fujiki form (a,b)(c,d) + (a,c)(b,d) + (a,d)(b,c).
mpz_class fujiki_quartic(const IntLattice& l, const LatticeVector& a, const LatticeVector& b,
                         const LatticeVector& c, const LatticeVector& d);

struct BBComparison {
  mpz_class det_bb;
  mpz_class det_epw;
  std::vector<mpz_class> coker_bb;
  std::vector<mpz_class> coker_epw;
  bool non_isometric = false;
  mpz_class det_plane_lattice;        // 2 I_11 + 1
  mpz_class det_m0;                   // h^2-P1-P2-P3, P_i - P_{i+1} in M
  mpz_class det_n0_bb;                // sigma, sigma - D1 - D2 - D3, D_i - D_{i+1} under A
  mpz_class det_n0_plane;             // h^2, h^2 - P1 - P2 - P3, P_i - P_{i+1} in M
  mpz_class quoted_det_bb;            // the competing value 2^11 * 3 * 13
  bool quoted_matches_computed = false;
  mpz_class sigma_fourth;             // (sigma^4) via the Fujiki identity
  mpz_class h_epw_fourth;
  bool fujiki_consistent = false;     // q(a,a,a,a) = 3 (a,a)^2 on basis vectors and pair sums
};

BBComparison bb_discriminant_compare();

std::string to_string(const mpz_class& z);
std::string factor_string(mpz_class n);

}  // namespace lagten
