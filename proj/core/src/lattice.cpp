#include "lagten/lattice.hpp"

#include "lagten/matrix.hpp"

namespace lagten {

IntLattice::IntLattice(std::string label, IntMatrix base, long scale)
    : label_(std::move(label)), base_(std::move(base)), scale_(scale) {
  if (base_.rows() != base_.cols()) throw Error("IntLattice: Gram matrix is not square");
  for (std::size_t i = 0; i < base_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (base_(i, j) != base_(j, i)) throw Error("IntLattice: Gram matrix is not symmetric");
}

IntMatrix IntLattice::gram() const {
  IntMatrix g = base_;
  if (scale_ != 1)
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= scale_;
  return g;
}

Signature IntLattice::signature() const { return signature_of(gram()); }
mpz_class IntLattice::det() const { return int_det(gram()); }

mpz_class IntLattice::product(const LatticeVector& a, const LatticeVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw Error("IntLattice::product: vector length mismatch");
  mpz_class s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * base_(i, j) * b[j];
  }
  return s * scale_;
}

Signature signature_of(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  Matrix<mpq_class> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = gram(i, j);
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // Pick a remaining index with nonzero diagonal; otherwise create one.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && m(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      // e_a <- e_a + e_b gives diagonal 2 m(a, b) != 0.
      for (std::size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
      for (std::size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
      piv = a;
    }
    done[piv] = true;
    const mpq_class d = m(piv, piv);
    (d > 0 ? sig.positive : sig.negative)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, piv) == 0) continue;
      const mpq_class f = m(i, piv) / d;
      for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(piv, k);
      for (std::size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, piv);
    }
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

IntMatrix gram_of(const IntLattice& ambient, const std::vector<LatticeVector>& vs) {
  IntMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) g(i, j) = ambient.product(vs[i], vs[j]);
  return g;
}

IntLattice direct_sum(const std::string& label, const std::vector<IntLattice>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, n);
  std::size_t off = 0;
  for (const auto& p : parts) {
    const IntMatrix pg = p.gram();
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = pg(i, j);
    off += p.rank();
  }
  return IntLattice(label, g);
}

IntLattice odd_lorentzian() {
  IntMatrix g(11, 11);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < 11; ++i) g(i, i) = -1;
  return IntLattice("I^{1,10}", g);
}

LatticeVector basis_vector(std::size_t rank, std::size_t i) {
  LatticeVector v(rank, 0);
  v[i] = 1;
  return v;
}

LatticeVector canonical_k10() {
  LatticeVector v(11, 1);
  v[0] = -3;
  return v;
}

std::vector<LatticeVector> isotropic_ten() {
  std::vector<LatticeVector> out;
  for (std::size_t i = 1; i <= 10; ++i) {
    LatticeVector v(11, -1);
    v[0] = 3;
    v[i] = 0;
    out.push_back(v);
  }
  return out;
}

LatticeVector fano_class() {
  LatticeVector v(11, -3);
  v[0] = 10;
  return v;
}

IntLattice plane_class_gram(int n) {
  if (n < 1) throw Error("plane_class_gram: need at least one plane");
  IntMatrix g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) g(i, j) = (i == j) ? 3 : 1;
  return IntLattice("M" + std::to_string(n), g);
}

namespace {

// Coordinates of I^{21,2}: [0, 11) first summand, [11, 22) second, 22 the unit vector e.
constexpr std::size_t kSecond = 11;
constexpr std::size_t kUnit = 22;

LatticeVector triple(const LatticeVector& a, const LatticeVector& b, long c) {
  LatticeVector v(23, 0);
  for (std::size_t i = 0; i < 11; ++i) {
    v[i] = a[i];
    v[kSecond + i] = b[i];
  }
  v[kUnit] = c;
  return v;
}

LatticeVector negate(LatticeVector v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

EmbeddingCheck embed_and_complement() {
  const IntLattice lor = odd_lorentzian().twisted(-1);
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  EmbeddingCheck out{direct_sum("I^{21,2}", {lor, lor, IntLattice("<1>", one)}), {}, {}, {}, 0, 0, 0, 0, {}, 0};

  const auto k10 = canonical_k10();
  out.images.push_back(triple(k10, k10, 1));
  for (std::size_t i = 1; i <= 10; ++i) out.images.push_back(triple(basis_vector(11, i), basis_vector(11, i), -1));

  const IntLattice m = plane_class_gram(10);
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = i; j < 11; ++j) {
      ++out.products_checked;
      if (out.ambient.product(out.images[i], out.images[j]) != m.gram()(i, j)) ++out.product_mismatches;
    }

  for (std::size_t i = 0; i <= 10; ++i)
    out.complement.push_back(triple(basis_vector(11, i), negate(basis_vector(11, i)), 0));
  out.complement.push_back(triple(fano_class(), basis_vector(11, 0), -3));
  for (const auto& c : out.complement)
    for (const auto& v : out.images) {
      ++out.cross_products_checked;
      if (out.ambient.product(c, v) != 0) ++out.nonzero_cross_products;
    }
  out.complement_gram = gram_of(out.ambient, out.complement);
  out.complement_det = int_det(out.complement_gram);
  out.special_block = gram_of(out.ambient, {triple(k10, negate(k10), 0), out.complement.back()});
  return out;
}

IntLattice bb_matrix() {
  IntMatrix g(11, 11);
  g(0, 0) = 6;
  for (std::size_t i = 1; i < 11; ++i) {
    g(i, i) = -2;
    g(0, i) = 2;
    g(i, 0) = 2;
  }
  return IntLattice("BB", g);
}

IntLattice epw_bb_lattice() { return odd_lorentzian().twisted(2); }

mpz_class fujiki_quartic(const IntLattice& l, const LatticeVector& a, const LatticeVector& b,
                         const LatticeVector& c, const LatticeVector& d) {
  return l.product(a, b) * l.product(c, d) + l.product(a, c) * l.product(b, d) + l.product(a, d) * l.product(b, c);
}

namespace {

std::vector<LatticeVector> sublattice_n0(std::size_t rank) {
  // v_0, v_0 - v_1 - v_2 - v_3, v_i - v_{i+1}
  std::vector<LatticeVector> vs;
  vs.push_back(basis_vector(rank, 0));
  LatticeVector s = basis_vector(rank, 0);
  s[1] = s[2] = s[3] = -1;
  vs.push_back(s);
  for (std::size_t i = 1; i + 1 < rank; ++i) {
    LatticeVector d(rank, 0);
    d[i] = 1;
    d[i + 1] = -1;
    vs.push_back(d);
  }
  return vs;
}

}  // namespace

BBComparison bb_discriminant_compare() {
  BBComparison out;
  const IntLattice a = bb_matrix();
  const IntLattice e = epw_bb_lattice();
  out.det_bb = a.det();
  out.det_epw = e.det();
  out.coker_bb = cokernel_orders(a.gram());
  out.coker_epw = cokernel_orders(e.gram());
  out.non_isometric = abs(out.det_bb) != abs(out.det_epw);

  const IntLattice m = plane_class_gram(10);
  out.det_plane_lattice = m.det();
  auto n0 = sublattice_n0(11);
  out.det_n0_plane = int_det(gram_of(m, n0));
  out.det_n0_bb = int_det(gram_of(a, n0));
  const std::vector<LatticeVector> m0(n0.begin() + 1, n0.end());
  out.det_m0 = int_det(gram_of(m, m0));

  out.quoted_det_bb = mpz_class(2048 * 3 * 13);
  out.quoted_matches_computed = abs(out.det_bb) == out.quoted_det_bb;

  const auto sigma = basis_vector(11, 0);
  out.sigma_fourth = fujiki_quartic(a, sigma, sigma, sigma, sigma);
  out.h_epw_fourth = fujiki_quartic(e, sigma, sigma, sigma, sigma);

  bool ok = true;
  for (const IntLattice* l : {&a, &e})
    for (std::size_t i = 0; i < 11; ++i)
      for (std::size_t j = i; j < 11; ++j) {
        LatticeVector v = basis_vector(11, i);
        v[j] += 1;
        for (const auto& w : {basis_vector(11, i), v}) {
          const mpz_class q = l->product(w, w);
          if (fujiki_quartic(*l, w, w, w, w) != 3 * q * q) ok = false;
        }
      }
  out.fujiki_consistent = ok;
  return out;
}

std::string to_string(const mpz_class& z) { return z.get_str(); }

std::string factor_string(mpz_class n) {
  if (n == 0) return "0";
  std::string out = n < 0 ? "-" : "";
  n = abs(n);
  if (n == 1) return out + "1";
  bool first = true;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e == 0) continue;
    out += (first ? "" : "*") + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  if (n > 1) out += (first ? "" : "*") + n.get_str();
  return out;
}

}  // namespace lagten
