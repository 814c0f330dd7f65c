#include "lagten/plane_curves.hpp"

#include <algorithm>

#include "lagten/error.hpp"
#include "lagten/field.hpp"

namespace lagten {

std::size_t condition_count(const MultPointSet& s) {
  std::size_t n = 0;
  for (const auto& mp : s.points) n += static_cast<std::size_t>(mp.mult) * (mp.mult + 1) / 2;
  return n;
}

std::size_t expected_dimension(int degree, const MultPointSet& s) {
  const std::size_t total = form_space_dim(3, degree);
  const std::size_t c = condition_count(s);
  return c >= total ? 0 : total - c;
}

namespace {

// Invertible 3 x 3 matrix whose first column is p.
FMatrix frame_at(const FiniteField& f, const Point& p) {
  int lead = 0;
  while (lead < 3 && f.is_zero(p[lead])) ++lead;
  if (lead == 3) throw Error("forms_with_mult: zero point");
  FMatrix m(3, 3, f.zero());
  for (int i = 0; i < 3; ++i) m(i, 0) = p[i];
  int col = 1;
  for (int j = 0; j < 3; ++j)
    if (j != lead) m(j, col++) = f.one();
  return m;
}

}  // namespace

FormSystem forms_with_mult(const FiniteField& f, int degree, const MultPointSet& s) {
  const MonomialBasis basis(3, degree);
  FMatrix conditions(condition_count(s), basis.size(), f.zero());
  std::size_t row = 0;
  for (const auto& mp : s.points) {
    if (mp.point.size() != 3) throw Error("forms_with_mult: points must lie in P^2");
    if (mp.mult < 1) throw Error("forms_with_mult: multiplicity must be positive");
    const FMatrix frame = frame_at(f, mp.point);
    // In the moved coordinates the point is (1,0,0); multiplicity m means
    // no monomial x0^{d-a-b} x1^a x2^b with a + b < m.
    std::vector<Exponent> low;
    for (int a = 0; a < mp.mult; ++a)
      for (int b = 0; a + b < mp.mult; ++b)
        if (a + b <= degree) low.push_back(Exponent{static_cast<std::uint8_t>(degree - a - b),
                                                    static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const MultiPoly moved = substitute(f, monomial(f, 3, basis[k]), frame);
      for (std::size_t t = 0; t < low.size(); ++t) conditions(row + t, k) = moved.coefficient(low[t]);
    }
    row += static_cast<std::size_t>(mp.mult) * (mp.mult + 1) / 2;
  }
  return forms_from_conditions(f, 3, degree, conditions);
}

MultiPoly winger_sextic(const FiniteField& f) {
  return form_from_ints(f, 3, 6,
                        {{{6, 0, 0}, 32},
                         {{1, 5, 0}, 27},
                         {{4, 1, 1}, -120},
                         {{2, 2, 2}, 150},
                         {{0, 3, 3}, 5},
                         {{1, 0, 5}, 27}});
}

MultPointSet find_nodes(const FiniteField& f, const MultiPoly& form, int max_level, std::uint64_t budget,
                        std::uint64_t seed) {
  if (form.nvars() != 3) throw Error("find_nodes: expected a ternary form");
  const SingularScan scan = singular_scan(f, form, max_level, budget, seed);
  int top = 1;
  for (const auto& lv : scan.levels)
    if (!lv.points.empty()) top = std::max(top, lv.level);
  const LevelPoints* host = nullptr;
  for (const auto& lv : scan.levels)
    if (lv.level == top) host = &lv;
  MultPointSet out;
  const FiniteField target = top == 1 ? FiniteField(f.characteristic()) : host->field;
  out.field = target.spec();
  for (const auto& lv : scan.levels) {
    if (lv.points.empty()) continue;
    if (top % lv.level != 0) throw Error("find_nodes: singular points over incompatible extension degrees");
    const FieldEmbedding emb(lv.field, target);
    for (const auto& x : lv.points) {
      Point y(3);
      for (int i = 0; i < 3; ++i) y[i] = emb(x[i]);
      out.points.push_back({normalize_point(target, y), 2});
    }
  }
  return out;
}

NodeSelection select_winger_prime(std::uint32_t lo, std::uint32_t hi, int max_level, std::uint64_t budget,
                                  std::uint64_t seed, std::size_t expected) {
  NodeSelection sel;
  for (std::uint32_t p = lo; p <= hi; ++p) {
    if (p == 2 || p == 3 || p == 5 || !is_prime(p)) continue;
    const FiniteField f(p);
    MultPointSet nodes = find_nodes(f, winger_sextic(f), max_level, budget, seed);
    if (nodes.points.size() == expected) {
      sel.prime = p;
      sel.nodes = std::move(nodes);
      return sel;
    }
    sel.rejected.push_back(p);
  }
  throw Error("select_winger_prime: no prime in range gives " + std::to_string(expected) + " nodes");
}

namespace {

// Coordinates of each form in the basis of `ambient`, as rows.
FMatrix coordinates_in(const FiniteField& f, const FormSystem& ambient, const std::vector<MultiPoly>& forms) {
  const MonomialBasis mb(3, ambient.degree);
  FMatrix b(mb.size(), ambient.dimension(), f.zero());
  for (std::size_t j = 0; j < ambient.dimension(); ++j) {
    const auto col = mb.to_dense(ambient.basis[j]);
    for (std::size_t i = 0; i < mb.size(); ++i) b(i, j) = col[i];
  }
  FMatrix rhs(mb.size(), forms.size(), f.zero());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const auto col = mb.to_dense(forms[j]);
    for (std::size_t i = 0; i < mb.size(); ++i) rhs(i, j) = col[i];
  }
  return solve(f, b, rhs).transposed();
}

std::vector<MultiPoly> recombine(const FiniteField& f, const std::vector<MultiPoly>& basis, Rng& rng) {
  const std::size_t n = basis.size();
  FMatrix g(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = f.random(rng);
  } while (f.is_zero(det(f, g)));
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly s(basis[0].nvars(), basis[0].degree());
    for (std::size_t j = 0; j < n; ++j) s = add(f, s, scale(f, basis[j], g(i, j)));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

CobleTen coble_ten(const FiniteField& f, const MultPointSet& nodes, CobleKind kind, Rng* twist) {
  if (nodes.points.size() != 10)
    throw DimensionMismatch("coble_ten: node count", 10, static_cast<long>(nodes.points.size()));
  const bool septic = kind == CobleKind::Septic;
  const int vdeg = septic ? 7 : 10;
  const int vmult = septic ? 2 : 3;
  const int second_deg = septic ? 4 : 7;
  const int second_mult = septic ? 1 : 2;

  auto with_mults = [&](int base, int extra_at, int extra) {
    MultPointSet s{nodes.field, {}};
    for (std::size_t j = 0; j < nodes.points.size(); ++j)
      s.points.push_back({nodes.points[j].point, static_cast<int>(j) == extra_at ? base + extra : base});
    return s;
  };

  CobleTen out;
  out.ambient = forms_with_mult(f, vdeg, with_mults(vmult, -1, 0));
  if (out.ambient.dimension() != 6)
    throw DimensionMismatch("coble_ten: forms of degree " + std::to_string(vdeg) + " with multiplicity " +
                                std::to_string(vmult) + " at the nodes",
                            6, static_cast<long>(out.ambient.dimension()));
  out.config.field = f.spec();
  out.config.provenance = {septic ? "coble-septic" : "coble-decimic", 0,
                           "nodes over F_" + std::to_string(f.order())};

  for (int i = 0; i < 10; ++i) {
    MultPointSet others{nodes.field, {}};
    for (int j = 0; j < 10; ++j)
      if (j != i) others.points.push_back({nodes.points[j].point, 1});
    const FormSystem cubics = forms_with_mult(f, 3, others);
    const FormSystem second = forms_with_mult(f, second_deg, with_mults(second_mult, i, 1));
    out.first_dims.push_back(cubics.dimension());
    out.second_dims.push_back(second.dimension());
    if (cubics.dimension() != 1)
      throw DimensionMismatch("coble_ten: cubics through nine nodes (node " + std::to_string(i) + ")", 1,
                              static_cast<long>(cubics.dimension()));
    if (second.dimension() != 3)
      throw DimensionMismatch("coble_ten: second factor (node " + std::to_string(i) + ")", 3,
                              static_cast<long>(second.dimension()));
    std::vector<MultiPoly> a = cubics.basis;
    std::vector<MultiPoly> b = second.basis;
    if (twist) {
      a = recombine(f, a, *twist);
      b = recombine(f, b, *twist);
    }
    std::vector<MultiPoly> products;
    for (const auto& q : b) products.push_back(multiply(f, a[0], q));
    out.config.planes.emplace_back(f, coordinates_in(f, out.ambient, products));
  }
  return out;
}

}  // namespace lagten
