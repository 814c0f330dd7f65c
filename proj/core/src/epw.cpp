#include "lagten/epw.hpp"

#include <algorithm>

#include "lagten/error.hpp"
#include "lagten/projective.hpp"

namespace lagten {

LagrangianSubspace::LagrangianSubspace(const FiniteField& f, FMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != 10 || rows_.cols() != kWedge3) throw Error("LagrangianSubspace: basis must be 10 x 20");
  if (rank(f, rows_) != 10) throw Error("LagrangianSubspace: basis vectors are dependent");
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      if (!f.is_zero(pairing(f, rows_.row(i), rows_.row(j))))
        throw Error("LagrangianSubspace: rows " + std::to_string(i) + " and " + std::to_string(j) +
                    " pair to a nonzero value");
}

LagrangianSubspace LagrangianSubspace::from_config(const FiniteField& f, const TenConfig& cfg) {
  const FMatrix pl = plucker_matrix(f, cfg);
  if (pl.rows() == 10) return LagrangianSubspace(f, pl);
  // Larger families: take a basis of the span.
  FMatrix m = pl;
  const auto piv = rref(f, m);
  if (piv.size() != 10)
    throw DimensionMismatch("LagrangianSubspace::from_config: Plücker span", 10, static_cast<long>(piv.size()));
  FMatrix rows(10, kWedge3);
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < kWedge3; ++k) rows(i, k) = m(i, k);
  return LagrangianSubspace(f, rows);
}

int corank(const FiniteField& f, const LagrangianSubspace& a, std::span<const Elem> v) {
  if (v.size() != 6) throw Error("corank: point must have six coordinates");
  FMatrix m(25, kWedge3);
  int r = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y) {
      const Vec w = wedge_with_basis_pair(f, v, x, y);
      for (int k = 0; k < kWedge3; ++k) m(r, k) = w[k];
      ++r;
    }
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < kWedge3; ++k) m(15 + i, k) = a.rows()(i, k);
  return kWedge3 - static_cast<int>(rank(f, m));
}

namespace {

std::vector<std::pair<int, int>> chart_pairs(int c) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < 6; ++x)
    for (int y = x + 1; y < 6; ++y)
      if (x != c && y != c) out.emplace_back(x, y);
  return out;
}

}  // namespace

Elem chart_determinant(const FiniteField& f, const LagrangianSubspace& a, std::span<const Elem> v, int c) {
  if (c < 0 || c > 5) throw Error("chart_determinant: chart index out of range");
  FMatrix m(kWedge3, kWedge3);
  const auto pairs = chart_pairs(c);
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const Vec w = wedge_with_basis_pair(f, v, pairs[col].first, pairs[col].second);
    for (int k = 0; k < kWedge3; ++k) m(k, col) = w[k];
  }
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < kWedge3; ++k) m(k, 10 + i) = a.rows()(i, k);
  return det(f, m);
}

ChartDeterminant::ChartDeterminant(const FiniteField& f, const LagrangianSubspace& a, int c) : f_(f), c_(c) {
  if (c < 0 || c > 5) throw Error("ChartDeterminant: chart index out of range");
  // M0 = [A^T | B] with B completing a basis; L = last ten rows of M0^{-1}.
  FMatrix m0(kWedge3, kWedge3, f.zero());
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < kWedge3; ++k) m0(k, i) = a.rows()(i, k);
  int filled = 10;
  for (int e = 0; e < kWedge3 && filled < kWedge3; ++e) {
    m0(e, filled) = f.one();
    FMatrix head(kWedge3, filled + 1);
    for (int r = 0; r < kWedge3; ++r)
      for (int col = 0; col <= filled; ++col) head(r, col) = m0(r, col);
    if (rank(f, head) == static_cast<std::size_t>(filled + 1))
      ++filled;
    else
      m0(e, filled) = f.zero();
  }
  scale_ = det(f, m0);
  const FMatrix p = inverse(f, m0);
  FMatrix l(10, kWedge3);
  for (int r = 0; r < 10; ++r)
    for (int k = 0; k < kWedge3; ++k) l(r, k) = p(10 + r, k);
  const auto pairs = chart_pairs(c);
  for (int i = 0; i < 6; ++i) {
    Vec e(6, f.zero());
    e[i] = f.one();
    FMatrix vi(kWedge3, 10);
    for (std::size_t col = 0; col < pairs.size(); ++col) {
      const Vec w = wedge_with_basis_pair(f, e, pairs[col].first, pairs[col].second);
      for (int k = 0; k < kWedge3; ++k) vi(k, col) = w[k];
    }
    pieces_.push_back(multiply(f, l, vi));
  }
}

Elem ChartDeterminant::operator()(std::span<const Elem> v) const {
  const FiniteField& f = f_;
  FMatrix y(10, 10, f.zero());
  for (int i = 0; i < 6; ++i) {
    if (f.is_zero(v[i])) continue;
    const FMatrix& w = pieces_[i];
    for (int r = 0; r < 10; ++r)
      for (int col = 0; col < 10; ++col) y(r, col) = f.add(y(r, col), f.mul(v[i], w(r, col)));
  }
  return f.mul(scale_, det(f, y));
}

LagrangianSubspace map_subspace(const FieldEmbedding& e, const LagrangianSubspace& a) {
  FMatrix rows(10, kWedge3);
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < kWedge3; ++k) rows(i, k) = e(a.rows()(i, k));
  return LagrangianSubspace(e.target(), rows);
}

Point map_point(const FieldEmbedding& e, const Point& p) {
  Point q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = e(p[i]);
  return q;
}

TenConfig map_config(const FieldEmbedding& e, const TenConfig& cfg) {
  TenConfig out{e.target().spec(), {}, cfg.provenance};
  for (const auto& pl : cfg.planes) {
    FMatrix rows(3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) rows(i, j) = e(pl.rows()(i, j));
    out.planes.emplace_back(e.target(), std::move(rows));
  }
  return out;
}

namespace {

Elem pow4(const FiniteField& f, const Elem& x) {
  const Elem x2 = f.mul(x, x);
  return f.mul(x2, x2);
}

Point random_point_with(const FiniteField& f, Rng& rng, int c, bool unit) {
  Point x = random_point(f, 6, rng);
  x[c] = unit ? f.one() : f.random_nonzero(rng);
  return x;
}

}  // namespace

EpwForm epw_form(const FiniteField& base, const LagrangianSubspace& a_base, EpwOptions opts) {
  Rng rng(opts.seed);
  EpwForm out{base, std::nullopt, false, std::nullopt, std::nullopt, -1, "", 0, -1, false, 0};
  if (base.order() < opts.min_field_order) {
    auto [big, r] = extension_with_min_order(base, opts.min_field_order, opts.seed);
    out.field = big;
    out.embedding.emplace(base, big);
  }
  const FiniteField& f = out.field;
  const LagrangianSubspace a = out.embedding ? map_subspace(*out.embedding, a_base) : a_base;

  // Pick the first chart whose determinant is not identically zero on samples.
  std::vector<int> live;
  for (int c = 0; c < 6; ++c) {
    const ChartDeterminant g(f, a, c);
    for (int t = 0; t < 20; ++t)
      if (!f.is_zero(g(random_point(f, 6, rng)))) {
        live.push_back(c);
        break;
      }
  }
  if (live.empty()) {
    out.degenerate = true;
    return out;
  }
  const int c = live.front();
  out.chart = c;
  const ChartDeterminant g(f, a, c);
  const std::size_t need = form_space_dim(6, 6) + 16;

  auto verify_at_fresh_points = [&](const MultiPoly& s) {
    for (std::size_t t = 0; t < opts.verify_points; ++t) {
      const Point x = random_point(f, 6, rng);
      if (chart_determinant(f, a, x, c) != f.mul(pow4(f, x[c]), evaluate(f, s, x))) return false;
    }
    return true;
  };

  std::optional<MultiPoly> s;
  try {
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < need; ++i) {
      Point x = random_point_with(f, rng, c, false);
      const Elem v = f.div(g(x), pow4(f, x[c]));
      samples.push_back({std::move(x), v});
    }
    MultiPoly cand = interpolate(f, 6, 6, samples);
    if (verify_at_fresh_points(cand)) {
      s = cand;
      out.path = "chart-quotient";
    }
  } catch (const Error&) {
  }
  if (!s) {
    // Fit the affine restriction x_c = 1 as a form of degree <= 6, then homogenize.
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < need; ++i) {
      Point x = random_point_with(f, rng, c, true);
      const Elem v = g(x);
      samples.push_back({std::move(x), v});
    }
    MultiPoly cand = interpolate(f, 6, 6, samples);
    if (!verify_at_fresh_points(cand)) throw Error("epw_form: chart determinant is not x_c^4 times a sextic");
    s = cand;
    out.path = "affine-fallback";
  }
  out.verified_points = opts.verify_points;

  // Cross-chart agreement up to one scalar.
  for (int c2 : live) {
    if (c2 == c) continue;
    out.cross_chart = c2;
    const ChartDeterminant g2(f, a, c2);
    std::optional<Elem> ratio;
    bool ok = true;
    std::size_t used = 0;
    while (used < opts.verify_points) {
      const Point x = random_point(f, 6, rng);
      const Elem lhs = g2(x);
      const Elem rhs = f.mul(pow4(f, x[c2]), evaluate(f, *s, x));
      if (f.is_zero(rhs)) {
        if (!f.is_zero(lhs)) ok = false;
        continue;
      }
      const Elem q = f.div(lhs, rhs);
      if (!ratio) ratio = q;
      if (*ratio != q || f.is_zero(q)) ok = false;
      ++used;
    }
    out.cross_chart_ok = ok;
    out.cross_chart_points = used;
    break;
  }
  if (live.size() == 1) out.cross_chart_ok = false;

  out.sextic = s;
  if (out.embedding) {
    MultiPoly back(6, 6);
    bool all = true;
    for (const auto& [e, coef] : s->terms()) {
      const auto pre = out.embedding->preimage(coef);
      if (!pre) {
        all = false;
        break;
      }
      back.set(e, *pre);
    }
    if (all) out.base_sextic = back;
  } else {
    out.base_sextic = s;
  }
  return out;
}

ChartFactorCertificate certify_chart_factor(const FiniteField& f, const LagrangianSubspace& a, int c) {
  constexpr int kNodes = 11;
  constexpr int kVars = 5;
  if (f.order() < kNodes) throw Error("certify_chart_factor: field has fewer than 11 elements");
  ChartFactorCertificate cert;
  cert.chart = c;
  const ChartDeterminant g(f, a, c);
  std::vector<Elem> nodes(kNodes);
  for (int i = 0; i < kNodes; ++i) nodes[i] = f.from_index(i);
  std::vector<int> others;
  for (int j = 0; j < 6; ++j)
    if (j != c) others.push_back(j);

  std::size_t total = 1;
  for (int t = 0; t < kVars; ++t) total *= kNodes;
  std::vector<Elem> vals(total);
  Point x(6, f.zero());
  x[c] = f.one();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int t = 0; t < kVars; ++t) {
      x[others[t]] = nodes[rem % kNodes];
      rem /= kNodes;
    }
    vals[idx] = g(x);
  }
  cert.grid_points = total;

  // Inverse Vandermonde turns values on the nodes into monomial coefficients.
  FMatrix vand(kNodes, kNodes);
  for (int i = 0; i < kNodes; ++i) {
    Elem p = f.one();
    for (int j = 0; j < kNodes; ++j) {
      vand(i, j) = p;
      p = f.mul(p, nodes[i]);
    }
  }
  const FMatrix vinv = inverse(f, vand);
  std::size_t stride = 1;
  std::vector<Elem> line(kNodes), out(kNodes);
  for (int t = 0; t < kVars; ++t) {
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % kNodes != 0) continue;
      for (int i = 0; i < kNodes; ++i) line[i] = vals[base + i * stride];
      for (int i = 0; i < kNodes; ++i) {
        Elem s = f.zero();
        for (int j = 0; j < kNodes; ++j) s = f.add(s, f.mul(vinv(i, j), line[j]));
        out[i] = s;
      }
      for (int i = 0; i < kNodes; ++i) vals[base + i * stride] = out[i];
    }
    stride *= kNodes;
  }

  MultiPoly full(6, 10);
  cert.degree_at_most_10 = true;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (f.is_zero(vals[idx])) continue;
    Exponent e{};
    std::size_t rem = idx;
    int deg = 0;
    for (int t = 0; t < kVars; ++t) {
      e[others[t]] = static_cast<std::uint8_t>(rem % kNodes);
      deg += e[others[t]];
      rem /= kNodes;
    }
    if (deg > 10) {
      cert.degree_at_most_10 = false;
      continue;
    }
    e[c] = static_cast<std::uint8_t>(10 - deg);
    full.set(e, vals[idx]);
  }
  if (!cert.degree_at_most_10) return cert;
  Exponent e4{};
  e4[c] = 4;
  try {
    cert.quotient = divide_exact(f, full, monomial(f, 6, e4));
    cert.divides = true;
  } catch (const Error& err) {
    cert.residual = err.what();
  }
  return cert;
}

bool is_singular_point(const FiniteField& f, const MultiPoly& form, const Point& x) {
  if (!f.is_zero(evaluate(f, form, x))) return false;
  for (int v = 0; v < form.nvars(); ++v)
    if (!f.is_zero(evaluate(f, partial(f, form, v), x))) return false;
  return true;
}

SingularSamples singular_samples(const FiniteField& f, const MultiPoly& sextic, const std::vector<Plane>& planes,
                                 std::size_t per_plane, Rng& rng) {
  SingularSamples r;
  std::vector<MultiPoly> parts;
  for (int v = 0; v < 6; ++v) parts.push_back(partial(f, sextic, v));
  for (const auto& plane : planes)
    for (std::size_t s = 0; s < per_plane; ++s) {
      Point x(6, f.zero());
      Point coeffs = random_point(f, 3, rng);
      if (is_zero_point(f, coeffs)) coeffs[0] = f.one();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) x[j] = f.add(x[j], f.mul(coeffs[i], plane.rows()(i, j)));
      ++r.points;
      const bool zero = f.is_zero(evaluate(f, sextic, x));
      bool grad = true;
      for (const auto& p : parts)
        if (!f.is_zero(evaluate(f, p, x))) {
          grad = false;
          break;
        }
      if (zero) ++r.value_zero;
      if (grad) ++r.gradient_zero;
      if (!zero || !grad) ++r.failures;
    }
  return r;
}

PlaneSextic plane_sextic_curve(const FiniteField& f, const LagrangianSubspace& a, const Plane& plane,
                               std::uint64_t budget) {
  PlaneSextic r;
  if (projective_point_count(f.order(), 3) > budget)
    throw BudgetExceeded("plane_sextic_curve: plane has more points than the budget");
  for_each_projective_point(f, 3, [&](const Point& s) {
    ++r.points_scanned;
    Point x(6, f.zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) x[j] = f.add(x[j], f.mul(s[i], plane.rows()(i, j)));
    if (corank(f, a, x) >= 2) r.corank2.push_back(s);
    return true;
  });
  if (r.corank2.empty()) return r;
  const FormSystem sys = through_points(f, r.corank2, 3, 6);
  r.fit_dimension = sys.dimension();
  if (sys.dimension() == 1) r.curve = normalize(f, sys.basis[0]);
  return r;
}

std::vector<Plane> theta_enumerate(const FiniteField& f, const LagrangianSubspace& a, std::uint64_t budget) {
  const auto n = projective_point_count(f.order(), 10);
  if (n > budget)
    throw BudgetExceeded("theta_enumerate: P^9 has " + std::to_string(n) + " points, budget is " + std::to_string(budget));
  std::vector<Plane> out;
  Vec omega(kWedge3);
  for_each_projective_point(f, 10, [&](const Point& lambda) {
    std::fill(omega.begin(), omega.end(), f.zero());
    for (int i = 0; i < 10; ++i) {
      if (f.is_zero(lambda[i])) continue;
      for (int k = 0; k < kWedge3; ++k) omega[k] = f.add(omega[k], f.mul(lambda[i], a.rows()(i, k)));
    }
    if (auto p = is_decomposable(f, omega)) out.push_back(std::move(*p));
    return true;
  });
  return out;
}

ProductMembership product_membership(const FiniteField& f, const MultiPoly& sextic, const std::vector<MultiPoly>& cubics) {
  for (const auto& c : cubics)
    if (c.degree() != 3 || c.nvars() != sextic.nvars()) throw Error("product_membership: expected cubic forms");
  if (sextic.degree() != 6) throw Error("product_membership: expected a sextic");
  const MonomialBasis basis(sextic.nvars(), 6);
  FMatrix m(0, basis.size());
  for (std::size_t i = 0; i < cubics.size(); ++i)
    for (std::size_t j = i; j < cubics.size(); ++j) m.append_row(basis.to_dense(multiply(f, cubics[i], cubics[j])));
  ProductMembership r;
  r.products_rank = rank(f, m);
  m.append_row(basis.to_dense(sextic));
  r.with_form_rank = rank(f, m);
  r.member = r.with_form_rank == r.products_rank;
  return r;
}

bool is_scalar_power(const FiniteField& f, const MultiPoly& form, const MultiPoly& base, int exp) {
  return proportional(f, form, power(f, base, exp));
}

}  // namespace lagten
