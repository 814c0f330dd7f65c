#include "lagten/tens.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lagten/error.hpp"
#include "lagten/projective.hpp"
#include "lagten/quadric.hpp"

namespace lagten {

FMatrix plucker_matrix(const FiniteField& f, const TenConfig& cfg) {
  FMatrix m(cfg.planes.size(), kWedge3, f.zero());
  for (std::size_t i = 0; i < cfg.planes.size(); ++i)
    for (int k = 0; k < kWedge3; ++k) m(i, k) = cfg.planes[i].plucker()[k];
  return m;
}

IncidenceReport verify(const FiniteField& f, const TenConfig& cfg) {
  const int n = static_cast<int>(cfg.planes.size());
  IncidenceReport r;
  r.dims.assign(n, std::vector<int>(n, 2));
  bool all_points = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int d = meet(f, cfg.planes[i], cfg.planes[j]);
      r.dims[i][j] = r.dims[j][i] = d;
      ++r.pairs;
      if (d >= 0) ++r.incident_pairs;
      if (d == 0) {
        const FMatrix x = intersection(f, cfg.planes[i], cfg.planes[j]);
        r.points.push_back({i, j, normalize_point(f, Point(x.row(0).begin(), x.row(0).end()))});
      } else {
        all_points = false;
      }
    }
  r.all_incident = r.incident_pairs == r.pairs;
  r.planes_distinct = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r.dims[i][j] == 2) r.planes_distinct = false;
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& pp : r.points) {
    std::vector<std::uint64_t> key;
    for (const auto& c : pp.point) key.push_back(f.to_index(c));
    seen.insert(key);
  }
  r.distinct_points = static_cast<int>(seen.size());
  r.points_distinct = all_points && r.distinct_points == r.pairs;

  const FMatrix pl = plucker_matrix(f, cfg);
  r.span_dim = static_cast<int>(rank(f, pl));
  r.isotropic = true;
  for (int i = 0; i < n && r.isotropic; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!f.is_zero(pairing(f, cfg.planes[i].plucker(), cfg.planes[j].plucker()))) {
        r.isotropic = false;
        break;
      }
  r.lagrangian_spanning = n == 10 && r.span_dim == 10 && r.isotropic;
  return r;
}

TangentRank tangent_rank(const FiniteField& f, const TenConfig& cfg, const Chart& chart) {
  const std::size_t n = cfg.planes.size();
  std::vector<FMatrix> a;
  for (const auto& p : cfg.planes) a.push_back(chart_matrix(f, p, chart).a);
  TangentRank out;
  out.chart = chart;
  out.unknowns = 9 * n;
  FMatrix sys(0, out.unknowns);
  std::vector<Elem> row(out.unknowns);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      FMatrix d(3, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) d(r, c) = f.sub(a[i](r, c), a[j](r, c));
      if (!f.is_zero(lagten::det(f, d)))
        throw Error("tangent_rank: planes " + std::to_string(i) + " and " + std::to_string(j) + " do not meet");
      if (rank(f, d) != 2)
        throw Error("tangent_rank: planes " + std::to_string(i) + " and " + std::to_string(j) +
                    " do not meet in a single point");
      const FMatrix adj = adjugate(f, d);
      std::fill(row.begin(), row.end(), f.zero());
      // Tr(adj * X) = sum_{r,c} adj(c, r) X(r, c)
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          row[9 * i + 3 * r + c] = adj(c, r);
          row[9 * j + 3 * r + c] = f.neg(adj(c, r));
        }
      sys.append_row(row);
    }
  out.equations = sys.rows();
  out.rank = rank(f, sys);
  out.tangent_dim = out.unknowns - out.rank;
  return out;
}

std::vector<Chart> admissible_charts(const FiniteField& f, const TenConfig& cfg) {
  std::vector<Chart> out;
  for (const auto& c : all_charts()) {
    bool ok = true;
    for (const auto& p : cfg.planes) {
      FMatrix ms(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ms(i, j) = p.rows()(i, c.pivots[j]);
      if (rank(f, ms) < 3) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

TenConfig independent_planes(const FiniteField& f, const TenConfig& cfg) {
  TenConfig out{cfg.field, {}, cfg.provenance};
  out.provenance.recipe += "+independent";
  FMatrix span;
  for (const auto& p : cfg.planes) {
    if (out.planes.size() == 10) break;
    FMatrix trial = span;
    trial.append_row(p.plucker());
    if (rank(f, trial) == trial.rows()) {
      span = std::move(trial);
      out.planes.push_back(p);
    }
  }
  return out;
}

TenConfig dualize(const FiniteField& f, const TenConfig& cfg) {
  TenConfig out{cfg.field, {}, cfg.provenance};
  out.provenance.recipe += "+dual";
  for (const auto& p : cfg.planes) out.planes.push_back(dual_plane(f, p));
  return out;
}

Plane base_plane(const FiniteField& f) { return coordinate_plane(f, 0, 1, 2); }

Point embed_from_pi(const FiniteField& f, const Point& x, int i) {
  Point p(6, f.zero());
  for (int j = 0; j < 3; ++j) p[j] = x.at(j);
  p[3 + i] = x.at(3);
  return p;
}

namespace {

FMatrix random_symmetric(const FiniteField& f, int n, Rng& rng) {
  FMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b(i, j) = b(j, i) = f.random(rng);
  return b;
}

// Conic matrices through four points, as a basis of the 2-dimensional pencil.
std::vector<FMatrix> conics_through(const FiniteField& f, const std::vector<Point>& pts) {
  const MonomialBasis basis(3, 2);
  FMatrix ev(pts.size(), basis.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto row = basis.evaluate(f, pts[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) ev(i, j) = row[j];
  }
  const FMatrix k = kernel(f, ev);
  std::vector<FMatrix> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Elem> coeffs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) coeffs[r] = k(r, c);
    out.push_back(quadric_matrix(f, basis.from_dense(coeffs)));
  }
  return out;
}

FMatrix combine(const FiniteField& f, const FMatrix& a, const Elem& s, const FMatrix& b, const Elem& t) {
  FMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(f.mul(s, a(i, j)), f.mul(t, b(i, j)));
  return c;
}

std::vector<Point> pick(const std::vector<Point>& pts, std::size_t count, Rng& rng) {
  std::vector<Point> pool = pts, out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = rng.below(pool.size());
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return out;
}

// Smooth member of the pencil through four points, other than `avoid`.
std::optional<FMatrix> random_pencil_member(const FiniteField& f, const std::vector<Point>& four, Rng& rng) {
  const auto pencil = conics_through(f, four);
  if (pencil.size() != 2) return std::nullopt;
  for (int tries = 0; tries < 50; ++tries) {
    const FMatrix c = combine(f, pencil[0], f.random(rng), pencil[1], f.random(rng));
    if (is_smooth_quadric(f, c)) return c;
  }
  return std::nullopt;
}

// Extends a conic in (x0, x1, x2) to a smooth quadric surface in (x0, x1, x2, y).
FMatrix random_extension(const FiniteField& f, const FMatrix& conic, Rng& rng) {
  for (;;) {
    FMatrix b(4, 4, f.zero());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) = conic(i, j);
    for (int i = 0; i < 3; ++i) b(i, 3) = b(3, i) = f.random(rng);
    b(3, 3) = f.random(rng);
    if (is_smooth_quadric(f, b)) return b;
  }
}

Plane tangent_plane(const FiniteField& f, const FMatrix& q, const Point& p2, int i) {
  // Tangent plane of Q_i at the point (p, 0) of Pi_i.
  const Point x{p2[0], p2[1], p2[2], f.zero()};
  FMatrix g(1, 4, f.zero());
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) g(0, j) = f.add(g(0, j), f.mul(x[k], q(k, j)));
  const FMatrix k = kernel(f, g);
  if (k.cols() != 3) throw Error("tangent_plane: quadric is singular at the point");
  FMatrix rows(3, 6, f.zero());
  for (int c = 0; c < 3; ++c) {
    const Point v{k(0, c), k(1, c), k(2, c), k(3, c)};
    const Point e = embed_from_pi(f, v, i);
    for (int j = 0; j < 6; ++j) rows(c, j) = e[j];
  }
  return Plane(f, std::move(rows));
}

}  // namespace

Morin13Result construct_morin13(const FiniteField& f, std::uint64_t seed, int budget) {
  if (f.characteristic() == 2) throw Error("construct_morin13: characteristic 2 is not supported");
  Rng rng(seed);
  for (int attempt = 1; attempt <= budget; ++attempt) {
    const FMatrix c0 = random_symmetric(f, 3, rng);
    if (!is_smooth_quadric(f, c0)) continue;
    const auto on_c0 = common_zeros(f, {c0});
    if (on_c0.size() < 4) continue;
    const auto p01 = pick(on_c0, 4, rng);
    const auto p20 = pick(on_c0, 4, rng);
    const auto c1 = random_pencil_member(f, p01, rng);
    const auto c2 = random_pencil_member(f, p20, rng);
    if (!c1 || !c2) continue;
    const auto p12 = common_zeros(f, {*c1, *c2});
    if (p12.size() != 4) continue;
    // C_0 ^ C_1 and C_2 ^ C_0 must be exactly the chosen points.
    if (common_zeros(f, {c0, *c1}).size() != 4 || common_zeros(f, {c0, *c2}).size() != 4) continue;

    Morin13Result r;
    r.conics = {c0, *c1, *c2};
    r.pair_points = {common_zeros(f, {c0, *c1}), p12, common_zeros(f, {*c2, c0})};
    for (int i = 0; i < 3; ++i) r.quadrics[i] = random_extension(f, r.conics[i], rng);
    r.attempts = attempt;
    r.config.field = f.spec();
    r.config.provenance = {"morin13", seed, "tangent planes to three quadric surfaces through a common plane"};
    for (int i = 0; i < 3; ++i)
      for (const auto& p : r.pair_points[i]) r.config.planes.push_back(tangent_plane(f, r.quadrics[i], p, i));
    r.config.planes.push_back(base_plane(f));
    return r;
  }
  throw BudgetExceeded("construct_morin13: no admissible quadrics found within " + std::to_string(budget) + " attempts");
}

MorinSanity morin_sanity(const FiniteField& f, const Morin13Result& r) {
  MorinSanity s;
  const auto& planes = r.config.planes;
  const Plane lambda = base_plane(f);
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      ++s.pairs;
      const FMatrix x = intersection(f, planes[i], planes[j]);
      if (x.rows() == 0) continue;
      ++s.incident;
      // Does the intersection meet the base plane?
      FMatrix stack(x.rows() + 3, 6);
      for (std::size_t a = 0; a < x.rows(); ++a)
        for (int b = 0; b < 6; ++b) stack(a, b) = x(a, b);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 6; ++b) stack(x.rows() + a, b) = lambda.rows()(a, b);
      const bool meets_base = rank(f, stack) < x.rows() + 3;
      bool on_q = false;
      if (x.rows() == 1) {
        for (int q = 0; q < 3 && !on_q; ++q) {
          bool in_pi = true;
          for (int c = 3; c < 6; ++c)
            if (c != 3 + q && !f.is_zero(x(0, c))) in_pi = false;
          if (!in_pi) continue;
          const Point y{x(0, 0), x(0, 1), x(0, 2), x(0, 3 + q)};
          on_q = f.is_zero(quadric_value(f, r.quadrics[q], y));
        }
      }
      if (meets_base) ++s.meets_base;
      if (on_q) ++s.on_quadric;
      if (meets_base || on_q) ++s.explained;
    }
  return s;
}

const ThreeConicData& three_conic_data() {
  static const ThreeConicData d = [] {
    ThreeConicData t;
    auto e = [](int a, int b, int c) { return Exponent{std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), 0, 0, 0}; };
    t.conics[0] = {{e(2, 0, 0), 1}, {e(1, 0, 1), -7}, {e(0, 1, 1), -12}};
    t.conics[1] = {{e(1, 1, 0), -4}, {e(0, 2, 0), 9}, {e(1, 0, 1), -5}, {e(0, 1, 1), -10}};
    t.conics[2] = {{e(1, 1, 0), 6}, {e(1, 0, 1), -14}, {e(0, 1, 1), 10}, {e(0, 0, 2), 1}};
    t.intersections[0] = {{1, 0, 0}, {1, 10, -7}, {1, 11, -1}, {1, 5, 9}};
    t.intersections[1] = {{0, 1, 0}, {1, 5, 13}, {1, 10, 8}, {1, -1, -6}};
    t.intersections[2] = {{0, 0, 1}, {1, 6, -11}, {1, -11, -13}, {1, -4, 12}};
    return t;
  }();
  return d;
}

namespace {

Point lift(const FiniteField& big, const Point& x) {
  // Prime-field elements share their representation with the extension.
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = big.from_int(x[i].c[0]);
  return y;
}

// Ruling of a line on a smooth quadric surface: 0 for the ruling of the
// reference line, 1 for the other one.
int ruling_of(const FiniteField& f, const Line& reference, const Line& l) {
  const int d = line_meet(f, reference, l);
  if (d == 1) return 0;          // same line
  return d == 0 ? 1 : 0;         // meeting lines lie in opposite rulings
}

}  // namespace

ThreeConicResult construct_3331(std::uint64_t seed) {
  const std::uint32_t p = 29;
  const FiniteField small(p);
  FiniteField big = ext_field(p, 2, seed);
  const auto& data = three_conic_data();

  ThreeConicResult r{{}, big, {MultiPoly(3, 2), MultiPoly(3, 2), MultiPoly(3, 2)}, {}, {}, {}, 0, {}};
  std::array<FMatrix, 3> conic_small;
  for (int i = 0; i < 3; ++i) {
    r.conics[i] = form_from_ints(small, 3, 2, data.conics[i]);
    conic_small[i] = quadric_matrix(small, r.conics[i]);
  }
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    r.intersections[k] = common_zeros(small, {conic_small[i], conic_small[j]});
  }

  // Q_i = C_i(x) + y^2 in Pi_i.
  for (int i = 0; i < 3; ++i) {
    FMatrix b(4, 4, big.zero());
    const FMatrix c = quadric_matrix(big, form_from_ints(big, 3, 2, data.conics[i]));
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb) b(a, bb) = c(a, bb);
    b(3, 3) = big.one();
    if (!is_smooth_quadric(big, b)) throw Error("construct_3331: quadric is singular");
    r.quadrics[i] = b;
  }

  // E[k]: C_i ^ C_j without the coordinate point e_k, lifted to the big field.
  std::array<std::vector<Point>, 3> e;
  for (int k = 0; k < 3; ++k) {
    for (const auto& x : r.intersections[k]) {
      Point ek(3, small.zero());
      ek[k] = small.one();
      if (same_point(small, x, ek)) continue;
      e[k].push_back(lift(big, x));
    }
    if (e[k].size() != 3) throw Error("construct_3331: conic intersection does not have three residual points");
  }

  // Lines through every residual point on both quadrics containing it,
  // with rulings labelled against a reference line per quadric.
  // lines[i][k][m][ruling]: line on Q_i through E[k][m] (k != i).
  std::array<std::array<std::array<std::array<Line, 2>, 3>, 3>, 3> lines{};
  for (int i = 0; i < 3; ++i) {
    std::optional<Line> reference;
    for (int k = 0; k < 3; ++k) {
      if (k == i) continue;
      for (int m = 0; m < 3; ++m) {
        const Point q{e[k][m][0], e[k][m][1], e[k][m][2], big.zero()};
        const auto ls = lines_through(big, r.quadrics[i], q);
        if (!ls) throw Error("construct_3331: ruling lines are not defined over F_{29^2}");
        if (!reference) reference = (*ls)[0];
        for (const auto& l : *ls) lines[i][k][m][ruling_of(big, *reference, l)] = l;
      }
    }
  }

  std::array<int, 3> perm1{0, 1, 2}, perm2{0, 1, 2};
  const std::array<int, 3> identity{0, 1, 2};
  int tried = 0;
  do {
    do {
      for (int bits = 0; bits < 8; ++bits) {
        ++tried;
        const std::array<const std::array<int, 3>*, 3> label{&identity, &perm1, &perm2};
        // q^k_m = E[k][label_k[m]]
        auto qpt = [&](int k, int m) { return (*label[k])[m]; };
        // p^i_m: the line on Q_i through q^k_m in ruling b_i meets the line through q^j_m in ruling 1 - b_i,
        // where j < k are the other two indices.
        std::array<std::array<Point, 3>, 3> pp;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          const int j = (i + 1) % 3 < (i + 2) % 3 ? (i + 1) % 3 : (i + 2) % 3;
          const int k = 3 - i - j;
          const int b = (bits >> i) & 1;
          for (int m = 0; m < 3; ++m) {
            const Line& lk = lines[i][k][qpt(k, m)][b];
            const Line& lj = lines[i][j][qpt(j, m)][1 - b];
            if (line_meet(big, lk, lj) != 0) {
              ok = false;
              break;
            }
            pp[i][m] = embed_from_pi(big, line_intersection(big, lk, lj), i);
          }
        }
        if (!ok) continue;
        TenConfig cfg{big.spec(), {}, {"3331", seed, "three conics over F_29 and ruling lines on three quadric surfaces"}};
        std::vector<Point> qs;
        for (int k = 0; k < 3; ++k) {
          const int i = (k + 1) % 3, j = (k + 2) % 3;
          for (int m = 0; m < 3; ++m) {
            const Point& q3 = e[k][qpt(k, m)];
            const Point q{q3[0], q3[1], q3[2], big.zero(), big.zero(), big.zero()};
            qs.push_back(q);
            FMatrix rows(3, 6);
            for (int c = 0; c < 6; ++c) {
              rows(0, c) = pp[i][m][c];
              rows(1, c) = pp[j][m][c];
              rows(2, c) = q[c];
            }
            if (rank(big, rows) < 3) {
              ok = false;
              break;
            }
            cfg.planes.emplace_back(big, std::move(rows));
          }
          if (!ok) break;
        }
        if (!ok) continue;
        cfg.planes.push_back(base_plane(big));
        const auto rep = verify(big, cfg);
        if (!(rep.all_incident && rep.points_distinct && rep.lagrangian_spanning)) continue;
        r.config = std::move(cfg);
        r.base_points = std::move(qs);
        r.matchings_tried = tried;
        std::ostringstream os;
        os << "labels q^1=(" << perm1[0] << perm1[1] << perm1[2] << ") q^2=(" << perm2[0] << perm2[1] << perm2[2]
           << ") rulings=" << bits;
        r.matching = os.str();
        return r;
      }
    } while (std::next_permutation(perm2.begin(), perm2.end()));
  } while (std::next_permutation(perm1.begin(), perm1.end()));
  throw Error("construct_3331: no point labelling and ruling choice gives a verified ten");
}

}  // namespace lagten
