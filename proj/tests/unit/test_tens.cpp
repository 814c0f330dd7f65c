#include <gtest/gtest.h>

#include "lagten/quadric.hpp"
#include "lagten/tens.hpp"
#include "oracles.hpp"

using namespace lagten;

namespace {

// Literal published data for the three-conic ten over F_29.
MultiPoly literal_conic(const FiniteField& f, int i) {
  switch (i) {
    case 0: return form_from_ints(f, 3, 2, {{{2, 0, 0}, 1}, {{1, 0, 1}, -7}, {{0, 1, 1}, -12}});
    case 1:
      return form_from_ints(f, 3, 2, {{{1, 1, 0}, -4}, {{0, 2, 0}, 9}, {{1, 0, 1}, -5}, {{0, 1, 1}, -10}});
    default:
      return form_from_ints(f, 3, 2, {{{1, 1, 0}, 6}, {{1, 0, 1}, -14}, {{0, 1, 1}, 10}, {{0, 0, 2}, 1}});
  }
}

// Index k holds C_i ^ C_j with {i, j, k} = {0, 1, 2}.
const std::array<std::vector<std::array<int, 3>>, 3> kLiteralPoints{{
    {{1, 0, 0}, {1, 10, -7}, {1, 11, -1}, {1, 5, 9}},
    {{0, 1, 0}, {1, 5, 13}, {1, 10, 8}, {1, -1, -6}},
    {{0, 0, 1}, {1, 6, -11}, {1, -11, -13}, {1, -4, 12}},
}};

Point to_point(const FiniteField& f, const std::array<int, 3>& v) {
  return {f.from_int(v[0]), f.from_int(v[1]), f.from_int(v[2])};
}

// Linear term of t -> det(d + t e), recovered from four values.
Elem linear_term(const FiniteField& f, const FMatrix& d, const FMatrix& e) {
  std::array<Elem, 4> v;
  for (int t = 0; t < 4; ++t) {
    FMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m(r, c) = f.add(d(r, c), f.mul(f.from_int(t), e(r, c)));
    v[t] = oracle::leibniz_det(f, m);
  }
  // Newton forward differences: c1 = D1 - D2/2 + D3/3 at t = 0.
  const Elem d1 = f.sub(v[1], v[0]);
  const Elem d2 = f.add(f.sub(v[2], f.mul(f.from_int(2), v[1])), v[0]);
  const Elem d3 = f.sub(f.add(f.sub(v[3], f.mul(f.from_int(3), v[2])), f.mul(f.from_int(3), v[1])), v[0]);
  return f.add(f.sub(d1, f.div(d2, f.from_int(2))), f.div(d3, f.from_int(3)));
}

}  // namespace

TEST(ThreeConic, DataMatchesPublishedValues) {
  const FiniteField f(29);
  const auto& data = three_conic_data();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(form_from_ints(f, 3, 2, data.conics[i]), literal_conic(f, i));
    ASSERT_EQ(data.intersections[i].size(), 4u);
    for (int m = 0; m < 4; ++m)
      for (int c = 0; c < 3; ++c) EXPECT_EQ(data.intersections[i][m][c], kLiteralPoints[i][m][c]);
  }
}

TEST(ThreeConic, PointsLieOnTheirConics) {
  const FiniteField f(29);
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    const auto zeros = common_zeros(f, {quadric_matrix(f, literal_conic(f, i)), quadric_matrix(f, literal_conic(f, j))});
    EXPECT_EQ(zeros.size(), 4u);
    for (const auto& v : kLiteralPoints[k]) {
      const Point x = to_point(f, v);
      EXPECT_TRUE(f.is_zero(evaluate(f, literal_conic(f, i), x)));
      EXPECT_TRUE(f.is_zero(evaluate(f, literal_conic(f, j), x)));
    }
  }
}

TEST(ThreeConic, ConstructionVerifies) {
  const ThreeConicResult r = construct_3331();
  EXPECT_EQ(r.field.order(), 841u);
  ASSERT_EQ(r.config.planes.size(), 10u);
  const FiniteField f29(29);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(r.conics[i], literal_conic(f29, i));
  const IncidenceReport inc = verify(r.field, r.config);
  EXPECT_EQ(inc.pairs, 45);
  EXPECT_EQ(inc.incident_pairs, 45);
  EXPECT_EQ(inc.distinct_points, 45);
  EXPECT_TRUE(inc.points_distinct);
  EXPECT_TRUE(inc.planes_distinct);
  EXPECT_EQ(inc.span_dim, 10);
  EXPECT_TRUE(inc.isotropic);
  EXPECT_TRUE(inc.lagrangian_spanning);
  // Independent incidence: every stacked 6 x 6 matrix is singular.
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) {
      FMatrix m = r.config.planes[i].rows();
      for (int t = 0; t < 3; ++t) m.append_row(r.config.planes[j].rows().row(t));
      EXPECT_EQ(rank(r.field, m), 5u) << i << "," << j;
    }
}

TEST(ThreeConic, VerifyIsCoordinateInvariant) {
  const ThreeConicResult r = construct_3331();
  const FiniteField& f = r.field;
  Rng rng(11);
  FMatrix g(6, 6);
  do {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = f.random(rng);
  } while (f.is_zero(det(f, g)));
  TenConfig moved = r.config;
  for (auto& p : moved.planes) p = transform(f, g, p);
  const IncidenceReport a = verify(f, r.config), b = verify(f, moved);
  EXPECT_EQ(a.dims, b.dims);
  EXPECT_EQ(a.span_dim, b.span_dim);
  EXPECT_EQ(a.isotropic, b.isotropic);
  EXPECT_EQ(a.distinct_points, b.distinct_points);
}

TEST(ThreeConic, DualTenVerifies) {
  const ThreeConicResult r = construct_3331();
  const TenConfig d = dualize(r.field, r.config);
  const IncidenceReport inc = verify(r.field, d);
  EXPECT_EQ(inc.incident_pairs, 45);
  EXPECT_TRUE(inc.lagrangian_spanning);
  EXPECT_NE(d.provenance.recipe.find("dual"), std::string::npos);
}

TEST(ThreeConic, TangentRankMatchesDirectDerivative) {
  const ThreeConicResult r = construct_3331();
  const FiniteField& f = r.field;
  const auto charts = admissible_charts(f, r.config);
  ASSERT_FALSE(charts.empty());
  const TangentRank tr = tangent_rank(f, r.config, charts.front());
  EXPECT_EQ(tr.equations, 45u);
  EXPECT_EQ(tr.unknowns, 90u);

  std::vector<FMatrix> a;
  for (const auto& p : r.config.planes) a.push_back(chart_matrix(f, p, charts.front()).a);
  FMatrix sys(0, 90);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) {
      FMatrix d(3, 3);
      for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) d(u, v) = f.sub(a[i](u, v), a[j](u, v));
      std::vector<Elem> row(90, f.zero());
      for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
          FMatrix e(3, 3, f.zero());
          e(u, v) = f.one();
          const Elem c = linear_term(f, d, e);
          row[9 * i + 3 * u + v] = c;
          row[9 * j + 3 * u + v] = f.neg(c);
        }
      sys.append_row(row);
    }
  EXPECT_EQ(tr.rank, rank(f, sys));
  EXPECT_EQ(tr.tangent_dim, 90 - tr.rank);
}

TEST(Morin, ThirteenPlanesOverF11) {
  const FiniteField f(11);
  const Morin13Result r = construct_morin13(f, 1);
  ASSERT_EQ(r.config.planes.size(), 13u);
  const IncidenceReport inc = verify(f, r.config);
  EXPECT_EQ(inc.incident_pairs, 78);
  EXPECT_EQ(inc.span_dim, 10);
  EXPECT_TRUE(inc.isotropic);
  const MorinSanity s = morin_sanity(f, r);
  EXPECT_EQ(s.pairs, 78);
  EXPECT_EQ(s.explained, 78);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(is_smooth_quadric(f, r.quadrics[i]));
}

TEST(Morin, IndependentPlanesSpanTen) {
  const FiniteField f(5);
  const TenConfig ten = independent_planes(f, construct_morin13(f, 1).config);
  ASSERT_EQ(ten.planes.size(), 10u);
  const IncidenceReport inc = verify(f, ten);
  EXPECT_TRUE(inc.all_incident);
  EXPECT_EQ(inc.span_dim, 10);
}

TEST(Morin, SeedDeterminesConstruction) {
  const FiniteField f(11);
  const auto a = construct_morin13(f, 5), b = construct_morin13(f, 5);
  for (std::size_t i = 0; i < a.config.planes.size(); ++i)
    EXPECT_EQ(a.config.planes[i].rows(), b.config.planes[i].rows());
}
