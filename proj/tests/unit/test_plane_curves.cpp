#include <gtest/gtest.h>

#include "lagten/plane_curves.hpp"
#include "oracles.hpp"

using namespace lagten;

namespace {

const NodeSelection& selection() {
  static const NodeSelection sel = select_winger_prime();
  return sel;
}

MultPointSet with_mult(const MultPointSet& s, int m) {
  MultPointSet out = s;
  for (auto& p : out.points) p.mult = m;
  return out;
}

// Every partial derivative of order < m vanishes at p.
bool has_multiplicity(const FiniteField& f, const MultiPoly& g, const Point& p, int m) {
  for (int a = 0; a < m; ++a)
    for (int b = 0; a + b < m; ++b)
      for (int c = 0; a + b + c < m; ++c)
        if (!f.is_zero(oracle::partial_at(f, g, {a, b, c}, p))) return false;
  return true;
}

}  // namespace

TEST(PlaneCurves, WingerCoefficients) {
  const FiniteField f(101);
  const MultiPoly w = winger_sextic(f);
  EXPECT_EQ(w.coefficient({6, 0, 0}), f.from_int(32));
  EXPECT_EQ(w.coefficient({4, 1, 1}), f.from_int(-120));
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(evaluate(f, w, Point{f.one(), f.zero(), f.zero()}), f.from_int(32));
}

TEST(PlaneCurves, LinesThroughPoint) {
  const FiniteField f(7);
  MultPointSet s{f.spec(), {{{f.one(), f.from_int(2), f.from_int(3)}, 1}}};
  EXPECT_EQ(forms_with_mult(f, 1, s).dimension(), 2u);
  s.points[0].mult = 2;
  EXPECT_EQ(forms_with_mult(f, 1, s).dimension(), 0u);
  EXPECT_EQ(forms_with_mult(f, 2, s).dimension(), 3u);
  EXPECT_EQ(expected_dimension(2, s), 3u);
}

TEST(PlaneCurves, WingerNodes) {
  const auto& sel = selection();
  EXPECT_EQ(sel.prime, 31u);
  ASSERT_EQ(sel.nodes.points.size(), 10u);
  const FiniteField f(sel.nodes.field);
  // Oracle: each node kills f and its three partials, checked by the coefficient formula.
  const MultiPoly w = winger_sextic(f);
  for (const auto& n : sel.nodes.points) EXPECT_TRUE(has_multiplicity(f, w, n.point, 2));
  // Exhaustive count over F_31 with the oracle.
  int count = 0;
  for_each_projective_point(f, 3, [&](const Point& x) {
    count += has_multiplicity(f, w, x, 2);
    return true;
  });
  EXPECT_EQ(count, 10);
}

TEST(PlaneCurves, SystemsThroughNodes) {
  const auto& sel = selection();
  const FiniteField f(sel.nodes.field);
  const FormSystem sept = forms_with_mult(f, 7, with_mult(sel.nodes, 2));
  EXPECT_EQ(sept.dimension(), 6u);
  EXPECT_EQ(expected_dimension(7, with_mult(sel.nodes, 2)), 6u);
  EXPECT_EQ(sept.condition_rank, 30u);
  for (const auto& g : sept.basis)
    for (const auto& n : sel.nodes.points) EXPECT_TRUE(has_multiplicity(f, g, n.point, 2));
  const FormSystem dec = forms_with_mult(f, 10, with_mult(sel.nodes, 3));
  EXPECT_EQ(dec.dimension(), 6u);
  for (const auto& g : dec.basis)
    for (const auto& n : sel.nodes.points) EXPECT_TRUE(has_multiplicity(f, g, n.point, 3));
  // The Winger sextic is double at every node.
  EXPECT_EQ(forms_with_mult(f, 6, with_mult(sel.nodes, 2)).dimension(), 1u);
}

TEST(PlaneCurves, CobleTensVerify) {
  const auto& sel = selection();
  const FiniteField f(sel.nodes.field);
  for (const auto kind : {CobleKind::Septic, CobleKind::Decimic}) {
    const CobleTen t = coble_ten(f, sel.nodes, kind);
    EXPECT_EQ(t.first_dims, std::vector<std::size_t>(10, 1));
    EXPECT_EQ(t.second_dims, std::vector<std::size_t>(10, 3));
    const IncidenceReport inc = verify(f, t.config);
    EXPECT_EQ(inc.incident_pairs, 45);
    EXPECT_TRUE(inc.lagrangian_spanning);
  }
}

TEST(PlaneCurves, CobleTenIsBasisIndependent) {
  const auto& sel = selection();
  const FiniteField f(sel.nodes.field);
  Rng rng(12);
  const CobleTen a = coble_ten(f, sel.nodes, CobleKind::Septic);
  const CobleTen b = coble_ten(f, sel.nodes, CobleKind::Septic, &rng);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_TRUE(a.config.planes[i].same_as(f, b.config.planes[i]));
}

TEST(PlaneCurves, CobleRejectsWrongNodeCount) {
  const auto& sel = selection();
  const FiniteField f(sel.nodes.field);
  MultPointSet nine = sel.nodes;
  nine.points.pop_back();
  EXPECT_THROW(coble_ten(f, nine, CobleKind::Septic), DimensionMismatch);
}
