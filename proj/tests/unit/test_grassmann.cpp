#include <gtest/gtest.h>

#include "lagten/grassmann.hpp"
#include "oracles.hpp"

using namespace lagten;

namespace {

FMatrix stack(const Plane& p, const Plane& q) {
  FMatrix m(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      m(i, j) = p.rows()(i, j);
      m(3 + i, j) = q.rows()(i, j);
    }
  return m;
}

// A plane meeting p in at least a point: one row from p plus two random rows.
Plane meeting_plane(const FiniteField& f, const Plane& p, Rng& rng) {
  for (;;) {
    FMatrix rows(3, 6);
    const Point c = random_point(f, 3, rng);
    for (int j = 0; j < 6; ++j) {
      rows(0, j) = f.zero();
      for (int i = 0; i < 3; ++i) rows(0, j) = f.add(rows(0, j), f.mul(c[i], p.rows()(i, j)));
      rows(1, j) = f.random(rng);
      rows(2, j) = f.random(rng);
    }
    if (rank(f, rows) == 3) return Plane(f, rows);
  }
}

}  // namespace

TEST(Grassmann, PluckerEntriesAreMinors) {
  const FiniteField f(29);
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Plane p = random_plane(f, rng);
    const auto& tr = wedge3_triples();
    for (int k = 0; k < kWedge3; ++k) {
      const std::vector<std::size_t> rows{0, 1, 2};
      const std::vector<std::size_t> cols{std::size_t(tr[k][0]), std::size_t(tr[k][1]), std::size_t(tr[k][2])};
      EXPECT_EQ(p.plucker()[k], oracle::leibniz_det(f, p.rows().submatrix(rows, cols)));
    }
  }
}

TEST(Grassmann, PairingIsStackedDeterminant) {
  const FiniteField f = ext_field(7, 2, 1);
  Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    const Plane p = random_plane(f, rng);
    const Plane q = t % 2 ? meeting_plane(f, p, rng) : random_plane(f, rng);
    EXPECT_EQ(pairing(f, p.plucker(), q.plucker()), det(f, stack(p, q)));
    EXPECT_EQ(pairing(f, p.plucker(), q.plucker()), f.neg(pairing(f, q.plucker(), p.plucker())));
    EXPECT_EQ(meet(f, p, q) >= 0, f.is_zero(pairing(f, p.plucker(), q.plucker())));
  }
}

TEST(Grassmann, MeetAndIntersection) {
  const FiniteField f(11);
  Rng rng(3);
  const Plane a = coordinate_plane(f, 0, 1, 2);
  EXPECT_EQ(meet(f, a, coordinate_plane(f, 3, 4, 5)), -1);
  EXPECT_EQ(meet(f, a, coordinate_plane(f, 2, 3, 4)), 0);
  EXPECT_EQ(meet(f, a, coordinate_plane(f, 1, 2, 5)), 1);
  EXPECT_EQ(meet(f, a, a), 2);
  for (int t = 0; t < 20; ++t) {
    const Plane p = random_plane(f, rng);
    const Plane q = meeting_plane(f, p, rng);
    const FMatrix x = intersection(f, p, q);
    EXPECT_EQ(static_cast<int>(x.rows()) - 1, meet(f, p, q));
    for (std::size_t r = 0; r < x.rows(); ++r) {
      FMatrix pr = p.rows(), qr = q.rows();
      pr.append_row(x.row(r));
      qr.append_row(x.row(r));
      EXPECT_EQ(rank(f, pr), 3u);
      EXPECT_EQ(rank(f, qr), 3u);
    }
  }
}

TEST(Grassmann, WedgeWithBasisPair) {
  const FiniteField f(13);
  Rng rng(4);
  const Point v = random_point(f, 6, rng);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Vec ea(6, f.zero()), eb(6, f.zero());
      ea[a] = f.one();
      eb[b] = f.one();
      EXPECT_EQ(wedge_with_basis_pair(f, v, a, b), wedge3(f, v, ea, eb));
    }
}

TEST(Grassmann, Decomposability) {
  const FiniteField f(7);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const Plane p = random_plane(f, rng);
    const auto back = is_decomposable(f, p.plucker());
    ASSERT_TRUE(back.has_value());
    EXPECT_TRUE(back->same_as(f, p));
  }
  const Plane a = coordinate_plane(f, 0, 1, 2), b = coordinate_plane(f, 3, 4, 5);
  Vec sum(kWedge3);
  for (int k = 0; k < kWedge3; ++k) sum[k] = f.add(a.plucker()[k], b.plucker()[k]);
  EXPECT_FALSE(is_decomposable(f, sum).has_value());
}

TEST(Grassmann, ChartsAndIncidence) {
  const FiniteField f(101);
  Rng rng(6);
  const Chart c;
  auto transverse = [&](const Plane& p) {
    const std::vector<std::size_t> r{0, 1, 2}, k{0, 1, 2};
    return !f.is_zero(det(f, p.rows().submatrix(r, k)));
  };
  for (int t = 0; t < 30; ++t) {
    const Plane p = random_plane(f, rng);
    const Plane q = t % 2 ? meeting_plane(f, p, rng) : random_plane(f, rng);
    if (!transverse(p) || !transverse(q)) continue;
    const ChartMatrix cp = chart_matrix(f, p, c), cq = chart_matrix(f, q, c);
    EXPECT_TRUE(plane_from_chart(f, cp).same_as(f, p));
    FMatrix diff(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) diff(i, j) = f.sub(cp.a(i, j), cq.a(i, j));
    EXPECT_EQ(f.is_zero(det(f, diff)), meet(f, p, q) >= 0);
  }
  try {
    chart_matrix(f, coordinate_plane(f, 0, 1, 3), c);
    FAIL() << "expected NotTransverse";
  } catch (const NotTransverse& e) {
    EXPECT_EQ(e.rank_defect(), 1);
  }
}

TEST(Grassmann, DualityPreservesIncidence) {
  const FiniteField f(11);
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Plane p = random_plane(f, rng);
    const Plane q = t % 2 ? meeting_plane(f, p, rng) : random_plane(f, rng);
    const Plane dp = dual_plane(f, p), dq = dual_plane(f, q);
    EXPECT_TRUE(is_zero_matrix(f, multiply(f, p.rows(), dp.rows().transposed())));
    EXPECT_EQ(meet(f, dp, dq), meet(f, p, q));
  }
}

TEST(Grassmann, PairingUnderLinearMap) {
  const FiniteField f(31);
  Rng rng(8);
  FMatrix g(6, 6);
  do {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = f.random(rng);
  } while (f.is_zero(det(f, g)));
  const Plane p = random_plane(f, rng), q = random_plane(f, rng);
  const Plane gp = transform(f, g, p), gq = transform(f, g, q);
  EXPECT_EQ(pairing(f, gp.plucker(), gq.plucker()), f.mul(det(f, g), pairing(f, p.plucker(), q.plucker())));
}

TEST(Grassmann, BitangentPencilSatisfiesPluckerRelation) {
  const FiniteField f(101);
  Rng rng(9);
  std::array<FMatrix, 4> web;
  for (auto& a : web) {
    a = FMatrix(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) a(i, j) = a(j, i) = f.random(rng);
  }
  for (int t = 0; t < 10; ++t) {
    const Point v = random_point(f, 4, rng), w = random_point(f, 4, rng);
    const Vec m = bitangent_pencil(f, web, v, w);
    // p01 p23 - p02 p13 + p03 p12 = 0
    const Elem rel = f.add(f.sub(f.mul(m[0], m[5]), f.mul(m[1], m[4])), f.mul(m[2], m[3]));
    EXPECT_TRUE(f.is_zero(rel));
  }
}
