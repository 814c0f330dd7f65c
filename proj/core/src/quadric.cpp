#include "lagten/quadric.hpp"

#include "lagten/error.hpp"
#include "lagten/projective.hpp"

namespace lagten {

FMatrix quadric_matrix(const FiniteField& f, const MultiPoly& q) {
  if (q.degree() != 2) throw Error("quadric_matrix: form is not quadratic");
  if (f.characteristic() == 2) throw Error("quadric_matrix: characteristic 2 is not supported");
  const int n = q.nvars();
  const Elem half = f.inv(f.from_int(2));
  FMatrix b(n, n, f.zero());
  for (const auto& [e, c] : q.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < n; ++v) {
      if (e[v] == 2) i = j = v;
      if (e[v] == 1) (i < 0 ? i : j) = v;
    }
    if (i == j) {
      b(i, i) = c;
    } else {
      b(i, j) = f.mul(c, half);
      b(j, i) = b(i, j);
    }
  }
  return b;
}

MultiPoly quadric_form(const FiniteField& f, const FMatrix& b) {
  const int n = static_cast<int>(b.rows());
  MultiPoly q(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Exponent e{};
      ++e[i];
      ++e[j];
      q.set(e, i == j ? b(i, i) : f.add(b(i, j), b(j, i)));
    }
  return q;
}

Elem bilinear(const FiniteField& f, const FMatrix& b, std::span<const Elem> x, std::span<const Elem> y) {
  Elem s = f.zero();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (f.is_zero(x[i])) continue;
    Elem row = f.zero();
    for (std::size_t j = 0; j < b.cols(); ++j) row = f.add(row, f.mul(b(i, j), y[j]));
    s = f.add(s, f.mul(x[i], row));
  }
  return s;
}

Elem quadric_value(const FiniteField& f, const FMatrix& b, std::span<const Elem> x) { return bilinear(f, b, x, x); }

bool is_smooth_quadric(const FiniteField& f, const FMatrix& b) { return !f.is_zero(det(f, b)); }

std::vector<Point> common_zeros(const FiniteField& f, const std::vector<FMatrix>& quadrics) {
  if (quadrics.empty()) throw Error("common_zeros: no quadrics given");
  std::vector<Point> out;
  for_each_projective_point(f, static_cast<int>(quadrics[0].rows()), [&](const Point& x) {
    for (const auto& q : quadrics)
      if (!f.is_zero(quadric_value(f, q, x))) return true;
    out.push_back(x);
    return true;
  });
  return out;
}

std::optional<std::array<Line, 2>> lines_through(const FiniteField& f, const FMatrix& b, const Point& q) {
  if (b.rows() != 4) throw Error("lines_through: expected a quadric surface in P^3");
  if (!f.is_zero(quadric_value(f, b, q))) throw Error("lines_through: point is not on the quadric");
  // Tangent plane {z : q^T B z = 0}; pick a basis q, u, w of it.
  FMatrix g(1, 4);
  for (int j = 0; j < 4; ++j) {
    g(0, j) = f.zero();
    for (int i = 0; i < 4; ++i) g(0, j) = f.add(g(0, j), f.mul(q[i], b(i, j)));
  }
  const FMatrix k = kernel(f, g);  // 4 x 3, contains q
  std::vector<Point> cand;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Point v(4);
    for (int r = 0; r < 4; ++r) v[r] = k(r, c);
    cand.push_back(v);
  }
  // Complete q to a basis of the tangent space.
  std::vector<Point> basis{q};
  for (const auto& v : cand) {
    FMatrix m(basis.size() + 1, 4);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = basis[i][j];
    for (int j = 0; j < 4; ++j) m(basis.size(), j) = v[j];
    if (rank(f, m) == basis.size() + 1) basis.push_back(v);
    if (basis.size() == 3) break;
  }
  if (basis.size() != 3) throw Error("lines_through: quadric is singular at the point");
  const Point& u = basis[1];
  const Point& w = basis[2];
  // Q(s u + t w) = a s^2 + 2 h s t + c t^2
  const Elem a = quadric_value(f, b, u);
  const Elem h = bilinear(f, b, u, w);
  const Elem c = quadric_value(f, b, w);
  auto combo = [&](const Elem& s, const Elem& t) {
    Point d(4);
    for (int j = 0; j < 4; ++j) d[j] = f.add(f.mul(s, u[j]), f.mul(t, w[j]));
    return d;
  };
  const Elem disc = f.sub(f.mul(h, h), f.mul(a, c));
  if (f.is_zero(disc)) throw Error("lines_through: quadric is singular (tangent cone is a double line)");
  const auto root = f.sqrt(disc);
  if (!root) return std::nullopt;
  std::array<Line, 2> out;
  if (!f.is_zero(a)) {
    // s/t = (-h +- root) / a
    const Elem ia = f.inv(a);
    out[0] = {q, combo(f.mul(f.add(f.neg(h), *root), ia), f.one())};
    out[1] = {q, combo(f.mul(f.sub(f.neg(h), *root), ia), f.one())};
  } else if (!f.is_zero(c)) {
    const Elem ic = f.inv(c);
    out[0] = {q, combo(f.one(), f.mul(f.add(f.neg(h), *root), ic))};
    out[1] = {q, combo(f.one(), f.mul(f.sub(f.neg(h), *root), ic))};
  } else {
    // a = c = 0: the lines are s = 0 and t = 0.
    out[0] = {q, u};
    out[1] = {q, w};
  }
  return out;
}

namespace {

std::size_t span_rank(const FiniteField& f, const std::vector<const Point*>& pts) {
  FMatrix m(pts.size(), pts[0]->size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[i]->size(); ++j) m(i, j) = (*pts[i])[j];
  return rank(f, m);
}

}  // namespace

int line_meet(const FiniteField& f, const Line& l, const Line& m) {
  return 3 - static_cast<int>(span_rank(f, {&l.a, &l.b, &m.a, &m.b}));
}

Point line_intersection(const FiniteField& f, const Line& l, const Line& m) {
  // s l.a + t l.b = u m.a + v m.b
  const std::size_t n = l.a.size();
  FMatrix a(n, 4);
  for (std::size_t j = 0; j < n; ++j) {
    a(j, 0) = l.a[j];
    a(j, 1) = l.b[j];
    a(j, 2) = f.neg(m.a[j]);
    a(j, 3) = f.neg(m.b[j]);
  }
  const FMatrix k = kernel(f, a);
  if (k.cols() != 1) throw Error("line_intersection: lines do not meet in a single point");
  Point p(n);
  for (std::size_t j = 0; j < n; ++j) p[j] = f.add(f.mul(k(0, 0), l.a[j]), f.mul(k(1, 0), l.b[j]));
  return normalize_point(f, p);
}

}  // namespace lagten
