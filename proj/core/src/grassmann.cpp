#include "lagten/grassmann.hpp"

#include <algorithm>

#include "lagten/error.hpp"

namespace lagten {

const std::array<std::array<int, 3>, kWedge3>& wedge3_triples() {
  static const auto table = [] {
    std::array<std::array<int, 3>, kWedge3> t{};
    int k = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) t[k++] = {a, b, c};
    return t;
  }();
  return table;
}

const std::array<std::array<int, 4>, kWedge4>& wedge4_quads() {
  static const auto table = [] {
    std::array<std::array<int, 4>, kWedge4> t{};
    int k = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d) t[k++] = {a, b, c, d};
    return t;
  }();
  return table;
}

int triple_index(int a, int b, int c) {
  const auto& t = wedge3_triples();
  for (int i = 0; i < kWedge3; ++i)
    if (t[i][0] == a && t[i][1] == b && t[i][2] == c) return i;
  throw Error("triple_index: indices must be strictly increasing in 0..5");
}

namespace {

int quad_index(const std::array<int, 4>& q) {
  const auto& t = wedge4_quads();
  for (int i = 0; i < kWedge4; ++i)
    if (t[i] == q) return i;
  throw Error("quad_index: invalid index set");
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

// For each triple T and index i not in T: position of {i} u T in wedge^4 and
// the sign of e_i ^ e_T.
struct Wedge14Entry {
  int quad = -1;
  int sign = 0;
};

const std::array<std::array<Wedge14Entry, kWedge3>, 6>& wedge14_table() {
  static const auto table = [] {
    std::array<std::array<Wedge14Entry, kWedge3>, 6> t{};
    const auto& tr = wedge3_triples();
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < kWedge3; ++k) {
        const auto& T = tr[k];
        if (T[0] == i || T[1] == i || T[2] == i) continue;
        std::array<int, 4> q{i, T[0], T[1], T[2]};
        std::sort(q.begin(), q.end());
        int below = 0;
        for (int x : T)
          if (x < i) ++below;
        t[i][k] = {quad_index(q), below % 2 ? -1 : 1};
      }
    return t;
  }();
  return table;
}

}  // namespace

int complement_sign(int triple) {
  static const auto signs = [] {
    std::array<int, kWedge3> s{};
    const auto& tr = wedge3_triples();
    for (int k = 0; k < kWedge3; ++k) {
      std::vector<int> p(tr[k].begin(), tr[k].end());
      for (int x = 0; x < 6; ++x)
        if (std::find(tr[k].begin(), tr[k].end(), x) == tr[k].end()) p.push_back(x);
      s[k] = permutation_sign(p);
    }
    return s;
  }();
  return signs.at(triple);
}

namespace {

int complement_index(int k) {
  const auto& T = wedge3_triples()[k];
  std::array<int, 3> c{};
  int n = 0;
  for (int x = 0; x < 6; ++x)
    if (x != T[0] && x != T[1] && x != T[2]) c[n++] = x;
  return triple_index(c[0], c[1], c[2]);
}

Elem minor3(const FiniteField& f, std::span<const Elem> u, std::span<const Elem> v, std::span<const Elem> w,
            int a, int b, int c) {
  // det [[u_a, u_b, u_c], [v_a, ...], [w_a, ...]]
  auto t1 = f.mul(u[a], f.sub(f.mul(v[b], w[c]), f.mul(v[c], w[b])));
  auto t2 = f.mul(u[b], f.sub(f.mul(v[a], w[c]), f.mul(v[c], w[a])));
  auto t3 = f.mul(u[c], f.sub(f.mul(v[a], w[b]), f.mul(v[b], w[a])));
  return f.add(f.sub(t1, t2), t3);
}

}  // namespace

Vec wedge3(const FiniteField& f, std::span<const Elem> u, std::span<const Elem> v, std::span<const Elem> w) {
  if (u.size() != 6 || v.size() != 6 || w.size() != 6) throw Error("wedge3: vectors must have length 6");
  Vec out(kWedge3);
  const auto& tr = wedge3_triples();
  for (int k = 0; k < kWedge3; ++k) out[k] = minor3(f, u, v, w, tr[k][0], tr[k][1], tr[k][2]);
  return out;
}

Vec wedge_with_basis_pair(const FiniteField& f, std::span<const Elem> v, int a, int b) {
  // v ^ e_a ^ e_b = sum_i v_i e_i ^ e_a ^ e_b
  Vec out(kWedge3, f.zero());
  for (int i = 0; i < 6; ++i) {
    if (i == a || i == b || f.is_zero(v[i])) continue;
    std::vector<int> p{i, a, b};
    std::array<int, 3> s{i, a, b};
    std::sort(s.begin(), s.end());
    const int k = triple_index(s[0], s[1], s[2]);
    out[k] = permutation_sign(p) > 0 ? v[i] : f.neg(v[i]);
  }
  return out;
}

Vec wedge_vector_trivector(const FiniteField& f, std::span<const Elem> v, std::span<const Elem> omega) {
  Vec out(kWedge4, f.zero());
  const auto& tab = wedge14_table();
  for (int i = 0; i < 6; ++i) {
    if (f.is_zero(v[i])) continue;
    for (int k = 0; k < kWedge3; ++k) {
      const auto& e = tab[i][k];
      if (e.sign == 0 || f.is_zero(omega[k])) continue;
      const Elem t = f.mul(v[i], omega[k]);
      out[e.quad] = e.sign > 0 ? f.add(out[e.quad], t) : f.sub(out[e.quad], t);
    }
  }
  return out;
}

Elem pairing(const FiniteField& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != kWedge3 || v.size() != kWedge3) throw Error("pairing: vectors must have length 20");
  Elem s = f.zero();
  for (int k = 0; k < kWedge3; ++k) {
    const Elem t = f.mul(u[k], v[complement_index(k)]);
    s = complement_sign(k) > 0 ? f.add(s, t) : f.sub(s, t);
  }
  return s;
}

Plane::Plane(const FiniteField& f, FMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != 3 || rows_.cols() != 6) throw Error("Plane: basis must be a 3 x 6 matrix");
  plucker_ = wedge3(f, rows_.row(0), rows_.row(1), rows_.row(2));
  if (std::all_of(plucker_.begin(), plucker_.end(), [&](const Elem& x) { return f.is_zero(x); }))
    throw Error("Plane: rows are linearly dependent");
}

FMatrix Plane::canonical(const FiniteField& f) const {
  FMatrix m = rows_;
  rref(f, m);
  return m;
}

bool Plane::same_as(const FiniteField& f, const Plane& other) const {
  return canonical(f) == other.canonical(f);
}

Plane plane_from_points(const FiniteField& f, const Point& a, const Point& b, const Point& c) {
  FMatrix m(3, 6);
  for (int j = 0; j < 6; ++j) {
    m(0, j) = a.at(j);
    m(1, j) = b.at(j);
    m(2, j) = c.at(j);
  }
  return Plane(f, std::move(m));
}

Plane coordinate_plane(const FiniteField& f, int a, int b, int c) {
  FMatrix m(3, 6, f.zero());
  m(0, a) = f.one();
  m(1, b) = f.one();
  m(2, c) = f.one();
  return Plane(f, std::move(m));
}

Plane random_plane(const FiniteField& f, Rng& rng) {
  for (;;) {
    FMatrix m(3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = f.random(rng);
    if (rank(f, m) == 3) return Plane(f, std::move(m));
  }
}

FMatrix intersection(const FiniteField& f, const Plane& p, const Plane& q) {
  // (a, b) with a P + b Q = 0; then a P spans the intersection.
  FMatrix stack(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      stack(i, j) = p.rows()(i, j);
      stack(3 + i, j) = q.rows()(i, j);
    }
  const FMatrix k = left_kernel(f, stack);
  FMatrix out(k.rows(), 6, f.zero());
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) out(r, j) = f.add(out(r, j), f.mul(k(r, i), p.rows()(i, j)));
  return out;
}

int meet(const FiniteField& f, const Plane& p, const Plane& q) {
  FMatrix stack(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) {
      stack(i, j) = p.rows()(i, j);
      stack(3 + i, j) = q.rows()(i, j);
    }
  return 5 - static_cast<int>(rank(f, stack));
}

std::array<int, 3> Chart::complement() const {
  std::array<int, 3> c{};
  int n = 0;
  for (int x = 0; x < 6; ++x)
    if (x != pivots[0] && x != pivots[1] && x != pivots[2]) c[n++] = x;
  return c;
}

std::vector<Chart> all_charts() {
  std::vector<Chart> out;
  for (const auto& t : wedge3_triples()) out.push_back(Chart{t});
  return out;
}

ChartMatrix chart_matrix(const FiniteField& f, const Plane& p, const Chart& chart) {
  FMatrix ms(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ms(i, j) = p.rows()(i, chart.pivots[j]);
  const auto r = rank(f, ms);
  if (r < 3) throw NotTransverse("chart_matrix: plane is not a graph over the chart coordinates", static_cast<int>(3 - r));
  const FMatrix n = solve(f, ms, p.rows());  // 3 x 6, identity on the pivot columns
  const auto t = chart.complement();
  ChartMatrix out{FMatrix(3, 3), chart};
  for (int r2 = 0; r2 < 3; ++r2)
    for (int c = 0; c < 3; ++c) out.a(r2, c) = n(c, t[r2]);
  return out;
}

Plane plane_from_chart(const FiniteField& f, const ChartMatrix& c) {
  FMatrix rows(3, 6, f.zero());
  const auto t = c.chart.complement();
  for (int i = 0; i < 3; ++i) {
    rows(i, c.chart.pivots[i]) = f.one();
    for (int r = 0; r < 3; ++r) rows(i, t[r]) = c.a(r, i);
  }
  return Plane(f, std::move(rows));
}

std::optional<Plane> is_decomposable(const FiniteField& f, std::span<const Elem> omega) {
  // Column i of the 15 x 6 matrix is e_i ^ omega.
  FMatrix m(kWedge4, 6, f.zero());
  Vec e(6, f.zero());
  for (int i = 0; i < 6; ++i) {
    e[i] = f.one();
    const Vec col = wedge_vector_trivector(f, e, omega);
    e[i] = f.zero();
    for (int r = 0; r < kWedge4; ++r) m(r, i) = col[r];
  }
  if (rank(f, m) != 3) return std::nullopt;
  const FMatrix k = kernel(f, m);
  return Plane(f, k.transposed());
}

Plane dual_plane(const FiniteField& f, const Plane& p) {
  return Plane(f, kernel(f, p.rows()).transposed());
}

Plane transform(const FiniteField& f, const FMatrix& g, const Plane& p) {
  return Plane(f, multiply(f, p.rows(), g.transposed()));
}

Vec bitangent_pencil(const FiniteField& f, const std::array<FMatrix, 4>& web, std::span<const Elem> v,
                     std::span<const Elem> w) {
  auto quad = [&](const FMatrix& a, std::span<const Elem> x) {
    Elem s = f.zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s = f.add(s, f.mul(x[i], f.mul(a(i, j), x[j])));
    return s;
  };
  FMatrix m(2, 4);
  for (int i = 0; i < 4; ++i) {
    m(0, i) = quad(web[i], v);
    m(1, i) = quad(web[i], w);
  }
  if (rank(f, m) < 2) throw Error("bitangent_pencil: the line lies in a net of web quadrics (rank < 2)");
  Vec out;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out.push_back(f.sub(f.mul(m(0, a), m(1, b)), f.mul(m(0, b), m(1, a))));
  return out;
}

}  // namespace lagten
