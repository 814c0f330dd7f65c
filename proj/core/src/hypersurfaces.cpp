#include "lagten/hypersurfaces.hpp"

#include <optional>
#include <sstream>

#include "lagten/error.hpp"

namespace lagten {

FormSystem forms_from_conditions(const FiniteField& f, int nvars, int degree, const FMatrix& conditions) {
  const MonomialBasis basis(nvars, degree);
  FormSystem sys;
  sys.nvars = nvars;
  sys.degree = degree;
  if (conditions.rows() == 0) {
    sys.condition_rank = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) sys.basis.push_back(monomial(f, nvars, basis[i]));
    return sys;
  }
  if (conditions.cols() != basis.size()) throw Error("forms_from_conditions: condition width mismatch");
  const FMatrix k = kernel(f, conditions);
  sys.condition_rank = basis.size() - k.cols();
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Elem> coeffs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) coeffs[r] = k(r, c);
    sys.basis.push_back(basis.from_dense(coeffs));
  }
  return sys;
}

FormSystem through_planes(const FiniteField& f, const std::vector<Plane>& planes, int degree) {
  const MonomialBasis basis(6, degree);
  const MonomialBasis restricted(3, degree);
  FMatrix cond(0, basis.size());
  for (const auto& plane : planes) {
    const FMatrix lin = plane.rows().transposed();  // x = sum_j s_j row_j
    FMatrix block(restricted.size(), basis.size(), f.zero());
    for (std::size_t m = 0; m < basis.size(); ++m) {
      const MultiPoly r = substitute(f, monomial(f, 6, basis[m]), lin);
      for (const auto& [e, c] : r.terms()) block(restricted.index(e), m) = c;
    }
    for (std::size_t i = 0; i < block.rows(); ++i) cond.append_row(block.row(i));
  }
  return forms_from_conditions(f, 6, degree, cond);
}

FormSystem through_points(const FiniteField& f, const std::vector<Point>& points, int nvars, int degree) {
  const MonomialBasis basis(nvars, degree);
  FMatrix cond(0, basis.size());
  for (const auto& p : points) cond.append_row(basis.evaluate(f, p));
  return forms_from_conditions(f, nvars, degree, cond);
}

MultiPoly unique_form(const FiniteField& f, const FormSystem& sys) {
  if (sys.dimension() != 1)
    throw DimensionMismatch("unique_form: linear system is not one-dimensional", 1, static_cast<long>(sys.dimension()));
  return normalize(f, sys.basis[0]);
}

MultiPoly restrict_to_plane(const FiniteField& f, const MultiPoly& form, const Plane& plane) {
  if (form.nvars() != 6) throw Error("restrict_to_plane: form must have six variables");
  return substitute(f, form, plane.rows().transposed());
}

std::size_t SingularScan::found() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.points.size();
  return n;
}

std::string SingularScan::certificate() const {
  std::ostringstream os;
  const int top = levels.empty() ? 0 : levels.back().level;
  if (found() == 0)
    os << "partial: no singular point found over F_{p^r}, r <= " << top << " (" << points_scanned
       << " points); not a proof of smoothness";
  else
    os << found() << " singular points found over F_{p^r}, r <= " << top;
  return os.str();
}

SingularScan singular_scan(const FiniteField& f, const MultiPoly& form, int max_level, std::uint64_t budget,
                           std::uint64_t seed) {
  for (const auto& [e, c] : form.terms())
    if (!f.in_prime_field(c)) throw Error("singular_scan: coefficients must lie in the prime field");
  const std::uint32_t p = f.characteristic();
  // Integer coefficients, so each level's field can rebuild the form.
  std::vector<std::pair<Exponent, std::int64_t>> terms;
  for (const auto& [e, c] : form.terms()) terms.emplace_back(e, c.c[0]);
  SingularScan scan;
  std::optional<FieldSpec> current;
  std::vector<MultiPoly> parts;
  scan.levels = scan_levels(p, form.nvars(), max_level, budget, seed, [&](const FiniteField& lf, const Point& x) {
    if (!current || !(*current == lf.spec())) {
      current = lf.spec();
      parts.clear();
      const MultiPoly g = form_from_ints(lf, form.nvars(), form.degree(), terms);
      parts.push_back(g);
      for (int v = 0; v < form.nvars(); ++v) parts.push_back(partial(lf, g, v));
    }
    ++scan.points_scanned;
    for (const auto& g : parts)
      if (!lf.is_zero(evaluate(lf, g, x))) return false;
    return true;
  });
  return scan;
}

namespace {

std::size_t points_rank(const FiniteField& f, const std::vector<Point>& pts, int degree) {
  const MonomialBasis basis(3, degree);
  FMatrix m(0, basis.size());
  for (const auto& p : pts) m.append_row(basis.evaluate(f, p));
  return rank(f, m);
}

}  // namespace

PositionReport position_check(const FiniteField& f, const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2 || n > 12) throw Error("position_check: expects between 2 and 12 points");
  for (const auto& p : points)
    if (p.size() != 3) throw Error("position_check: points must have three coordinates");
  PositionReport r;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (points_rank(f, {points[a], points[b], points[c]}, 1) < 3) r.collinear_triples.push_back({a, b, c});
  std::array<int, 6> idx{};
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == 6) {
      std::vector<Point> six;
      for (int i : idx) six.push_back(points[i]);
      if (points_rank(f, six, 2) < 6) r.conic_sextuples.push_back(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  r.cubic_dimension = form_space_dim(3, 3) - points_rank(f, points, 3);
  return r;
}

std::vector<Point> plane_coordinates(const FiniteField& f, const Plane& plane, const std::vector<Point>& points) {
  std::vector<Point> out;
  const FMatrix at = plane.rows().transposed();  // 6 x 3
  for (const auto& p : points) {
    FMatrix rhs(6, 1);
    for (int i = 0; i < 6; ++i) rhs(i, 0) = p.at(i);
    const FMatrix s = solve(f, at, rhs);
    out.push_back({s(0, 0), s(1, 0), s(2, 0)});
  }
  return out;
}

}  // namespace lagten
