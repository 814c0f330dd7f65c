#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lagten/grassmann.hpp"
#include "lagten/poly.hpp"
#include "lagten/projective.hpp"

namespace lagten {

/// A linear system of forms of one degree, given by a basis.
struct FormSystem {
  int nvars = 6;
  int degree = 0;
  std::vector<MultiPoly> basis;
  std::size_t condition_rank = 0;
  std::size_t dimension() const { return basis.size(); }
};

/// Forms whose coefficient vectors (in MonomialBasis order) lie in the
/// kernel of `conditions`.
FormSystem forms_from_conditions(const FiniteField& f, int nvars, int degree, const FMatrix& conditions);

/// Degree-d forms in six variables vanishing on every plane.
FormSystem through_planes(const FiniteField& f, const std::vector<Plane>& planes, int degree);
/// Degree-d forms vanishing at every point.
FormSystem through_points(const FiniteField& f, const std::vector<Point>& points, int nvars, int degree);
/// The normalized generator of a one-dimensional system; throws
/// DimensionMismatch otherwise.
MultiPoly unique_form(const FiniteField& f, const FormSystem& sys);

/// Ternary form in the plane's basis coordinates.
MultiPoly restrict_to_plane(const FiniteField& f, const MultiPoly& form, const Plane& plane);

/// Points where the form and all its partial derivatives vanish.
struct SingularScan {
  std::vector<LevelPoints> levels;
  std::uint64_t points_scanned = 0;
  std::size_t found() const;
  /// Never a smoothness proof: only points up to the scanned level are seen.
  std::string certificate() const;
};

/// Scans P^{n-1}(F_{p^r}), r = 1..max_level. The form must have
/// coefficients in the prime field.
SingularScan singular_scan(const FiniteField& f, const MultiPoly& form, int max_level, std::uint64_t budget,
                           std::uint64_t seed = 0);

struct PositionReport {
  std::vector<std::array<int, 3>> collinear_triples;
  std::vector<std::array<int, 6>> conic_sextuples;
  std::size_t cubic_dimension = 0;  // ternary cubics through all points
};

/// Exhaustive position tests for points of P^2.
PositionReport position_check(const FiniteField& f, const std::vector<Point>& points);

/// Coordinates of points of a plane in its row basis.
std::vector<Point> plane_coordinates(const FiniteField& f, const Plane& plane, const std::vector<Point>& points);

}  // namespace lagten
