#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lagten/field.hpp"
#include "lagten/poly.hpp"

namespace lagten {

/// |P^{n-1}(F_q)| for n homogeneous coordinates; throws when it overflows.
std::uint64_t projective_point_count(std::uint64_t q, int ncoords);

/// Visits every point of P^{n-1}(F) once, in the normalized form whose first
/// nonzero coordinate is one. The visitor returns false to stop early.
/// Returns the number of points visited.
std::uint64_t for_each_projective_point(const FiniteField& f, int ncoords,
                                        const std::function<bool(const Point&)>& visit);

/// Scales so that the first nonzero coordinate is one. Throws on the zero vector.
Point normalize_point(const FiniteField& f, const Point& x);
bool is_zero_point(const FiniteField& f, const Point& x);
/// Same projective point.
bool same_point(const FiniteField& f, const Point& a, const Point& b);

/// The normalized point is fixed by x -> x^(p^s) for some s < r with s | r,
/// i.e. it is defined over a proper subfield of F_{p^r}.
bool defined_over_proper_subfield(const FiniteField& f, const Point& normalized);

/// One extension level of a multi-level scan.
struct LevelPoints {
  FiniteField field;
  int level = 1;
  std::vector<Point> points;
};

/// Scans P^{n-1}(F_{p^r}) for r = 1..max_level, reporting at each level only
/// points not already defined over a smaller level. Forms must have
/// prime-field coefficients; they are evaluated through `test` with the
/// level's field. Throws BudgetExceeded before scanning when the total
/// number of points exceeds `budget`.
std::vector<LevelPoints> scan_levels(std::uint32_t p, int ncoords, int max_level, std::uint64_t budget,
                                     std::uint64_t seed,
                                     const std::function<bool(const FiniteField&, const Point&)>& test);

}  // namespace lagten
