#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lagten/grassmann.hpp"
#include "lagten/poly.hpp"

namespace lagten {

/// Symmetric matrix B with q(x) = x^T B x (odd characteristic).
FMatrix quadric_matrix(const FiniteField& f, const MultiPoly& q);
MultiPoly quadric_form(const FiniteField& f, const FMatrix& b);
Elem quadric_value(const FiniteField& f, const FMatrix& b, std::span<const Elem> x);
Elem bilinear(const FiniteField& f, const FMatrix& b, std::span<const Elem> x, std::span<const Elem> y);
bool is_smooth_quadric(const FiniteField& f, const FMatrix& b);

/// All points of P^{n-1}(F) on every listed quadric.
std::vector<Point> common_zeros(const FiniteField& f, const std::vector<FMatrix>& quadrics);

/// A line in projective space spanned by two points.
struct Line {
  Point a;
  Point b;
};

/// The lines through a point q of a smooth quadric surface in P^3. Returns
/// std::nullopt when they are not defined over F.
std::optional<std::array<Line, 2>> lines_through(const FiniteField& f, const FMatrix& b, const Point& q);
/// Projective dimension of the intersection of two lines.
int line_meet(const FiniteField& f, const Line& l, const Line& m);
/// The intersection point of two distinct meeting lines.
Point line_intersection(const FiniteField& f, const Line& l, const Line& m);

}  // namespace lagten
