#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagten/grassmann.hpp"
#include "lagten/hypersurfaces.hpp"
#include "lagten/poly.hpp"
#include "lagten/tens.hpp"

namespace lagten {

/// A 10-dimensional isotropic subspace of wedge^3 F^6, by a basis.
class LagrangianSubspace {
 public:
  /// Throws lagten::Error unless rows is 10 x 20 of rank 10 with all
  /// pairings zero.
  LagrangianSubspace(const FiniteField& f, FMatrix rows);
  static LagrangianSubspace from_config(const FiniteField& f, const TenConfig& cfg);

  const FMatrix& rows() const { return rows_; }

 private:
  FMatrix rows_;
};

/// dim (v ^ wedge^2 F^6) n A = 20 - rank of the 25 x 20 stack.
int corank(const FiniteField& f, const LagrangianSubspace& a, std::span<const Elem> v);

/// det [v ^ e_a ^ e_b (a < b, a, b != c) | A^T] as a 20 x 20 determinant.
Elem chart_determinant(const FiniteField& f, const LagrangianSubspace& a, std::span<const Elem> v, int c);

/// Evaluates the chart determinant through a precomputed 10 x 10 reduction.
class ChartDeterminant {
 public:
  ChartDeterminant(const FiniteField& f, const LagrangianSubspace& a, int c);
  Elem operator()(std::span<const Elem> v) const;
  int chart() const { return c_; }

 private:
  FiniteField f_;
  int c_;
  Elem scale_;                  // det of the completed basis
  std::vector<FMatrix> pieces_; // L * V(e_i)
};

struct EpwForm {
  FiniteField field;                  // field of the sextic
  std::optional<FieldEmbedding> embedding;  // base -> field when extended
  bool degenerate = false;            // chart determinants vanish identically
  std::optional<MultiPoly> sextic;
  std::optional<MultiPoly> base_sextic;  // when all coefficients lie in the base field
  int chart = -1;
  std::string path;                   // "chart-quotient" or "affine-fallback"
  std::size_t verified_points = 0;
  int cross_chart = -1;
  bool cross_chart_ok = false;
  std::size_t cross_chart_points = 0;
};

struct EpwOptions {
  std::uint64_t seed = 1;
  std::size_t verify_points = 100;
  std::size_t min_field_order = 101;
};

/// The degree-6 form cut out by the chart determinant after removing x_c^4,
/// interpolated and then checked at fresh points and against a second chart.
EpwForm epw_form(const FiniteField& f, const LagrangianSubspace& a, EpwOptions opts = {});

/// Exact degree-10 recovery of a chart determinant on an 11^5 grid of the
/// affine chart, followed by exact division by x_c^4.
struct ChartFactorCertificate {
  int chart = -1;
  std::size_t grid_points = 0;
  bool degree_at_most_10 = false;
  bool divides = false;
  std::string residual;  // first residual term when the division fails
  std::optional<MultiPoly> quotient;
};
ChartFactorCertificate certify_chart_factor(const FiniteField& f, const LagrangianSubspace& a, int c);

/// The subspace and configuration carried into a larger field.
LagrangianSubspace map_subspace(const FieldEmbedding& e, const LagrangianSubspace& a);
TenConfig map_config(const FieldEmbedding& e, const TenConfig& cfg);
Point map_point(const FieldEmbedding& e, const Point& p);

struct SingularSamples {
  std::size_t points = 0;
  std::size_t value_zero = 0;
  std::size_t gradient_zero = 0;
  std::size_t failures = 0;
};

/// Samples points on each plane and checks that the sextic and all partial
/// derivatives vanish there. Planes must be over the sextic's field.
SingularSamples singular_samples(const FiniteField& f, const MultiPoly& sextic, const std::vector<Plane>& planes,
                                 std::size_t per_plane, Rng& rng);
bool is_singular_point(const FiniteField& f, const MultiPoly& form, const Point& x);

struct PlaneSextic {
  std::size_t points_scanned = 0;
  std::vector<Point> corank2;  // plane coordinates, normalized
  std::size_t fit_dimension = 0;
  std::optional<MultiPoly> curve;
};

/// Points of the plane (over F) where the corank is at least 2, and the
/// ternary sextics through them.
PlaneSextic plane_sextic_curve(const FiniteField& f, const LagrangianSubspace& a, const Plane& plane,
                               std::uint64_t budget);

/// Planes whose Plücker vectors lie in A, by scanning P(A).
std::vector<Plane> theta_enumerate(const FiniteField& f, const LagrangianSubspace& a, std::uint64_t budget);

struct ProductMembership {
  bool member = false;
  std::size_t products_rank = 0;
  std::size_t with_form_rank = 0;
};
/// Whether a sextic lies in the span of all products of pairs of the cubics.
ProductMembership product_membership(const FiniteField& f, const MultiPoly& sextic, const std::vector<MultiPoly>& cubics);

/// True when form = c * base^exp for some nonzero scalar c.
bool is_scalar_power(const FiniteField& f, const MultiPoly& form, const MultiPoly& base, int exp);

}  // namespace lagten
