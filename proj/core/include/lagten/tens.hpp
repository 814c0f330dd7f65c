#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lagten/grassmann.hpp"
#include "lagten/poly.hpp"

namespace lagten {

struct Provenance {
  std::string recipe;
  std::uint64_t seed = 0;
  std::string source;
};

/// An ordered family of planes over one field.
struct TenConfig {
  FieldSpec field;
  std::vector<Plane> planes;
  Provenance provenance;
};

struct PairPoint {
  int i = 0;
  int j = 0;
  Point point;  // normalized
};

struct IncidenceReport {
  std::vector<std::vector<int>> dims;  // diagonal entries are 2
  std::vector<PairPoint> points;       // pairs meeting in exactly one point
  int pairs = 0;
  int incident_pairs = 0;
  int distinct_points = 0;
  bool all_incident = false;
  bool points_distinct = false;        // every pair meets in a point and no two points coincide
  bool planes_distinct = false;
  int span_dim = 0;
  bool isotropic = false;
  bool lagrangian_spanning = false;    // ten planes, span 10, isotropic
};

IncidenceReport verify(const FiniteField& f, const TenConfig& cfg);

/// N x 20 matrix of Plücker vectors.
FMatrix plucker_matrix(const FiniteField& f, const TenConfig& cfg);

struct TangentRank {
  std::size_t rank = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  /// unknowns - rank: dimension of the tangent space of the incidence variety.
  std::size_t tangent_dim = 0;
  Chart chart;
};

/// One equation Tr(adj(A_i - A_j)(X_i - X_j)) = 0 per pair in the chart
/// coordinates. Requires pairwise point intersections; throws NotTransverse
/// when a plane is not a graph over the chart.
TangentRank tangent_rank(const FiniteField& f, const TenConfig& cfg, const Chart& chart);
/// Charts over which every plane of the configuration is a graph.
std::vector<Chart> admissible_charts(const FiniteField& f, const TenConfig& cfg);

/// The first planes (in order) whose Plücker vectors are independent, up to
/// ten of them.
TenConfig independent_planes(const FiniteField& f, const TenConfig& cfg);

/// Every plane replaced by its annihilator.
TenConfig dualize(const FiniteField& f, const TenConfig& cfg);

/// The plane <e0, e1, e2> and the 3-spaces Pi_i = <e0, e1, e2, e_{3+i}>.
Plane base_plane(const FiniteField& f);
/// Point of P^5 from coordinates (x0, x1, x2, y) of Pi_i.
Point embed_from_pi(const FiniteField& f, const Point& x, int i);

struct Morin13Result {
  TenConfig config;                   // 12 tangent planes, then the base plane
  std::array<FMatrix, 3> quadrics;    // 4 x 4 in coordinates (x0, x1, x2, y) of Pi_i
  std::array<FMatrix, 3> conics;      // their restrictions to the base plane
  /// Points of C_0 ^ C_1, C_1 ^ C_2, C_2 ^ C_0; tangent planes are taken on Q_0, Q_1, Q_2 respectively.
  std::array<std::vector<Point>, 3> pair_points;
  int attempts = 0;
};

/// Seeded search for smooth quadrics Q_i in Pi_i whose conics meet pairwise
/// in four F-rational points, returning the 12 tangent planes and the base
/// plane. Throws BudgetExceeded when the search fails.
Morin13Result construct_morin13(const FiniteField& f, std::uint64_t seed, int budget = 20000);

struct MorinSanity {
  int pairs = 0;
  int incident = 0;
  int meets_base = 0;     // intersection meets the base plane
  int on_quadric = 0;     // intersection point lies on some Q_i
  int explained = 0;      // either of the above
};
MorinSanity morin_sanity(const FiniteField& f, const Morin13Result& r);

struct ThreeConicResult {
  TenConfig config;                       // nine planes Lambda_km (k-major), then the base plane
  FiniteField field;                      // F_{29^2}
  std::array<MultiPoly, 3> conics;        // over F_29, ternary
  /// intersections[k] = C_i ^ C_j with {i, j, k} = {0, 1, 2}, over F_29.
  std::array<std::vector<Point>, 3> intersections;
  std::array<FMatrix, 3> quadrics;        // Q_i in coordinates (x0, x1, x2, y)
  std::vector<Point> base_points;         // the nine q points in P^5
  int matchings_tried = 0;
  std::string matching;                   // labels and ruling choice that verified
};

/// The three-conic ten over F_{29^2}. The point labelling and ruling choice
/// are searched until verify passes; throws lagten::Error when none does.
ThreeConicResult construct_3331(std::uint64_t seed = 29);

/// The conics and intersection points used by construct_3331, as integer data.
struct ThreeConicData {
  std::array<std::vector<std::pair<Exponent, std::int64_t>>, 3> conics;
  std::array<std::vector<std::array<std::int64_t, 3>>, 3> intersections;  // indexed like ThreeConicResult
};
const ThreeConicData& three_conic_data();

}  // namespace lagten
