#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lagten/field.hpp"
#include "lagten/matrix.hpp"
#include "lagten/poly.hpp"
#include "lagten/rng.hpp"

namespace lagten {

using Elem = FiniteField::Elem;
using Vec = std::vector<Elem>;
using FMatrix = Matrix<Elem>;

inline constexpr int kAmbient = 6;
inline constexpr int kWedge3 = 20;
inline constexpr int kWedge4 = 15;

/// Index sets of the standard bases of wedge^3 and wedge^4 of F^6, in
/// lexicographic order.
const std::array<std::array<int, 3>, kWedge3>& wedge3_triples();
const std::array<std::array<int, 4>, kWedge4>& wedge4_quads();
int triple_index(int a, int b, int c);
/// Sign of the permutation (T, complement of T) of (0..5).
int complement_sign(int triple);

/// A plane in P^5, stored by the basis it was built from.
class Plane {
 public:
  /// Throws lagten::Error unless rows is 3 x 6 of rank 3.
  Plane(const FiniteField& f, FMatrix rows);

  const FMatrix& rows() const { return rows_; }
  const Vec& plucker() const { return plucker_; }
  /// Reduced row echelon basis; equal for equal planes.
  FMatrix canonical(const FiniteField& f) const;
  bool same_as(const FiniteField& f, const Plane& other) const;

 private:
  FMatrix rows_;
  Vec plucker_;
};

Plane plane_from_points(const FiniteField& f, const Point& a, const Point& b, const Point& c);
Plane coordinate_plane(const FiniteField& f, int a, int b, int c);
Plane random_plane(const FiniteField& f, Rng& rng);

Vec wedge3(const FiniteField& f, std::span<const Elem> u, std::span<const Elem> v, std::span<const Elem> w);
/// v ^ e_a ^ e_b as a 20-vector.
Vec wedge_with_basis_pair(const FiniteField& f, std::span<const Elem> v, int a, int b);
/// v ^ omega as a 15-vector.
Vec wedge_vector_trivector(const FiniteField& f, std::span<const Elem> v, std::span<const Elem> omega);

/// Coefficient of e_012345 in u ^ v.
Elem pairing(const FiniteField& f, std::span<const Elem> u, std::span<const Elem> v);

/// Projective dimension of the intersection: -1 empty, 0 point, 1 line, 2 equal.
int meet(const FiniteField& f, const Plane& p, const Plane& q);
/// Basis (rows) of the intersection of the underlying 3-spaces.
FMatrix intersection(const FiniteField& f, const Plane& p, const Plane& q);

/// A chart: the three coordinates on which the plane is a graph.
struct Chart {
  std::array<int, 3> pivots{0, 1, 2};
  std::array<int, 3> complement() const;
  friend bool operator==(const Chart&, const Chart&) = default;
};
std::vector<Chart> all_charts();

/// A plane as the column space of (I_3 / A) after reordering coordinates.
struct ChartMatrix {
  FMatrix a;
  Chart chart;
};

/// Throws NotTransverse with the rank defect of the pivot block.
ChartMatrix chart_matrix(const FiniteField& f, const Plane& p, const Chart& chart);
Plane plane_from_chart(const FiniteField& f, const ChartMatrix& c);

/// The plane {u : u ^ omega = 0} when it is 3-dimensional.
std::optional<Plane> is_decomposable(const FiniteField& f, std::span<const Elem> omega);

/// Annihilator of the plane, as a plane in the dual space.
Plane dual_plane(const FiniteField& f, const Plane& p);
/// Image under v -> g v.
Plane transform(const FiniteField& f, const FMatrix& g, const Plane& p);

/// The 2x2 minors (pairs 01, 02, 03, 12, 13, 23) of the 2 x 4 matrix with
/// rows (v^T A_i v)_i and (w^T A_i w)_i. Throws lagten::Error when that
/// matrix has rank below 2.
Vec bitangent_pencil(const FiniteField& f, const std::array<FMatrix, 4>& web, std::span<const Elem> v,
                     std::span<const Elem> w);

}  // namespace lagten
