#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lagten/hypersurfaces.hpp"
#include "lagten/tens.hpp"

namespace lagten {

struct MultPoint {
  Point point;
  int mult = 1;
};

/// Points of P^2 with multiplicities, all over one field.
struct MultPointSet {
  FieldSpec field;
  std::vector<MultPoint> points;
};

/// Sum of C(m_i + 1, 2): the number of imposed linear conditions.
std::size_t condition_count(const MultPointSet& s);
/// C(d + 2, 2) minus the condition count, clamped at zero.
std::size_t expected_dimension(int degree, const MultPointSet& s);

/// Ternary forms of degree d with multiplicity >= m_i at every p_i.
FormSystem forms_with_mult(const FiniteField& f, int degree, const MultPointSet& s);

/// 32x^6 + 27xy^5 - 120x^4yz + 150x^2y^2z^2 + 5y^3z^3 + 27xz^5.
MultiPoly winger_sextic(const FiniteField& f);

/// Singular points of a ternary form over F_{p^k}, k <= max_level, lifted to
/// the smallest scanned field containing them all. Multiplicity is recorded
/// as 2 without a tangent-cone test.
MultPointSet find_nodes(const FiniteField& f, const MultiPoly& form, int max_level, std::uint64_t budget,
                        std::uint64_t seed = 0);

struct NodeSelection {
  std::uint32_t prime = 0;
  MultPointSet nodes;
  std::vector<std::uint32_t> rejected;  // primes scanned before the accepted one
};

/// First prime in [lo, hi] (skipping 2, 3, 5) where the Winger sextic has
/// exactly `expected` singular points over F_{p^k}, k <= max_level.
NodeSelection select_winger_prime(std::uint32_t lo = 31, std::uint32_t hi = 499, int max_level = 2,
                                  std::uint64_t budget = 5'000'000, std::uint64_t seed = 0,
                                  std::size_t expected = 10);

enum class CobleKind { Septic, Decimic };

struct CobleTen {
  TenConfig config;
  FormSystem ambient;                  // V, the system whose projectivization hosts the planes
  std::vector<std::size_t> first_dims;  // cubics through the other nine nodes
  std::vector<std::size_t> second_dims; // second factor, per node
};

/// Ten planes in P(V), spanned by products of the cubic through the other
/// nine nodes with the second factor system. With `twist`, both factor
/// bases are replaced by random invertible recombinations first.
CobleTen coble_ten(const FiniteField& f, const MultPointSet& nodes, CobleKind kind, Rng* twist = nullptr);

}  // namespace lagten
