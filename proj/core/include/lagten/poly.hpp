#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lagten/field.hpp"
#include "lagten/matrix.hpp"
#include "lagten/rng.hpp"

namespace lagten {

inline constexpr int kMaxVars = 6;

using Exponent = std::array<std::uint8_t, kMaxVars>;
using Point = std::vector<FiniteField::Elem>;

/// Lexicographic with x_0 > x_1 > ... ; on homogeneous forms this is graded
/// lex. Larger monomials come first in every container.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

/// Homogeneous form of degree d in n <= 6 variables over a finite field.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Elem = FiniteField::Elem;
  using Terms = std::map<Exponent, Elem, MonomialOrder>;

  MultiPoly(int nvars, int degree);

  int nvars() const { return n_; }
  int degree() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Overwrites a coefficient; setting zero erases the term.
  void set(const Exponent& e, const Elem& c);
  Elem coefficient(const Exponent& e) const;
  /// Largest monomial in the order; the form must be nonzero.
  const std::pair<const Exponent, Elem>& leading() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int n_;
  int d_;
  Terms terms_;
};

int exponent_degree(const Exponent& e);
std::string exponent_to_string(const Exponent& e, int nvars);

/// The monomials of degree d in n variables, largest first.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);
  int nvars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::size_t index(const Exponent& e) const;

  /// Values of all basis monomials at a point.
  std::vector<FiniteField::Elem> evaluate(const FiniteField& f, std::span<const FiniteField::Elem> x) const;
  std::vector<FiniteField::Elem> to_dense(const MultiPoly& p) const;
  MultiPoly from_dense(std::span<const FiniteField::Elem> coeffs) const;

 private:
  int n_;
  int d_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t, MonomialOrder> index_;
};

std::uint64_t binomial(int n, int k);
/// C(n - 1 + d, d): dimension of the space of degree-d forms in n variables.
std::size_t form_space_dim(int nvars, int degree);

MultiPoly monomial(const FiniteField& f, int nvars, const Exponent& e);
MultiPoly linear_form(const FiniteField& f, std::span<const FiniteField::Elem> coeffs);
/// Degree-0 form with the given value.
MultiPoly constant(const FiniteField& f, int nvars, const FiniteField::Elem& c);
/// Builds a form from integer coefficients (reduced mod p).
MultiPoly form_from_ints(const FiniteField& f, int nvars, int degree,
                         const std::vector<std::pair<Exponent, std::int64_t>>& terms);

FiniteField::Elem evaluate(const FiniteField& f, const MultiPoly& p, std::span<const FiniteField::Elem> x);
MultiPoly add(const FiniteField& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly sub(const FiniteField& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const FiniteField& f, const MultiPoly& a, const FiniteField::Elem& c);
MultiPoly multiply(const FiniteField& f, const MultiPoly& a, const MultiPoly& b);
MultiPoly power(const FiniteField& f, const MultiPoly& a, int e);
MultiPoly partial(const FiniteField& f, const MultiPoly& a, int var);

/// Linear change of variables: old variable i becomes sum_j lin(i, j) y_j,
/// with lin of size nvars(a) x m. The result has m variables.
MultiPoly substitute(const FiniteField& f, const MultiPoly& a, const Matrix<FiniteField::Elem>& lin);

/// Quotient q with q * g == a, checked term by term. Throws lagten::Error
/// naming the first residual term when g does not divide a.
MultiPoly divide_exact(const FiniteField& f, const MultiPoly& a, const MultiPoly& g);

/// Scales so that the leading coefficient is one (zero stays zero).
MultiPoly normalize(const FiniteField& f, const MultiPoly& a);
/// True when a = c * b for some nonzero scalar c.
bool proportional(const FiniteField& f, const MultiPoly& a, const MultiPoly& b);

/// Applies a coefficient map, e.g. a field embedding.
MultiPoly map_coefficients(const MultiPoly& a, const std::function<FiniteField::Elem(const FiniteField::Elem&)>& phi);

std::string to_string(const FiniteField& f, const MultiPoly& p);

struct Sample {
  Point point;
  FiniteField::Elem value;
};

/// The unique form of degree d matching all samples. Throws
/// InconsistentSystem when no form fits, and DimensionMismatch when the
/// samples do not determine the form.
MultiPoly interpolate(const FiniteField& f, int nvars, int degree, std::span<const Sample> samples);

struct InterpolationOptions {
  std::size_t extra_samples = 16;
  std::size_t held_out = 20;
};

/// Samples a black-box degree-d function at seeded random points, fits it,
/// then compares on held-out points (throws lagten::Error on mismatch).
MultiPoly interpolate_from(const FiniteField& f, int nvars, int degree,
                           const std::function<FiniteField::Elem(const Point&)>& oracle, Rng& rng,
                           InterpolationOptions opts = {});

Point random_point(const FiniteField& f, int nvars, Rng& rng);

}  // namespace lagten
