#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagten/rng.hpp"

namespace lagten {

inline constexpr int kMaxExtensionDegree = 6;

/// Description of a base field: F_p (k = 1), F_{p^k} given by a monic
/// irreducible polynomial over F_p, or the rationals (p = 0).
///
/// `min_poly` lists coefficients from the constant term upwards and has
/// length k + 1 when k > 1; it is empty for prime fields and for Q.
struct FieldSpec {
  std::uint32_t p = 0;
  int k = 1;
  std::vector<std::uint32_t> min_poly;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in F_{p^k}, k <= 6, p < 2^31, elements stored as coefficient
/// vectors modulo the minimal polynomial.
class FiniteField {
 public:
  struct Elem {
    std::array<std::uint32_t, kMaxExtensionDegree> c{};
    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
  };

  /// The prime field F_p.
  explicit FiniteField(std::uint32_t p);
  /// Validates primality, monicity and irreducibility; throws lagten::Error.
  explicit FiniteField(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  int degree() const { return spec_.k; }
  std::uint64_t order() const { return order_; }

  Elem zero() const { return Elem{}; }
  Elem one() const {
    Elem e;
    e.c[0] = 1;
    return e;
  }
  Elem from_int(std::int64_t v) const;
  /// The class of x in F_p[x]/(m); for k = 1 this is 0.
  Elem generator() const;

  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < spec_.k; ++i) {
      std::uint32_t s = a.c[i] + b.c[i];
      r.c[i] = s >= spec_.p ? s - spec_.p : s;
    }
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < spec_.k; ++i)
      r.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + spec_.p - b.c[i];
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r;
    for (int i = 0; i < spec_.k; ++i) r.c[i] = a.c[i] == 0 ? 0 : spec_.p - a.c[i];
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    if (spec_.k == 1) {
      Elem r;
      r.c[0] = static_cast<std::uint32_t>(std::uint64_t{a.c[0]} * b.c[0] % spec_.p);
      return r;
    }
    return mul_ext(a, b);
  }
  /// Throws lagten::Error on zero.
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(const Elem& a) const { return pow(a, spec_.p); }
  /// Some square root, if one exists.
  std::optional<Elem> sqrt(const Elem& a) const;

  bool is_zero(const Elem& a) const { return a == Elem{}; }
  bool is_one(const Elem& a) const { return a == one(); }
  /// True when a lies in the prime subfield.
  bool in_prime_field(const Elem& a) const;

  /// Bijection [0, q) <-> elements (base-p digits of the coefficients).
  std::uint64_t to_index(const Elem& a) const;
  Elem from_index(std::uint64_t index) const;
  Elem random(Rng& rng) const { return from_index(rng.below(order_)); }
  Elem random_nonzero(Rng& rng) const { return from_index(1 + rng.below(order_ - 1)); }

  /// Coefficient vector of length k (the serialized form of a scalar).
  std::vector<std::uint32_t> coefficients(const Elem& a) const;
  Elem from_coefficients(const std::vector<std::int64_t>& coeffs) const;
  std::string to_string(const Elem& a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.spec_ == b.spec_;
  }

 private:
  Elem mul_ext(const Elem& a, const Elem& b) const;
  void init_order();

  FieldSpec spec_;
  std::uint64_t order_ = 0;
};

/// Returns F_{p^k} with a minimal polynomial found by seeded random search.
/// Irreducibility is verified by root absence (k <= 3) or Rabin's test.
FiniteField ext_field(std::uint32_t p, int k, std::uint64_t seed, int budget = 100000);

/// True iff the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

/// A field homomorphism F_{p^a} -> F_{p^b} (a | b), fixed by the image of the
/// generator, which is found by exhaustive root search in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(const FiniteField& from, const FiniteField& to);

  FiniteField::Elem operator()(const FiniteField::Elem& a) const;
  /// Preimage when `b` lies in the image.
  std::optional<FiniteField::Elem> preimage(const FiniteField::Elem& b) const;

  const FiniteField& source() const { return from_; }
  const FiniteField& target() const { return to_; }

 private:
  FiniteField from_;
  FiniteField to_;
  std::vector<FiniteField::Elem> powers_;  // images of x^0..x^{a-1}
};

/// Smallest extension of `base` (by degree r) with at least `min_order`
/// elements, returned together with the embedding of `base` into it.
std::pair<FiniteField, int> extension_with_min_order(const FiniteField& base,
                                                     std::uint64_t min_order,
                                                     std::uint64_t seed);

}  // namespace lagten
