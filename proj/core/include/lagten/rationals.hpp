#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lagten/error.hpp"

namespace lagten {

/// The field Q with arbitrary-precision fractions kept in lowest terms.
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(mpz_class(std::to_string(v))); }

  Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
  Elem neg(const Elem& a) const { return Elem(-a); }
  Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("Rationals: inverse of zero");
    return Elem(1 / a);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

}  // namespace lagten
