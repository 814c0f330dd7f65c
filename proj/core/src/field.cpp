#include "lagten/field.hpp"

#include <sstream>

#include "lagten/error.hpp"

namespace lagten {

namespace {

using UPoly = std::vector<std::uint32_t>;  // constant term first

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

std::uint32_t invmod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("inverse of zero in F_" + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly poly_mod(UPoly a, const UPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t coef = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint32_t t = mulmod(coef, m[i], p);
      a[shift + i] = a[shift + i] >= t ? a[shift + i] - t : a[shift + i] + p - t;
    }
    trim(a);
  }
  return a;
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

UPoly poly_powmod(UPoly base, std::uint64_t e, const UPoly& m, std::uint32_t p) {
  UPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

UPoly poly_gcd(UPoly a, UPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

UPoly poly_sub(UPoly a, const UPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  trim(a);
  return a;
}

// x^(p^d) mod m by iterated p-th powers.
UPoly x_pow_p_pow(std::uint32_t p, int d, const UPoly& m) {
  UPoly r{0, 1};
  for (int i = 0; i < d; ++i) r = poly_powmod(r, p, m, p);
  return r;
}

bool has_root(std::uint32_t p, const UPoly& f) {
  // gcd(f, x^p - x) != 1
  UPoly xp = x_pow_p_pow(p, 1, f);
  UPoly g = poly_gcd(f, poly_sub(xp, UPoly{0, 1}, p), p);
  return g.size() > 1;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  if (monic[0] == 0) return false;
  if (k <= 3) return !has_root(p, monic);
  // Rabin: f | x^(p^k) - x and gcd(f, x^(p^(k/r)) - x) = 1 for primes r | k.
  UPoly xk = x_pow_p_pow(p, k, monic);
  if (!poly_sub(xk, UPoly{0, 1}, p).empty()) return false;
  for (int r : prime_factors(k)) {
    UPoly xd = x_pow_p_pow(p, k / r, monic);
    if (poly_gcd(monic, poly_sub(xd, UPoly{0, 1}, p), p).size() > 1) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p) : FiniteField(FieldSpec{p, 1, {}}) {}

FiniteField::FiniteField(const FieldSpec& spec) : spec_(spec) {
  if (spec_.p == 0) throw Error("FiniteField: characteristic 0 is not a finite field");
  if (spec_.p >= (1u << 31) || !is_prime(spec_.p))
    throw Error("FiniteField: " + std::to_string(spec_.p) + " is not a supported prime");
  if (spec_.k < 1 || spec_.k > kMaxExtensionDegree)
    throw Error("FiniteField: extension degree must be in [1, 6]");
  if (spec_.k == 1) {
    spec_.min_poly.clear();
  } else {
    if (static_cast<int>(spec_.min_poly.size()) != spec_.k + 1 || spec_.min_poly.back() != 1)
      throw Error("FiniteField: minimal polynomial must be monic of degree k");
    for (auto c : spec_.min_poly)
      if (c >= spec_.p) throw Error("FiniteField: minimal polynomial coefficient out of range");
    if (!is_irreducible(spec_.p, spec_.min_poly))
      throw Error("FiniteField: minimal polynomial is reducible");
  }
  init_order();
}

void FiniteField::init_order() {
  unsigned __int128 q = 1;
  for (int i = 0; i < spec_.k; ++i) q *= spec_.p;
  if (q >> 63) throw Error("FiniteField: field order does not fit in 63 bits");
  order_ = static_cast<std::uint64_t>(q);
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const {
  Elem e;
  std::int64_t r = v % static_cast<std::int64_t>(spec_.p);
  if (r < 0) r += spec_.p;
  e.c[0] = static_cast<std::uint32_t>(r);
  return e;
}

FiniteField::Elem FiniteField::generator() const {
  Elem e;
  if (spec_.k > 1) e.c[1] = 1;
  return e;
}

FiniteField::Elem FiniteField::mul_ext(const Elem& a, const Elem& b) const {
  const int k = spec_.k;
  const std::uint32_t p = spec_.p;
  std::array<std::uint64_t, 2 * kMaxExtensionDegree - 1> t{};
  for (int i = 0; i < k; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < k; ++j) t[i + j] = (t[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % p;
  }
  // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  for (int i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t top = t[i];
    if (top == 0) continue;
    for (int j = 0; j < k; ++j) {
      const std::uint64_t s = top * spec_.min_poly[j] % p;
      t[i - k + j] = (t[i - k + j] + p - s) % p;
    }
  }
  Elem r;
  for (int i = 0; i < k; ++i) r.c[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FiniteField::Elem FiniteField::inv(const Elem& a) const {
  if (is_zero(a)) throw Error("FiniteField: inverse of zero");
  const std::uint32_t p = spec_.p;
  if (spec_.k == 1) {
    Elem r;
    r.c[0] = invmod(a.c[0], p);
    return r;
  }
  // Extended Euclid in F_p[x]: find s with s*a = 1 mod m.
  UPoly r0 = spec_.min_poly, r1(a.c.begin(), a.c.begin() + spec_.k);
  trim(r1);
  UPoly s0{}, s1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    UPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    UPoly rem = r0;
    const std::uint32_t li = invmod(r1.back(), p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::uint32_t coef = mulmod(rem.back(), li, p);
      const std::size_t shift = rem.size() - r1.size();
      q[shift] = coef;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        const std::uint32_t t = mulmod(coef, r1[i], p);
        rem[shift + i] = rem[shift + i] >= t ? rem[shift + i] - t : rem[shift + i] + p - t;
      }
      trim(rem);
    }
    // s_new = s0 - q*s1
    UPoly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = static_cast<std::uint32_t>((qs[i + j] + std::uint64_t{q[i]} * s1[j]) % p);
    UPoly s2 = poly_sub(s0, qs, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const std::uint32_t ci = invmod(r0[0], p);
  s0 = poly_mod(s0, spec_.min_poly, p);
  Elem r;
  for (std::size_t i = 0; i < s0.size(); ++i) r.c[i] = mulmod(s0[i], ci, p);
  return r;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<FiniteField::Elem> FiniteField::sqrt(const Elem& a) const {
  if (is_zero(a)) return a;
  const std::uint64_t q = order_;
  if (spec_.p == 2) return pow(a, q / 2);
  if (!is_one(pow(a, (q - 1) / 2))) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t t = q - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Elem z;
  for (std::uint64_t i = 2;; ++i) {
    z = from_index(i);
    if (!is_one(pow(z, (q - 1) / 2))) break;
  }
  Elem c = pow(z, t);
  Elem x = pow(a, (t + 1) / 2);
  Elem b = pow(a, t);
  int m = s;
  while (!is_one(b)) {
    int i = 0;
    Elem bb = b;
    while (!is_one(bb)) {
      bb = mul(bb, bb);
      ++i;
    }
    Elem g = c;
    for (int j = 0; j < m - i - 1; ++j) g = mul(g, g);
    x = mul(x, g);
    c = mul(g, g);
    b = mul(b, c);
    m = i;
  }
  return x;
}

bool FiniteField::in_prime_field(const Elem& a) const {
  for (int i = 1; i < spec_.k; ++i)
    if (a.c[i] != 0) return false;
  return true;
}

std::uint64_t FiniteField::to_index(const Elem& a) const {
  std::uint64_t idx = 0;
  for (int i = spec_.k - 1; i >= 0; --i) idx = idx * spec_.p + a.c[i];
  return idx;
}

FiniteField::Elem FiniteField::from_index(std::uint64_t index) const {
  Elem e;
  for (int i = 0; i < spec_.k; ++i) {
    e.c[i] = static_cast<std::uint32_t>(index % spec_.p);
    index /= spec_.p;
  }
  return e;
}

std::vector<std::uint32_t> FiniteField::coefficients(const Elem& a) const {
  return std::vector<std::uint32_t>(a.c.begin(), a.c.begin() + spec_.k);
}

FiniteField::Elem FiniteField::from_coefficients(const std::vector<std::int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > spec_.k)
    throw Error("scalar has more coefficients than the extension degree");
  Elem e;
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = from_int(coeffs[i]).c[0];
  return e;
}

std::string FiniteField::to_string(const Elem& a) const {
  if (spec_.k == 1) return std::to_string(a.c[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < spec_.k; ++i) os << (i ? "," : "") << a.c[i];
  os << ']';
  return os.str();
}

FiniteField ext_field(std::uint32_t p, int k, std::uint64_t seed, int budget) {
  if (!is_prime(p)) throw Error("ext_field: p must be prime");
  if (k < 1 || k > kMaxExtensionDegree) throw Error("ext_field: degree must be in [1, 6]");
  if (k == 1) return FiniteField(p);
  Rng rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::vector<std::uint32_t> m(k + 1);
    for (int i = 0; i < k; ++i) m[i] = static_cast<std::uint32_t>(rng.below(p));
    m[k] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible(p, m)) return FiniteField(FieldSpec{p, k, m});
  }
  throw BudgetExceeded("ext_field: no irreducible polynomial found within budget");
}

FieldEmbedding::FieldEmbedding(const FiniteField& from, const FiniteField& to)
    : from_(from), to_(to) {
  const int a = from.degree(), b = to.degree();
  if (from.characteristic() != to.characteristic() || b % a != 0)
    throw Error("FieldEmbedding: no embedding F_{p^" + std::to_string(a) + "} -> F_{p^" +
                std::to_string(b) + "}");
  FiniteField::Elem root = to.zero();
  if (a > 1) {
    const auto& m = from.spec().min_poly;
    bool found = false;
    for (std::uint64_t i = 0; i < to.order() && !found; ++i) {
      FiniteField::Elem x = to.from_index(i);
      FiniteField::Elem acc = to.zero();
      for (int j = a; j >= 0; --j) acc = to.add(to.mul(acc, x), to.from_int(m[j]));
      if (to.is_zero(acc)) {
        root = x;
        found = true;
      }
    }
    if (!found) throw Error("FieldEmbedding: minimal polynomial has no root in target");
  }
  powers_.push_back(to.one());
  for (int j = 1; j < a; ++j) powers_.push_back(to.mul(powers_.back(), root));
}

FiniteField::Elem FieldEmbedding::operator()(const FiniteField::Elem& x) const {
  FiniteField::Elem r = to_.zero();
  for (int j = 0; j < from_.degree(); ++j)
    if (x.c[j]) r = to_.add(r, to_.mul(to_.from_int(x.c[j]), powers_[j]));
  return r;
}

std::optional<FiniteField::Elem> FieldEmbedding::preimage(const FiniteField::Elem& y) const {
  if (from_.degree() == 1) {
    if (!to_.in_prime_field(y)) return std::nullopt;
    FiniteField::Elem r;
    r.c[0] = y.c[0];
    return r;
  }
  for (std::uint64_t i = 0; i < from_.order(); ++i) {
    FiniteField::Elem x = from_.from_index(i);
    if ((*this)(x) == y) return x;
  }
  return std::nullopt;
}

std::pair<FiniteField, int> extension_with_min_order(const FiniteField& base,
                                                     std::uint64_t min_order,
                                                     std::uint64_t seed) {
  if (base.order() >= min_order) return {base, 1};
  int r = 1;
  unsigned __int128 q = base.order();
  while (q < min_order) {
    q *= base.order();
    ++r;
  }
  const int total = base.degree() * r;
  if (total > kMaxExtensionDegree) throw Error("extension degree would exceed 6");
  return {ext_field(base.characteristic(), total, seed), r};
}

}  // namespace lagten
