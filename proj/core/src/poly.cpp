#include "lagten/poly.hpp"

#include <sstream>

#include "lagten/error.hpp"

namespace lagten {

using Elem = FiniteField::Elem;

MultiPoly::MultiPoly(int nvars, int degree) : n_(nvars), d_(degree) {
  if (nvars < 1 || nvars > kMaxVars) throw Error("MultiPoly: variable count must be in 1..6");
  if (degree < 0 || degree > 255) throw Error("MultiPoly: degree out of range");
}

void MultiPoly::set(const Exponent& e, const Elem& c) {
  if (exponent_degree(e) != d_) throw Error("MultiPoly::set: exponent has the wrong degree");
  for (int i = n_; i < kMaxVars; ++i)
    if (e[i] != 0) throw Error("MultiPoly::set: exponent uses an absent variable");
  if (c == Elem{})
    terms_.erase(e);
  else
    terms_[e] = c;
}

Elem MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Elem{} : it->second;
}

const std::pair<const Exponent, Elem>& MultiPoly::leading() const {
  if (terms_.empty()) throw Error("MultiPoly::leading: zero form");
  return *terms_.begin();
}

int exponent_degree(const Exponent& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

std::string exponent_to_string(const Exponent& e, int nvars) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (e[i] > 1) os << '^' << int(e[i]);
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t form_space_dim(int nvars, int degree) { return binomial(nvars - 1 + degree, degree); }

namespace {

void enumerate_monomials(int var, int nvars, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    cur[var] = static_cast<std::uint8_t>(a);
    enumerate_monomials(var + 1, nvars, remaining - a, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : n_(nvars), d_(degree) {
  if (nvars < 1 || nvars > kMaxVars) throw Error("MonomialBasis: variable count must be in 1..6");
  Exponent cur{};
  enumerate_monomials(0, nvars, degree, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error("MonomialBasis::index: monomial not in basis");
  return it->second;
}

std::vector<Elem> MonomialBasis::evaluate(const FiniteField& f, std::span<const Elem> x) const {
  if (x.size() != static_cast<std::size_t>(n_)) throw Error("MonomialBasis::evaluate: wrong point length");
  std::vector<std::vector<Elem>> pw(n_, std::vector<Elem>(d_ + 1));
  for (int i = 0; i < n_; ++i) {
    pw[i][0] = f.one();
    for (int k = 1; k <= d_; ++k) pw[i][k] = f.mul(pw[i][k - 1], x[i]);
  }
  std::vector<Elem> out(monomials_.size());
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    Elem v = pw[0][monomials_[m][0]];
    for (int i = 1; i < n_; ++i) v = f.mul(v, pw[i][monomials_[m][i]]);
    out[m] = v;
  }
  return out;
}

std::vector<Elem> MonomialBasis::to_dense(const MultiPoly& p) const {
  if (p.nvars() != n_ || p.degree() != d_) throw Error("MonomialBasis::to_dense: shape mismatch");
  std::vector<Elem> out(monomials_.size());
  for (const auto& [e, c] : p.terms()) out[index(e)] = c;
  return out;
}

MultiPoly MonomialBasis::from_dense(std::span<const Elem> coeffs) const {
  if (coeffs.size() != monomials_.size()) throw Error("MonomialBasis::from_dense: wrong length");
  MultiPoly p(n_, d_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(monomials_[i], coeffs[i]);
  return p;
}

MultiPoly monomial(const FiniteField& f, int nvars, const Exponent& e) {
  MultiPoly p(nvars, exponent_degree(e));
  p.set(e, f.one());
  return p;
}

MultiPoly linear_form(const FiniteField&, std::span<const Elem> coeffs) {
  MultiPoly p(static_cast<int>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e{};
    e[i] = 1;
    p.set(e, coeffs[i]);
  }
  return p;
}

MultiPoly constant(const FiniteField&, int nvars, const Elem& c) {
  MultiPoly p(nvars, 0);
  p.set(Exponent{}, c);
  return p;
}

MultiPoly form_from_ints(const FiniteField& f, int nvars, int degree,
                         const std::vector<std::pair<Exponent, std::int64_t>>& terms) {
  MultiPoly p(nvars, degree);
  for (const auto& [e, c] : terms) p.set(e, f.add(p.coefficient(e), f.from_int(c)));
  return p;
}

Elem evaluate(const FiniteField& f, const MultiPoly& p, std::span<const Elem> x) {
  if (x.size() != static_cast<std::size_t>(p.nvars())) throw Error("evaluate: wrong point length");
  const int n = p.nvars(), d = p.degree();
  std::vector<std::vector<Elem>> powers(n, std::vector<Elem>(d + 1));
  for (int i = 0; i < n; ++i) {
    powers[i][0] = f.one();
    for (int k = 1; k <= d; ++k) powers[i][k] = f.mul(powers[i][k - 1], x[i]);
  }
  Elem sum = f.zero();
  for (const auto& [e, c] : p.terms()) {
    Elem t = c;
    for (int i = 0; i < n; ++i)
      if (e[i]) t = f.mul(t, powers[i][e[i]]);
    sum = f.add(sum, t);
  }
  return sum;
}

namespace {

void require_same_shape(const MultiPoly& a, const MultiPoly& b, const char* op) {
  if (a.nvars() != b.nvars() || a.degree() != b.degree())
    throw Error(std::string(op) + ": forms differ in variable count or degree");
}

}  // namespace

MultiPoly add(const FiniteField& f, const MultiPoly& a, const MultiPoly& b) {
  require_same_shape(a, b, "add");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.set(e, f.add(r.coefficient(e), c));
  return r;
}

MultiPoly sub(const FiniteField& f, const MultiPoly& a, const MultiPoly& b) {
  require_same_shape(a, b, "sub");
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.set(e, f.sub(r.coefficient(e), c));
  return r;
}

MultiPoly scale(const FiniteField& f, const MultiPoly& a, const Elem& c) {
  MultiPoly r(a.nvars(), a.degree());
  if (f.is_zero(c)) return r;
  for (const auto& [e, v] : a.terms()) r.set(e, f.mul(v, c));
  return r;
}

MultiPoly multiply(const FiniteField& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw Error("multiply: forms differ in variable count");
  std::map<Exponent, Elem, MonomialOrder> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      auto [it, inserted] = acc.try_emplace(e, f.zero());
      it->second = f.add(it->second, f.mul(ca, cb));
    }
  MultiPoly r(a.nvars(), a.degree() + b.degree());
  for (const auto& [e, c] : acc) r.set(e, c);
  return r;
}

MultiPoly power(const FiniteField& f, const MultiPoly& a, int e) {
  if (e < 0) throw Error("power: negative exponent");
  MultiPoly r = constant(f, a.nvars(), f.one());
  for (int i = 0; i < e; ++i) r = multiply(f, r, a);
  return r;
}

MultiPoly partial(const FiniteField& f, const MultiPoly& a, int var) {
  if (var < 0 || var >= a.nvars()) throw Error("partial: variable out of range");
  if (a.degree() == 0) return MultiPoly(a.nvars(), 0);
  MultiPoly r(a.nvars(), a.degree() - 1);
  for (const auto& [e, c] : a.terms()) {
    if (e[var] == 0) continue;
    Exponent d = e;
    --d[var];
    r.set(d, f.add(r.coefficient(d), f.mul(c, f.from_int(e[var]))));
  }
  return r;
}

MultiPoly substitute(const FiniteField& f, const MultiPoly& a, const Matrix<Elem>& lin) {
  if (lin.rows() != static_cast<std::size_t>(a.nvars())) throw Error("substitute: matrix row count must equal variable count");
  const int m = static_cast<int>(lin.cols());
  std::vector<std::vector<MultiPoly>> pw(a.nvars());
  for (int i = 0; i < a.nvars(); ++i) {
    std::vector<Elem> row(lin.row(i).begin(), lin.row(i).end());
    const MultiPoly li = linear_form(f, row);
    pw[i].push_back(constant(f, m, f.one()));
    for (int k = 1; k <= a.degree(); ++k) pw[i].push_back(multiply(f, pw[i].back(), li));
  }
  MultiPoly r(m, a.degree());
  for (const auto& [e, c] : a.terms()) {
    MultiPoly t = constant(f, m, c);
    for (int i = 0; i < a.nvars(); ++i)
      if (e[i]) t = multiply(f, t, pw[i][e[i]]);
    r = add(f, r, t);
  }
  return r;
}

MultiPoly divide_exact(const FiniteField& f, const MultiPoly& a, const MultiPoly& g) {
  if (g.is_zero()) throw Error("divide_exact: division by zero");
  if (a.nvars() != g.nvars()) throw Error("divide_exact: forms differ in variable count");
  if (a.is_zero()) return MultiPoly(a.nvars(), std::max(0, a.degree() - g.degree()));
  if (a.degree() < g.degree()) throw Error("divide_exact: divisor has larger degree");
  const auto& [lg_exp, lg_coef] = g.leading();
  const Elem lg_inv = f.inv(lg_coef);
  MultiPoly q(a.nvars(), a.degree() - g.degree());
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const auto [le, lc] = rem.leading();
    Exponent qe{};
    for (int i = 0; i < kMaxVars; ++i) {
      if (le[i] < lg_exp[i])
        throw Error("divide_exact: nonzero residual term " + f.to_string(lc) + "*" +
                    exponent_to_string(le, a.nvars()));
      qe[i] = static_cast<std::uint8_t>(le[i] - lg_exp[i]);
    }
    const Elem qc = f.mul(lc, lg_inv);
    q.set(qe, qc);
    MultiPoly step(a.nvars(), q.degree());
    step.set(qe, qc);
    rem = sub(f, rem, multiply(f, step, g));
  }
  if (multiply(f, q, g) != a) throw Error("divide_exact: product check failed");
  return q;
}

MultiPoly normalize(const FiniteField& f, const MultiPoly& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.leading().second));
}

bool proportional(const FiniteField& f, const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.nvars() != b.nvars() || a.degree() != b.degree()) return false;
  return normalize(f, a) == normalize(f, b);
}

MultiPoly map_coefficients(const MultiPoly& a, const std::function<Elem(const Elem&)>& phi) {
  MultiPoly r(a.nvars(), a.degree());
  for (const auto& [e, c] : a.terms()) r.set(e, phi(c));
  return r;
}

std::string to_string(const FiniteField& f, const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool unit = f.is_one(c) && exponent_degree(e) > 0;
    if (!unit) os << (f.degree() > 1 ? "(" + f.to_string(c) + ")" : f.to_string(c));
    if (exponent_degree(e) > 0) os << (unit ? "" : "*") << exponent_to_string(e, p.nvars());
  }
  return os.str();
}

MultiPoly interpolate(const FiniteField& f, int nvars, int degree, std::span<const Sample> samples) {
  const MonomialBasis basis(nvars, degree);
  const std::size_t N = basis.size();
  Matrix<Elem> aug(samples.size(), N + 1, f.zero());
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const auto row = basis.evaluate(f, samples[s].point);
    for (std::size_t j = 0; j < N; ++j) aug(s, j) = row[j];
    aug(s, N) = samples[s].value;
  }
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == N)
    throw InconsistentSystem("interpolate: no form of degree " + std::to_string(degree) + " fits the samples");
  if (pivots.size() != N)
    throw DimensionMismatch("interpolate: samples do not determine the form", static_cast<long>(N),
                            static_cast<long>(pivots.size()));
  std::vector<Elem> coeffs(N);
  for (std::size_t i = 0; i < N; ++i) coeffs[i] = aug(i, N);
  return basis.from_dense(coeffs);
}

Point random_point(const FiniteField& f, int nvars, Rng& rng) {
  Point p(nvars);
  for (auto& x : p) x = f.random(rng);
  return p;
}

MultiPoly interpolate_from(const FiniteField& f, int nvars, int degree,
                           const std::function<Elem(const Point&)>& oracle, Rng& rng,
                           InterpolationOptions opts) {
  const std::size_t count = form_space_dim(nvars, degree) + opts.extra_samples;
  std::vector<Sample> samples;
  samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point x = random_point(f, nvars, rng);
    Elem v = oracle(x);
    samples.push_back({std::move(x), v});
  }
  MultiPoly p = interpolate(f, nvars, degree, samples);
  for (std::size_t i = 0; i < opts.held_out; ++i) {
    const Point x = random_point(f, nvars, rng);
    if (evaluate(f, p, x) != oracle(x)) throw Error("interpolate_from: held-out point mismatch");
  }
  return p;
}

}  // namespace lagten
