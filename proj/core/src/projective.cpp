#include "lagten/projective.hpp"

#include <limits>

#include "lagten/error.hpp"

namespace lagten {

std::uint64_t projective_point_count(std::uint64_t q, int ncoords) {
  // 1 + q + ... + q^{n-1}
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i < ncoords; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - term) throw Error("projective_point_count: overflow");
    total += term;
    if (i + 1 < ncoords) {
      if (term > std::numeric_limits<std::uint64_t>::max() / q) throw Error("projective_point_count: overflow");
      term *= q;
    }
  }
  return total;
}

std::uint64_t for_each_projective_point(const FiniteField& f, int ncoords,
                                        const std::function<bool(const Point&)>& visit) {
  const std::uint64_t q = f.order();
  std::uint64_t visited = 0;
  Point x(ncoords, f.zero());
  std::vector<std::uint64_t> idx(ncoords, 0);
  // The leading one sits at position `lead`; the later coordinates run over F^{n-1-lead}.
  for (int lead = ncoords - 1; lead >= 0; --lead) {
    std::fill(x.begin(), x.end(), f.zero());
    x[lead] = f.one();
    const int free = ncoords - 1 - lead;
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      ++visited;
      if (!visit(x)) return visited;
      int pos = ncoords - 1;
      while (pos > lead) {
        if (++idx[pos] < q) {
          x[pos] = f.from_index(idx[pos]);
          break;
        }
        idx[pos] = 0;
        x[pos] = f.zero();
        --pos;
      }
      if (pos == lead || free == 0) break;
    }
  }
  return visited;
}

bool is_zero_point(const FiniteField& f, const Point& x) {
  for (const auto& c : x)
    if (!f.is_zero(c)) return false;
  return true;
}

Point normalize_point(const FiniteField& f, const Point& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    const auto inv = f.inv(x[i]);
    Point y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) y[j] = f.mul(x[j], inv);
    return y;
  }
  throw Error("normalize_point: zero vector");
}

bool same_point(const FiniteField& f, const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  return normalize_point(f, a) == normalize_point(f, b);
}

bool defined_over_proper_subfield(const FiniteField& f, const Point& normalized) {
  const int r = f.degree();
  for (int s = 1; s < r; ++s) {
    if (r % s != 0) continue;
    const std::uint64_t ps = [&] {
      std::uint64_t v = 1;
      for (int i = 0; i < s; ++i) v *= f.characteristic();
      return v;
    }();
    bool fixed = true;
    for (const auto& c : normalized)
      if (f.pow(c, ps) != c) {
        fixed = false;
        break;
      }
    if (fixed) return true;
  }
  return false;
}

std::vector<LevelPoints> scan_levels(std::uint32_t p, int ncoords, int max_level, std::uint64_t budget,
                                     std::uint64_t seed,
                                     const std::function<bool(const FiniteField&, const Point&)>& test) {
  std::uint64_t total = 0;
  std::uint64_t q = 1;
  for (int r = 1; r <= max_level; ++r) {
    q *= p;
    const auto n = projective_point_count(q, ncoords);
    if (total > budget || n > budget - total)
      throw BudgetExceeded("scan_levels: P^" + std::to_string(ncoords - 1) + " up to level " +
                           std::to_string(max_level) + " exceeds the point budget of " + std::to_string(budget));
    total += n;
  }
  std::vector<LevelPoints> out;
  for (int r = 1; r <= max_level; ++r) {
    LevelPoints level{r == 1 ? FiniteField(p) : ext_field(p, r, seed + r), r, {}};
    for_each_projective_point(level.field, ncoords, [&](const Point& x) {
      if (r > 1 && defined_over_proper_subfield(level.field, x)) return true;
      if (test(level.field, x)) level.points.push_back(x);
      return true;
    });
    out.push_back(std::move(level));
  }
  return out;
}

}  // namespace lagten
