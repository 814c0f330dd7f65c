#include "lagten/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lagten/error.hpp"

namespace lagten {

Json to_json(const FieldSpec& s) {
  Json j{{"p", s.p}, {"k", s.k}};
  if (!s.min_poly.empty()) j["min_poly"] = s.min_poly;
  return j;
}

FieldSpec field_from_json(const Json& j) {
  FieldSpec s;
  s.p = j.at("p").get<std::uint32_t>();
  s.k = j.value("k", 1);
  if (j.contains("min_poly")) s.min_poly = j.at("min_poly").get<std::vector<std::uint32_t>>();
  return s;
}

Json to_json(const FiniteField& f, const Elem& a) {
  if (f.degree() == 1) return a.c[0];
  return f.coefficients(a);
}

Elem elem_from_json(const FiniteField& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_array()) return f.from_coefficients(j.get<std::vector<std::int64_t>>());
  throw Error("elem_from_json: expected an integer or a coefficient array");
}

Json to_json(const FiniteField& f, const Plane& p) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < 6; ++k) row.push_back(to_json(f, p.rows()(i, k)));
    rows.push_back(row);
  }
  return Json{{"rows", rows}};
}

Plane plane_from_json(const FiniteField& f, const Json& j) {
  const Json& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != 3) throw Error("plane_from_json: expected three rows");
  FMatrix m(3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 6) throw Error("plane_from_json: rows need six entries");
    for (std::size_t k = 0; k < 6; ++k) m(i, k) = elem_from_json(f, rows[i][k]);
  }
  return Plane(f, m);
}

Json to_json(const TenConfig& cfg) {
  const FiniteField f(cfg.field);
  Json planes = Json::array();
  for (const auto& p : cfg.planes) planes.push_back(to_json(f, p));
  return Json{{"field", to_json(cfg.field)},
              {"planes", planes},
              {"provenance",
               {{"recipe", cfg.provenance.recipe}, {"seed", cfg.provenance.seed}, {"source", cfg.provenance.source}}}};
}

TenConfig ten_from_json(const Json& j) {
  TenConfig cfg;
  cfg.field = field_from_json(j.at("field"));
  const FiniteField f(cfg.field);
  for (const auto& p : j.at("planes")) cfg.planes.push_back(plane_from_json(f, p));
  if (j.contains("provenance")) {
    const Json& pv = j["provenance"];
    cfg.provenance.recipe = pv.value("recipe", "");
    cfg.provenance.seed = pv.value("seed", std::uint64_t{0});
    cfg.provenance.source = pv.value("source", "");
  }
  return cfg;
}

Json to_json(const FiniteField& f, const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> exp(e.begin(), e.begin() + p.nvars());
    terms.push_back({{"exp", exp}, {"c", to_json(f, c)}});
  }
  return Json{{"n", p.nvars()}, {"d", p.degree()}, {"terms", terms}};
}

MultiPoly form_from_json(const FiniteField& f, const Json& j) {
  MultiPoly p(j.at("n").get<int>(), j.at("d").get<int>());
  for (const auto& t : j.at("terms")) {
    const auto exp = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exp.size()) != p.nvars()) throw Error("form_from_json: exponent length mismatch");
    Exponent e{};
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] < 0 || exp[i] > 255) throw Error("form_from_json: exponent out of range");
      e[i] = static_cast<std::uint8_t>(exp[i]);
    }
    p.set(e, elem_from_json(f, t.at("c")));
  }
  return p;
}

Json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("int_matrix_from_json: expected a non-empty array of rows");
  const std::size_t cols = j.at(0).size();
  IntMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error("int_matrix_from_json: ragged rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const Json& e = j[i][k];
      if (e.is_number_integer())
        m(i, k) = mpz_class(std::to_string(e.get<long long>()));
      else if (e.is_string())
        m(i, k) = mpz_class(e.get<std::string>());
      else
        throw Error("int_matrix_from_json: entries must be integers");
    }
  }
  return m;
}

Json to_json(const FiniteField& f, const Point& x) {
  Json a = Json::array();
  for (const auto& c : x) a.push_back(to_json(f, c));
  return a;
}

Point point_from_json(const FiniteField& f, const Json& j) {
  if (!j.is_array()) throw Error("point_from_json: expected an array of coordinates");
  Point x;
  for (const auto& c : j) x.push_back(elem_from_json(f, c));
  return x;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_json(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lagten
