#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "lagten/lattice.hpp"
#include "lagten/poly.hpp"
#include "lagten/tens.hpp"

namespace lagten {

using Json = nlohmann::json;

Json to_json(const FieldSpec& s);
FieldSpec field_from_json(const Json& j);

/// Prime-field elements as integers, extension elements as coefficient arrays.
Json to_json(const FiniteField& f, const Elem& a);
Elem elem_from_json(const FiniteField& f, const Json& j);

Json to_json(const FiniteField& f, const Plane& p);
Plane plane_from_json(const FiniteField& f, const Json& j);

/// {"field", "planes": [{"rows": ...}], "provenance": {...}}
Json to_json(const TenConfig& cfg);
TenConfig ten_from_json(const Json& j);

/// {"n", "d", "terms": [{"exp": [...], "c": ...}]}
Json to_json(const FiniteField& f, const MultiPoly& p);
MultiPoly form_from_json(const FiniteField& f, const Json& j);

/// Integers that fit in 64 bits stay numbers, others become decimal strings.
Json to_json(const mpz_class& z);
Json to_json(const IntMatrix& m);
/// Accepts integers or decimal strings.
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const FiniteField& f, const Point& x);
Point point_from_json(const FiniteField& f, const Json& j);

Json read_json_file(const std::string& path);
void write_json(const Json& j, const std::string& path);  // "-" is standard output

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace lagten
