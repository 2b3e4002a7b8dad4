#pragma once

// JSON serialization for the report types.  Exact integers and rationals
// are emitted as decimal strings so round-trips are lossless; the schema
// is versioned through a top-level "schema": "lensform/1" field on every
// CLI document.

#include "lensform/ktorsion.hpp"
#include "lensform/lens.hpp"
#include "lensform/oracle.hpp"
#include "lensform/rho.hpp"
#include "lensform/smith.hpp"
#include "lensform/thickness.hpp"

#include <nlohmann/json.hpp>

namespace lensform {

inline constexpr const char* kSchemaTag = "lensform/1";

using nlohmann::json;

std::string to_decimal(const Int& x);
Int int_from_decimal(const std::string& s);
std::string to_fraction(const Rat& x);
Rat rat_from_fraction(const std::string& s);

void to_json(json& j, const FiniteAbelianGroup& g);
void from_json(const json& j, FiniteAbelianGroup& g);

void to_json(json& j, const ClassificationVerdict& v);
void from_json(const json& j, ClassificationVerdict& v);

void to_json(json& j, const ThicknessFiltration& f);
void from_json(const json& j, ThicknessFiltration& f);

void to_json(json& j, const CodimVerdict& v);
void from_json(const json& j, CodimVerdict& v);

void to_json(json& j, const ThicknessReport& r);
void from_json(const json& j, ThicknessReport& r);

void to_json(json& j, const LowCodimDetectors& d);
void from_json(const json& j, LowCodimDetectors& d);

json rho_comparison_to_json(const RhoComparison& r, long p);
json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j, const OddPrime& p);

}  // namespace lensform
