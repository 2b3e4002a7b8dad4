#include "lensform/json_io.hpp"

#include <sstream>

namespace lensform {

std::string to_decimal(const Int& x) { return x.str(); }

Int int_from_decimal(const std::string& s) { return Int(s); }

std::string to_fraction(const Rat& x) {
  std::ostringstream os;
  os << numerator(x) << "/" << denominator(x);
  return os.str();
}

Rat rat_from_fraction(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

namespace {

json optional_long(const std::optional<long>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<long> optional_long_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

}  // namespace

void to_json(json& j, const FiniteAbelianGroup& g) {
  std::vector<std::string> factors;
  for (const Int& d : g.invariant_factors) factors.push_back(to_decimal(d));
  j = json{{"invariant_factors", factors}, {"order", to_decimal(g.order())}};
}

void from_json(const json& j, FiniteAbelianGroup& g) {
  g.invariant_factors.clear();
  for (const auto& s : j.at("invariant_factors"))
    g.invariant_factors.push_back(int_from_decimal(s.get<std::string>()));
}

void to_json(json& j, const ClassificationVerdict& v) {
  j = json{{"comparable", v.comparable},
           {"isometric", v.isometric},
           {"isometry_witness", optional_long(v.isometry_witness)},
           {"homotopy_equivalent", v.homotopy_equivalent},
           {"homotopy_witness", optional_long(v.homotopy_witness)},
           {"tangentially_equivalent", v.tangentially_equivalent},
           {"tangential_witness", optional_long(v.tangential_witness)},
           {"conclusions", v.conclusions}};
}

void from_json(const json& j, ClassificationVerdict& v) {
  v.comparable = j.at("comparable").get<bool>();
  v.isometric = j.at("isometric").get<bool>();
  v.isometry_witness = optional_long_from(j.at("isometry_witness"));
  v.homotopy_equivalent = j.at("homotopy_equivalent").get<bool>();
  v.homotopy_witness = optional_long_from(j.at("homotopy_witness"));
  v.tangentially_equivalent = j.at("tangentially_equivalent").get<bool>();
  v.tangential_witness = optional_long_from(j.at("tangential_witness"));
  v.conclusions = j.at("conclusions").get<std::vector<std::string>>();
}

void to_json(json& j, const ThicknessFiltration& f) {
  j = json{{"p", f.p},
           {"n", f.n},
           {"m", f.m},
           {"t_order", to_decimal(f.t_order)},
           {"tprime_order", to_decimal(f.tprime_order)},
           {"exceptional", f.exceptional},
           {"quotient_orders", f.quotient_orders},
           {"positions_known", f.positions_known},
           {"exceptional_j0", optional_long(f.exceptional_j0)},
           {"smooth_j0_bound", optional_long(f.smooth_j0_bound)},
           {"note", f.note},
           {"e0k_order", to_decimal(f.e0k_order)},
           {"stable_codim", f.stable_codim}};
}

void from_json(const json& j, ThicknessFiltration& f) {
  f.p = j.at("p").get<long>();
  f.n = j.at("n").get<long>();
  f.m = j.at("m").get<long>();
  f.t_order = int_from_decimal(j.at("t_order").get<std::string>());
  f.tprime_order = int_from_decimal(j.at("tprime_order").get<std::string>());
  f.exceptional = j.at("exceptional").get<bool>();
  f.quotient_orders = j.at("quotient_orders").get<std::vector<long>>();
  f.positions_known = j.at("positions_known").get<bool>();
  f.exceptional_j0 = optional_long_from(j.at("exceptional_j0"));
  f.smooth_j0_bound = optional_long_from(j.at("smooth_j0_bound"));
  f.note = j.at("note").get<std::string>();
  f.e0k_order = int_from_decimal(j.at("e0k_order").get<std::string>());
  f.stable_codim = j.at("stable_codim").get<long>();
}

namespace {

const char* codim_state_name(CodimState s) {
  switch (s) {
    case CodimState::Equal: return "equal";
    case CodimState::Unequal: return "unequal";
    default: return "undecided";
  }
}

CodimState codim_state_from(const std::string& s) {
  if (s == "equal") return CodimState::Equal;
  if (s == "unequal") return CodimState::Unequal;
  return CodimState::Undecided;
}

}  // namespace

void to_json(json& j, const CodimVerdict& v) {
  j = json{{"codim", v.codim}, {"state", codim_state_name(v.state)}, {"note", v.note}};
}

void from_json(const json& j, CodimVerdict& v) {
  v.codim = j.at("codim").get<long>();
  v.state = codim_state_from(j.at("state").get<std::string>());
  v.note = j.at("note").get<std::string>();
}

void to_json(json& j, const ThicknessReport& r) {
  j = json{{"comparable", r.comparable}, {"reason", r.reason},     {"p", r.p},
           {"n", r.n},                   {"stable_codim", r.stable_codim},
           {"verdicts", r.verdicts},     {"detectors", r.detectors}};
}

void from_json(const json& j, ThicknessReport& r) {
  r.comparable = j.at("comparable").get<bool>();
  r.reason = j.at("reason").get<std::string>();
  r.p = j.at("p").get<long>();
  r.n = j.at("n").get<long>();
  r.stable_codim = j.at("stable_codim").get<long>();
  r.verdicts = j.at("verdicts").get<std::vector<CodimVerdict>>();
  r.detectors = j.at("detectors").get<std::vector<std::string>>();
}

namespace {

const char* k0_name(K0Triviality k) {
  switch (k) {
    case K0Triviality::True: return "true";
    case K0Triviality::False: return "false";
    default: return "unknown-under-plus-part";
  }
}

K0Triviality k0_from(const std::string& s) {
  if (s == "true") return K0Triviality::True;
  if (s == "false") return K0Triviality::False;
  return K0Triviality::UnknownUnderPlusPart;
}

}  // namespace

void to_json(json& j, const LowCodimDetectors& d) {
  j = json{{"p", d.p},
           {"wh_rank", d.wh_rank},
           {"h_minus", to_decimal(d.h_minus_value)},
           {"k0_trivial", k0_name(d.k0_trivial)},
           {"tate_h0_note", d.tate_h0_note}};
}

void from_json(const json& j, LowCodimDetectors& d) {
  d.p = j.at("p").get<long>();
  d.wh_rank = j.at("wh_rank").get<long>();
  d.h_minus_value = int_from_decimal(j.at("h_minus").get<std::string>());
  d.k0_trivial = k0_from(j.at("k0_trivial").get<std::string>());
  d.tate_h0_note = j.at("tate_h0_note").get<std::string>();
}

json cyclotomic_to_json(const Cyclotomic& x) {
  std::vector<std::string> coeffs;
  const RatVec& c = x.coefficients();
  for (Eigen::Index i = 0; i < c.size(); ++i) coeffs.push_back(to_fraction(c(i)));
  return json{{"p", x.prime()}, {"coefficients", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j, const OddPrime& p) {
  auto coeffs = j.at("coefficients").get<std::vector<std::string>>();
  RatVec c(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = rat_from_fraction(coeffs[i]);
  return Cyclotomic(p, std::move(c));
}

json rho_comparison_to_json(const RhoComparison& r, long p) {
  json diff = json::array();
  for (const Cyclotomic& x : r.difference) diff.push_back(cyclotomic_to_json(x));
  return json{{"comparable", r.comparable},
              {"reason", r.reason},
              {"witness", r.witness},
              {"oriented_zero", r.oriented_zero},
              {"unoriented_zero", r.unoriented_zero},
              {"p", p},
              {"difference", diff}};
}

}  // namespace lensform
