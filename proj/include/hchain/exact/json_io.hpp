#pragma once

#include <json.hpp>

#include "hchain/exact/poly.hpp"

namespace hchain::exact {

using json = nlohmann::ordered_json;

inline const char* kind_name(VarKind k) {
  switch (k) {
    case VarKind::position:
      return "position";
    case VarKind::momentum:
      return "momentum";
    default:
      return "param";
  }
}

inline json table_to_json(const VarTable& t) {
  json syms = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json s;
    s["name"] = t.name(i);
    s["kind"] = kind_name(t.kind(i));
    s["laurent"] = static_cast<bool>(t.laurent(i));
    if (static_cast<int>(i) == t.hbar()) s["role"] = "hbar";
    if (static_cast<int>(i) == t.imaginary()) s["role"] = "imaginary";
    syms.push_back(s);
  }
  return syms;
}

/// Rebuilds a table from table_to_json output.
inline VarTablePtr table_from_json(const json& syms) {
  std::vector<std::string> pos, mom, params, lparams;
  std::string hbar, imag;
  for (const auto& s : syms) {
    std::string n = s.at("name"), k = s.at("kind");
    if (k == "position")
      pos.push_back(n);
    else if (k == "momentum")
      mom.push_back(n);
    else if (s.value("laurent", false))
      lparams.push_back(n);
    else
      params.push_back(n);
    std::string role = s.value("role", "");
    if (role == "hbar") hbar = n;
    if (role == "imaginary") imag = n;
  }
  VarTable::Builder b;
  b.phase(pos, mom).params(params).laurent_params(lparams);
  if (!hbar.empty()) b.hbar(hbar);
  if (!imag.empty()) b.imaginary(imag);
  return b.build();
}

/// Canonical term list: exponent vectors in ascending graded-lex order,
/// coefficients as reduced fraction strings.
inline json to_json(const Poly& p) {
  json out;
  out["symbols"] = table_to_json(*p.vars());
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json e = json::array();
    for (std::size_t i = 0; i < p.vars()->size(); ++i) e.push_back(m.e[i]);
    terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  }
  out["terms"] = terms;
  return out;
}

/// Parameter-only expression as a compact list of {monomial, coeff}.
inline json coefficients_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < p.vars()->size(); ++i)
      if (m.e[i]) mono[p.vars()->name(i)] = m.e[i];
    terms.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
  }
  return terms;
}

inline Poly poly_from_json(const json& j, VarTablePtr vars = nullptr) {
  if (!vars) vars = table_from_json(j.at("symbols"));
  Poly p(vars);
  for (const auto& t : j.at("terms")) {
    Monomial m;
    const auto& e = t.at("exp");
    if (e.size() != vars->size()) throw StructuralError("exponent vector length mismatch");
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = e[i].get<std::int16_t>();
    p.add_term(m, Scalar(t.at("coeff").get<std::string>()));
  }
  return p;
}

}  // namespace hchain::exact
