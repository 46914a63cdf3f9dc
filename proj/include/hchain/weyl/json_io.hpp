#pragma once

#include "hchain/exact/json_io.hpp"
#include "hchain/weyl/operator.hpp"

namespace hchain::weyl {

using exact::json;

/// Term list in derivative form: each stored x^a p^b c becomes
/// c (-i)^b hbar^b x^a d^b, reported with explicit hbar and i powers.
inline json to_json(const DiffOperator& f) {
  const auto& t = *f.vars();
  const auto ih = t.imaginary(), hh = t.hbar();
  json out;
  out["symbols"] = exact::table_to_json(t);
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json pos = json::array(), der = json::array(), par = json::object();
    int b = 0;
    for (auto xi : t.positions()) pos.push_back(m.e[xi]);
    for (auto pi : t.momenta()) {
      der.push_back(m.e[pi]);
      b += m.e[pi];
    }
    for (auto k : t.params())
      if (static_cast<int>(k) != ih && static_cast<int>(k) != hh && m.e[k]) par[t.name(k)] = m.e[k];
    int ipow = (ih >= 0 ? m.e[static_cast<std::size_t>(ih)] : 0) + 3 * b;
    Scalar cc = c;
    if ((ipow % 4) >= 2) cc = -cc;
    terms.push_back({{"positions", pos},
                     {"derivatives", der},
                     {"params", par},
                     {"hbar", (hh >= 0 ? m.e[static_cast<std::size_t>(hh)] : 0) + b},
                     {"i_power", ipow % 2},
                     {"coeff", cc.get_str()}});
  }
  out["terms"] = terms;
  return out;
}

inline DiffOperator operator_from_json(const json& j, exact::VarTablePtr vars = nullptr) {
  if (!vars) vars = exact::table_from_json(j.at("symbols"));
  const auto& t = *vars;
  DiffOperator r(vars);
  for (const auto& term : j.at("terms")) {
    Monomial m;
    auto pos = t.positions();
    auto mom = t.momenta();
    int b = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) m.e[pos[k]] = term.at("positions")[k].get<std::int16_t>();
    for (std::size_t k = 0; k < mom.size(); ++k) {
      m.e[mom[k]] = term.at("derivatives")[k].get<std::int16_t>();
      b += m.e[mom[k]];
    }
    for (auto& [name, e] : term.at("params").items()) m.e[t.index(name)] = e.get<std::int16_t>();
    int h = term.at("hbar").get<int>() - b;
    if (h < 0) throw exact::StructuralError("derivative term without matching hbar power");
    m.e[static_cast<std::size_t>(t.hbar())] = static_cast<std::int16_t>(h);
    // d^b = (i/hbar)^b p^b
    int ipow = term.at("i_power").get<int>() + b;
    Scalar c(term.at("coeff").get<std::string>());
    if ((ipow % 4) >= 2) c = -c;
    m.e[static_cast<std::size_t>(t.imaginary())] = static_cast<std::int16_t>(ipow % 2);
    r.add_term(m, c);
  }
  return r;
}

}  // namespace hchain::weyl
