#pragma once

#include <cstdio>
#include <json.hpp>
#include <string>

#include "hchain/numeric/action.hpp"
#include "hchain/numeric/grid.hpp"
#include "hchain/numeric/integrator.hpp"
#include "hchain/numeric/oracle.hpp"

namespace hchain::numeric {

using json = nlohmann::ordered_json;

/// Floats are written with ten significant digits so reruns are byte-identical.
inline json fixed(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::stod(buf);
}

inline json fixed(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(fixed(x));
  return a;
}

inline json to_json(const TrajectoryCheck& c) {
  json j;
  j["initial_state"] = fixed(c.initial);
  j["step"] = fixed(c.settings.step);
  j["horizon"] = fixed(c.settings.horizon);
  j["order"] = c.settings.order;
  j["floor"] = fixed(c.settings.floor);
  j["steps"] = c.steps;
  j["closest_approach"] = fixed(c.closest_approach);
  json d = json::object();
  for (std::size_t i = 0; i < c.names.size(); ++i)
    d[c.names[i]] = {{"initial", fixed(c.initial_values[i])}, {"drift", fixed(c.drift[i])}};
  j["integrals"] = d;
  return j;
}

inline json to_json(const RadialOracle& r) {
  return {{"omega", fixed(r.problem.omega)},
          {"nu", fixed(r.problem.nu)},
          {"hbar", fixed(r.problem.hbar)},
          {"points", r.grid.points},
          {"eps", fixed(r.grid.eps)},
          {"L", fixed(r.grid.length)},
          {"stretch", fixed(r.grid.stretch)},
          {"analytic", fixed(r.analytic)},
          {"grid", fixed(r.numeric)},
          {"relative_error", fixed(r.relative_error)},
          {"estimated_error", fixed(r.estimated_error)}};
}

inline json to_json(const OracleSpectrum& o) {
  json j;
  j["chain"] = systems::chain_name(o.chain);
  j["units"] = "hbar*mu";
  json mu = json::array();
  for (const auto& m : o.mu) mu.push_back(m.get_str());
  j["mu"] = mu;
  j["cutoff"] = o.cutoff.get_str();
  json lv = json::array();
  for (const auto& l : o.levels) lv.push_back({{"energy", l.energy.get_str()}, {"multiplicity", l.multiplicity}});
  j["levels"] = lv;
  return j;
}

inline json to_json(const Containment& c) {
  return {{"rows", c.rows}, {"top_energy_found", c.top_found}, {"joint_eigenvalue_found", c.joint_found},
          {"missing", c.missing}, {"holds", c.holds()}};
}

inline json to_json(const Completeness& c) {
  json j;
  j["chain"] = systems::chain_name(c.chain);
  json mu = json::array();
  for (const auto& m : c.mu) mu.push_back(m.get_str());
  j["mu"] = mu;
  j["cutoff"] = c.cutoff.get_str();
  j["separable_states"] = c.oracle_states;
  json br = json::array();
  for (const auto& b : c.branches)
    br.push_back({{"branches", b.branches},
                  {"states", b.states},
                  {"outside_link", b.outside_link},
                  {"unmapped", b.unmapped},
                  {"pattern", b.pattern()}});
  j["branch_combinations"] = br;
  j["duplicates"] = c.duplicates;
  j["missing"] = c.missing;
  j["unmapped"] = c.unmapped;
  j["bijective"] = c.bijective();
  return j;
}

inline json to_json(const ActionReport& r) {
  json res = json::object();
  for (const auto& x : r.residuals) res[x.name] = fixed(x.max_relative);
  return {{"test_function", r.test_function}, {"points", r.points}, {"max_relative_residual", res}};
}

}  // namespace hchain::numeric
