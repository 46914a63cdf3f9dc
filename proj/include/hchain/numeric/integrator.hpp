#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hchain/exact/poly.hpp"

namespace hchain::numeric {

using exact::Poly;
using exact::Scalar;
using exact::VarTablePtr;

/// A trajectory came closer to a coordinate singularity than the floor.
class SingularityApproach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial with its parameters bound, evaluated on phase points
/// (positions then momenta, table order).
class PhaseFunction {
 public:
  PhaseFunction() = default;
  PhaseFunction(const Poly& f, const std::map<std::string, double>& params) {
    const auto& t = *f.vars();
    dim_ = t.positions().size() + t.momenta().size();
    std::vector<double> pv(t.size(), 0.0);
    for (std::size_t i = dim_; i < t.size(); ++i) {
      auto it = params.find(t.name(i));
      if (it != params.end()) pv[i] = it->second;
    }
    for (const auto& [m, c] : f.terms()) {
      double coef = c.get_d();
      for (std::size_t i = dim_; i < t.size(); ++i)
        if (m.e[i]) {
          if (!params.count(t.name(i)))
            throw std::invalid_argument("no value for parameter '" + t.name(i) + "'");
          coef *= std::pow(pv[i], m.e[i]);
        }
      if (coef == 0.0) continue;
      Term term{coef, {}};
      for (std::size_t i = 0; i < dim_; ++i)
        if (m.e[i]) term.powers.emplace_back(i, m.e[i]);
      terms_.push_back(std::move(term));
    }
  }

  double operator()(const std::vector<double>& z) const {
    double s = 0.0;
    for (const auto& t : terms_) {
      double v = t.coef;
      for (auto [i, e] : t.powers) {
        double b = e < 0 ? 1.0 / z[i] : z[i];
        for (int k = std::abs(e); k > 0; --k) v *= b;
      }
      s += v;
    }
    return s;
  }

  std::size_t dimension() const { return dim_; }

  /// Lowest power of phase variable i among the terms that survived binding.
  int min_power(std::size_t i) const {
    int m = 0;
    for (const auto& t : terms_)
      for (auto [j, e] : t.powers)
        if (j == i) m = std::min(m, e);
    return m;
  }

 private:
  struct Term {
    double coef;
    std::vector<std::pair<std::size_t, int>> powers;
  };
  std::vector<Term> terms_;
  std::size_t dim_ = 0;
};

/// H = T(p) + V(x), both parts with their gradients.
struct SplitHamiltonian {
  Poly kinetic, potential;
  std::vector<Poly> dT, dV;  // dT/dp_k, dV/dx_k
};

inline SplitHamiltonian split(const Poly& H) {
  const auto& t = *H.vars();
  auto pos = t.positions(), mom = t.momenta();
  SplitHamiltonian s{Poly(H.vars()), Poly(H.vars()), {}, {}};
  for (const auto& [m, c] : H.terms()) {
    bool has_x = std::any_of(pos.begin(), pos.end(), [&](auto i) { return m.e[i] != 0; });
    bool has_p = std::any_of(mom.begin(), mom.end(), [&](auto i) { return m.e[i] != 0; });
    if (has_x && has_p) throw std::invalid_argument("Hamiltonian is not of the form T(p) + V(x)");
    (has_p ? s.kinetic : s.potential).add_term(m, c);
  }
  for (auto i : mom) s.dT.push_back(s.kinetic.derivative(i));
  for (auto i : pos) s.dV.push_back(s.potential.derivative(i));
  return s;
}

/// Generic coupling values for a trajectory: 1/2 for frequencies, 0 for
/// shifts and 3/8 for every inverse-square coupling.
inline std::map<std::string, double> generic_couplings(const exact::VarTablePtr& t) {
  std::map<std::string, double> p;
  for (auto i : t->params()) {
    const auto& n = t->name(i);
    if (static_cast<int>(i) == t->hbar() || static_cast<int>(i) == t->imaginary() || n == "H") continue;
    if (n == "kappa" || n == "lambda" || n == "k")
      p[n] = 0.5;
    else if (n == "r" || n == "s")
      p[n] = 0.0;
    else
      p[n] = 0.375;
  }
  return p;
}

/// Positions, then momenta.
inline std::vector<double> generic_state(std::size_t dof) {
  const double x0[] = {1.1, 0.7, 0.9, 0.6}, p0[] = {0.3, -0.4, 0.2, -0.1};
  if (dof > 4) throw std::invalid_argument("no generic state for more than 4 degrees of freedom");
  std::vector<double> z(x0, x0 + dof);
  z.insert(z.end(), p0, p0 + dof);
  return z;
}

struct IntegratorSettings {
  double step = 1e-4;
  double horizon = 10.0;
  /// Smallest allowed |x_k| for coordinates H is singular in.
  double floor = 1e-3;
  /// 2: one Strang step; 4: triple-jump composition of Strang steps.
  int order = 2;
};

struct TrajectoryCheck {
  std::vector<double> initial;
  IntegratorSettings settings;
  std::size_t steps = 0;
  std::vector<std::string> names;
  std::vector<double> initial_values;
  /// max_t |I(t) - I(0)| / |I(0)|
  std::vector<double> drift;
  double closest_approach = 0.0;

  double max_drift() const { return drift.empty() ? 0.0 : *std::max_element(drift.begin(), drift.end()); }
  double drift_of(const std::string& n) const {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw std::out_of_range("no integral named " + n);
    return drift[static_cast<std::size_t>(it - names.begin())];
  }
};

/// Strang splitting (kick, drift, kick) of Hamilton's equations for H with
/// the named integrals monitored after every step.
inline TrajectoryCheck integrate_and_check(const Poly& H, const std::vector<std::pair<std::string, Poly>>& integrals,
                                           const std::map<std::string, double>& params, std::vector<double> z,
                                           const IntegratorSettings& cfg) {
  const auto& t = *H.vars();
  const std::size_t n = t.positions().size();
  if (z.size() != 2 * n) throw std::invalid_argument("phase point has the wrong dimension");
  auto sh = split(H);
  std::vector<PhaseFunction> dT, dV, I;
  for (const auto& f : sh.dT) dT.emplace_back(f, params);
  for (const auto& f : sh.dV) dV.emplace_back(f, params);
  TrajectoryCheck out;
  out.initial = z;
  out.settings = cfg;
  for (const auto& [name, f] : integrals) {
    out.names.push_back(name);
    I.emplace_back(f, params);
    out.initial_values.push_back(I.back()(z));
  }
  out.drift.assign(I.size(), 0.0);
  const double h = cfg.step;
  out.steps = static_cast<std::size_t>(std::llround(cfg.horizon / h));
  out.closest_approach = INFINITY;
  std::vector<std::size_t> singular;
  PhaseFunction bound_h(H, params);
  for (auto k : t.positions())
    if (bound_h.min_power(k) < 0) singular.push_back(k);
  std::vector<double> g(n);
  auto kick = [&](double tau) {
    for (std::size_t k = 0; k < n; ++k) g[k] = dV[k](z);
    for (std::size_t k = 0; k < n; ++k) z[n + k] -= tau * g[k];
  };
  auto drift = [&](double tau) {
    for (std::size_t k = 0; k < n; ++k) g[k] = dT[k](z);
    for (std::size_t k = 0; k < n; ++k) z[k] += tau * g[k];
  };
  auto strang = [&](double tau) {
    kick(tau / 2);
    drift(tau);
    kick(tau / 2);
  };
  if (cfg.order != 2 && cfg.order != 4) throw std::invalid_argument("integrator order must be 2 or 4");
  const double w1 = 1.0 / (2.0 - std::cbrt(2.0)), w0 = 1.0 - 2.0 * w1;
  for (std::size_t s = 0; s < out.steps; ++s) {
    if (cfg.order == 2) {
      strang(h);
    } else {
      strang(w1 * h);
      strang(w0 * h);
      strang(w1 * h);
    }
    for (auto k : singular) {
      double a = std::abs(z[k]);
      out.closest_approach = std::min(out.closest_approach, a);
      if (a < cfg.floor)
        throw SingularityApproach(t.name(k) + " reached |" + t.name(k) + "| = " + std::to_string(a) + " at step " +
                                  std::to_string(s + 1));
    }
    for (std::size_t i = 0; i < I.size(); ++i) {
      double d = std::abs(I[i](z) - out.initial_values[i]) / std::abs(out.initial_values[i]);
      out.drift[i] = std::max(out.drift[i], d);
    }
  }
  return out;
}

}  // namespace hchain::numeric
