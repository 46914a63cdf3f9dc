#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hchain/weyl/apply.hpp"

namespace hchain::numeric {

using exact::Poly;
using weyl::DiffOperator;

using weyl::apply;

struct ActionResidual {
  std::string name;
  /// max over points of |H(Xf) - X(Hf)| / (|H(Xf)| + |X(Hf)|)
  double max_relative = 0.0;
};

struct ActionReport {
  std::string test_function;
  std::size_t points = 0;
  std::vector<ActionResidual> residuals;

  double worst() const {
    double w = 0;
    for (const auto& r : residuals) w = std::max(w, r.max_relative);
    return w;
  }
};

/// Sample positions in [lo, hi]^n, away from the coordinate planes.
inline std::vector<std::vector<double>> sample_points(std::size_t n, std::size_t count, unsigned seed, double lo = 0.3,
                                                      double hi = 2.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<std::vector<double>> pts(count, std::vector<double>(n));
  for (auto& p : pts)
    for (auto& x : p) x = u(rng);
  return pts;
}

/// Applies H and each operator X to f symbolically, evaluates H(Xf) and
/// X(Hf) separately in floating point and reports their relative mismatch.
inline ActionReport quantum_action_check(const DiffOperator& H, const std::vector<std::pair<std::string, DiffOperator>>& ops,
                                         const Poly& f, const std::map<std::string, double>& params,
                                         const std::vector<std::vector<double>>& points) {
  const auto& t = H.vars();
  std::vector<double> v(t->size(), 0.0);
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->is_phase(i) || static_cast<int>(i) == t->imaginary()) continue;
    auto it = params.find(t->name(i));
    if (it == params.end()) throw std::invalid_argument("no value for parameter '" + t->name(i) + "'");
    v[i] = it->second;
  }
  ActionReport rep;
  rep.test_function = f.to_string();
  rep.points = points.size();
  Poly hf = apply(H, f);
  for (const auto& [name, X] : ops) {
    Poly hx = apply(H, apply(X, f)), xh = apply(X, hf);
    const Poly parts[4] = {hx.real_part(), hx.imag_part(), xh.real_part(), xh.imag_part()};
    ActionResidual r{name, 0.0};
    const auto pos = t->positions();
    for (const auto& p : points) {
      for (std::size_t k = 0; k < pos.size(); ++k) v[pos[k]] = p.at(k);
      double a_re = parts[0].evaluate(v), a_im = parts[1].evaluate(v);
      double b_re = parts[2].evaluate(v), b_im = parts[3].evaluate(v);
      double scale = std::hypot(a_re, a_im) + std::hypot(b_re, b_im);
      double d = std::hypot(a_re - b_re, a_im - b_im);
      r.max_relative = std::max(r.max_relative, scale > 0 ? d / scale : d);
    }
    rep.residuals.push_back(r);
  }
  return rep;
}

}  // namespace hchain::numeric
