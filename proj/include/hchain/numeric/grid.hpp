#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hchain::numeric {

/// H = p^2/2 + omega^2 x^2/2 + hbar^2 (nu^2 - 1/4) / (2 x^2) on x > 0.
struct RadialProblem {
  double omega = 1.0;
  double nu = 0.5;
  double hbar = 1.0;

  double length() const { return std::sqrt(hbar / omega); }
  double potential(double x) const {
    return 0.5 * omega * omega * x * x + hbar * hbar * (nu * nu - 0.25) / (2 * x * x);
  }
};

inline std::vector<double> analytic_levels(const RadialProblem& p, std::size_t count) {
  std::vector<double> e;
  for (std::size_t n = 0; n < count; ++n) e.push_back(p.hbar * p.omega * (2.0 * static_cast<double>(n) + 1 + p.nu));
  return e;
}

struct GridSettings {
  std::size_t points = 201;
  double eps = 0.0;     // left end, in units of the oscillator length
  double length = 0.0;  // right end in the same units; 0 selects it by a convergence study
  /// x(s) = eps + (L - eps)(s + stretch s^3)/(1 + stretch) for uniform s in [0, 1]
  double stretch = 1.0;
};

/// Lowest eigenvalues of the three-point discretization with Dirichlet ends.
inline std::vector<double> grid_levels(const RadialProblem& p, std::size_t count, const GridSettings& g) {
  if (g.points < count + 3) throw std::invalid_argument("grid has too few points");
  if (!(g.length > g.eps)) throw std::invalid_argument("grid needs L > eps");
  const double l = p.length(), a = g.eps * l, b = g.length * l;
  const std::size_t n = g.points;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = static_cast<double>(i) / static_cast<double>(n - 1);
    x[i] = a + (b - a) * (s + g.stretch * s * s * s) / (1 + g.stretch);
  }
  const std::size_t m = n - 2;
  Eigen::VectorXd diag(static_cast<Eigen::Index>(m)), off(static_cast<Eigen::Index>(m - 1));
  std::vector<double> w(m);
  const double k = p.hbar * p.hbar / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double hm = x[i + 1] - x[i], hp = x[i + 2] - x[i + 1];
    w[i] = (hm + hp) / 2;
    diag[static_cast<Eigen::Index>(i)] = k * (1 / hm + 1 / hp) / w[i] + p.potential(x[i + 1]);
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double h = x[i + 2] - x[i + 1];
    off[static_cast<Eigen::Index>(i)] = -k / h / std::sqrt(w[i] * w[i + 1]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  std::vector<double> e(es.eigenvalues().data(), es.eigenvalues().data() + count);
  return e;
}

struct RadialOracle {
  RadialProblem problem;
  GridSettings grid;
  std::vector<double> analytic, numeric, relative_error;
  /// Estimated error of the chosen grid against a Richardson reference.
  double estimated_error = 0.0;

  double max_error() const { return *std::max_element(relative_error.begin(), relative_error.end()); }
};

/// Chooses L (when not given) by comparing the grid against a Richardson
/// extrapolation from a doubled grid on the widest box, then compares the
/// grid levels with the analytic ladder.
inline RadialOracle radial_oracle(const RadialProblem& p, std::size_t count = 3, GridSettings g = {}) {
  if (p.nu < 0.5)
    throw std::invalid_argument("grid check needs nu >= 1/2 (no attractive inverse-square term)");
  if (g.eps == 0.0 && p.nu != 0.5) g.eps = 1e-3;
  auto error_against = [&](const std::vector<double>& e, const std::vector<double>& ref) {
    double worst = 0;
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, std::abs(e[i] - ref[i]) / std::abs(ref[i]));
    return worst;
  };
  auto richardson = [&](GridSettings s) {
    auto coarse = grid_levels(p, count, s);
    s.points = 2 * s.points - 1;
    auto fine = grid_levels(p, count, s);
    for (std::size_t i = 0; i < count; ++i) fine[i] = (4 * fine[i] - coarse[i]) / 3;
    return fine;
  };
  if (g.length == 0.0) {
    GridSettings wide = g;
    wide.length = 12.0;
    auto ref = richardson(wide);
    double best = INFINITY, best_l = 0;
    for (double l = 3.0; l <= 12.0; l += 0.125) {
      GridSettings s = g;
      s.length = l;
      double err = error_against(grid_levels(p, count, s), ref);
      if (err < best) {
        best = err;
        best_l = l;
      }
    }
    g.length = best_l;
  }
  RadialOracle out{p, g, analytic_levels(p, count), grid_levels(p, count, g), {}, 0.0};
  for (std::size_t i = 0; i < count; ++i)
    out.relative_error.push_back(std::abs(out.numeric[i] - out.analytic[i]) / out.analytic[i]);
  GridSettings wide = g;
  wide.length = 12.0;
  out.estimated_error = error_against(out.numeric, richardson(wide));
  return out;
}

}  // namespace hchain::numeric
