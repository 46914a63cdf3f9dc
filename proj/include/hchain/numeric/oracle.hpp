#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hchain/spectrum/table.hpp"

namespace hchain::numeric {

using exact::Poly;
using exact::Scalar;
using spectrum::ChainLabel;

/// Energy of axis i in units of hbar mu: a_i (2 n + 1 + mu_i).
inline Scalar axis_energy(int a, long n, const Scalar& mu_i) { return a * (Scalar(2 * n + 1) + mu_i); }

struct OracleLevel {
  Scalar energy;  // hbar mu
  std::size_t multiplicity = 0;
};

/// Spectrum of the last chain Hamiltonian as sums of one-dimensional
/// ladders, every level up to the cutoff.
struct OracleSpectrum {
  ChainLabel chain = ChainLabel::c112;
  std::vector<Scalar> mu;
  Scalar cutoff;
  std::vector<OracleLevel> levels;
  /// Axis quanta of every state below the cutoff.
  std::set<std::vector<long>> states;

  const OracleLevel* find(const Scalar& e) const {
    auto it = std::lower_bound(levels.begin(), levels.end(), e,
                               [](const OracleLevel& l, const Scalar& v) { return l.energy < v; });
    return it != levels.end() && it->energy == e ? &*it : nullptr;
  }
  bool contains(const Scalar& e) const { return find(e) != nullptr; }
};

inline OracleSpectrum chain_spectrum_oracle(ChainLabel c, const std::vector<Scalar>& mu, const Scalar& cutoff) {
  auto axes = systems::chain_axes(c);
  if (mu.size() < axes.size()) throw std::invalid_argument("oracle needs one singular parameter per axis");
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (!(mu[i] > -1)) throw spectrum::DomainViolation("one-dimensional ladder needs mu" + std::to_string(i + 1) + " > -1");
  OracleSpectrum out;
  out.chain = c;
  out.mu.assign(mu.begin(), mu.begin() + static_cast<long>(axes.size()));
  out.cutoff = cutoff;
  std::map<Scalar, std::size_t> count;
  std::vector<long> n(axes.size(), 0);
  std::function<void(std::size_t, Scalar)> walk = [&](std::size_t i, Scalar e) {
    if (i == axes.size()) {
      count[e] += 1;
      out.states.insert(n);
      return;
    }
    for (long k = 0;; ++k) {
      Scalar ek = e + axis_energy(axes[i], k, mu[i]);
      // the remaining axes contribute at least their ground energies
      Scalar rest = 0;
      for (std::size_t j = i + 1; j < axes.size(); ++j) rest += axis_energy(axes[j], 0, mu[j]);
      if (ek + rest > cutoff) break;
      n[i] = k;
      walk(i + 1, ek);
    }
  };
  walk(0, 0);
  for (const auto& [e, m] : count) out.levels.push_back({e, m});
  return out;
}

/// Axis quanta of a joint eigenvalue (H_1..H_k) in hbar mu units, if it
/// is a separable state.
inline std::optional<std::vector<long>> separable_quanta(ChainLabel c, const std::vector<Scalar>& energies,
                                                         const std::vector<Scalar>& mu) {
  auto axes = systems::chain_axes(c);
  std::vector<long> n;
  Scalar prev = 0;
  for (std::size_t j = 0; j < axes.size(); ++j) {
    Scalar twice = (energies[j] - prev) / axes[j] - 1 - mu[j];
    Scalar q = twice / 2;
    if (q.get_den() != 1 || q < 0) return std::nullopt;
    n.push_back(q.get_num().get_si());
    prev = energies[j];
  }
  return n;
}

struct Containment {
  std::size_t rows = 0;
  std::size_t top_found = 0;    // top energy is an oracle level
  std::size_t joint_found = 0;  // (H_1..H_k) is a separable joint eigenvalue
  std::vector<std::vector<long>> missing;  // label tuples whose top energy is absent

  bool holds() const { return top_found == rows; }
};

inline Containment check_containment(const spectrum::SpectrumTable& tab, const OracleSpectrum& oracle) {
  Containment c;
  for (const auto& r : tab.rows) {
    ++c.rows;
    if (oracle.contains(r.energies.back()))
      ++c.top_found;
    else
      c.missing.push_back(r.labels);
    if (separable_quanta(tab.chain, r.energies, tab.mu)) ++c.joint_found;
  }
  return c;
}

/// Ladder states of one branch combination mapped to axis quanta.
struct BranchCoverage {
  std::vector<std::size_t> branches;
  std::size_t states = 0;
  std::size_t outside_link = 0;  // label tuples with some position above its link top
  std::size_t unmapped = 0;      // states whose energies are not separable
  /// residues[j] = values of n_j mod 2 that occur
  std::vector<std::set<long>> residues;
  std::vector<std::vector<long>> quanta;

  std::string pattern() const {
    std::string s;
    for (std::size_t j = 0; j < residues.size(); ++j) {
      if (j) s += ", ";
      std::string what = residues[j].size() == 2 ? "any" : residues[j].count(0) ? "even" : residues[j].count(1) ? "odd" : "none";
      s += "n" + std::to_string(j + 1) + " " + what;
    }
    return s;
  }
};

struct Completeness {
  ChainLabel chain = ChainLabel::c112;
  std::vector<Scalar> mu;
  Scalar cutoff;
  std::vector<BranchCoverage> branches;
  std::size_t oracle_states = 0;
  std::vector<std::vector<long>> duplicates;  // quanta reached by more than one ladder state
  std::vector<std::vector<long>> missing;     // separable states no ladder state reaches
  std::size_t unmapped = 0;

  bool bijective() const { return duplicates.empty() && missing.empty() && unmapped == 0; }
};

namespace detail {

/// f evaluated at the label tuple, f affine in the labels.
struct Affine {
  Scalar constant;
  std::vector<Scalar> slope;

  static Affine from(const Poly& f, const std::vector<Scalar>& mu) {
    auto t = spectrum::ladder_table();
    auto v = spectrum::ladder_point(mu);
    Affine a;
    for (const auto& n : spectrum::label_names())
      if (f.max_exponent(t->index(n)) > 1) throw std::invalid_argument("ladder quantity is not affine in " + n);
    a.constant = f.evaluate_exact(v);
    for (const auto& n : spectrum::label_names()) {
      auto w = v;
      w[t->index(n)] = 1;
      a.slope.push_back(f.evaluate_exact(w) - a.constant);
    }
    return a;
  }
  Scalar operator()(const std::vector<long>& n) const {
    Scalar s = constant;
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i]) s += slope[i] * n[i];
    return s;
  }
};

}  // namespace detail

/// Walks every branch combination of the chain and maps its ladder states
/// with top energy at most the cutoff onto axis quanta.
inline Completeness check_completeness(ChainLabel c, const std::vector<Scalar>& mu, const Scalar& cutoff) {
  Completeness out;
  out.chain = c;
  out.cutoff = cutoff;
  auto oracle = chain_spectrum_oracle(c, mu, cutoff);
  out.mu = oracle.mu;
  out.oracle_states = oracle.states.size();
  std::map<std::vector<long>, std::size_t> hits;
  for (const auto& combo : spectrum::branch_combinations(c)) {
    auto lad = spectrum::ladder(c, combo);
    spectrum::check_domain(lad, mu);
    const std::size_t k = lad.labels.size();
    std::vector<detail::Affine> energy, top;
    for (const auto& e : lad.energies) energy.push_back(detail::Affine::from(e * spectrum::lparse("1/(hbar*mu)"), mu));
    for (const auto& l : lad.links) top.push_back(detail::Affine::from(l.top, mu));
    BranchCoverage cov;
    cov.branches = combo;
    cov.residues.resize(k);
    std::vector<long> n(k, 0);
    // H_i grows with n_i and H_k exceeds H_i on separable states, so a
    // partial energy above the cutoff ends the loop at that depth.
    std::function<void(std::size_t, long)> walk = [&](std::size_t depth, long from) {
      if (depth == k) {
        for (std::size_t j = 0; j < lad.links.size(); ++j)
          if (top[j](n) < n[j] - (j ? n[j - 1] : 0)) {
            ++cov.outside_link;
            return;
          }
        std::vector<Scalar> e;
        for (const auto& f : energy) e.push_back(f(n));
        if (e.back() > cutoff) return;
        ++cov.states;
        auto q = separable_quanta(c, e, mu);
        if (!q) {
          ++cov.unmapped;
          return;
        }
        for (std::size_t j = 0; j < k; ++j) cov.residues[j].insert((*q)[j] % 2);
        cov.quanta.push_back(*q);
        hits[*q] += 1;
        return;
      }
      if (!(energy[depth].slope[depth] > 0)) throw exact::StructuralError("ladder energy does not grow with its label");
      for (long i = from;; ++i) {
        n[depth] = i;
        // H_depth only involves the labels fixed so far
        if (energy[depth](n) > cutoff) break;
        walk(depth + 1, i);
      }
    };
    walk(0, 0);
    out.unmapped += cov.unmapped;
    out.branches.push_back(std::move(cov));
  }
  for (const auto& [q, count] : hits)
    if (count > 1) out.duplicates.push_back(q);
  for (const auto& s : oracle.states)
    if (!hits.count(s)) out.missing.push_back(s);
  return out;
}

}  // namespace hchain::numeric
