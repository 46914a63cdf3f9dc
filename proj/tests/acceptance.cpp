// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria, exit 1 if any fails
//   acceptance N [M...]   run only the listed criteria

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hchain/exact/properties.hpp"
#include "hchain/numeric/integrator.hpp"
#include "hchain/numeric/json_io.hpp"
#include "hchain/report/verify.hpp"
#include "hchain/weyl/properties.hpp"

using namespace hchain;
using exact::Poly;
using exact::Scalar;
using systems::ChainLabel;
using systems::Family;
using systems::Regime;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fam(Family f) { return f == Family::q ? "q" : "c"; }

Outcome conservation() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t zero = 0, total = 0;
  std::string bad;
  for (auto f : {Family::q, Family::c}) {
    auto cs = systems::classical_system(f);
    auto qs = systems::quantum_system(f);
    std::vector<std::pair<std::string, bool>> r{
        {fam(f) + " {H,A}", exact::poisson_bracket(cs.gens.H, cs.gens.A).is_zero()},
        {fam(f) + " {H,B}", exact::poisson_bracket(cs.gens.H, cs.gens.B).is_zero()},
        {fam(f) + " [H,A]", weyl::commutator(qs.gens.H, qs.gens.A).is_zero()},
        {fam(f) + " [H,B]", weyl::commutator(qs.gens.H, qs.gens.B).is_zero()}};
    for (const auto& [n, z] : r) {
      ++total;
      if (z)
        ++zero;
      else
        bad += " " + n;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << zero << "/" << total << " brackets exactly zero in " << secs << " s (target < 60 s)";
  if (!bad.empty()) d << "; nonzero:" << bad;
  return {zero == total && secs < 60, d.str()};
}

Outcome structure_constants() {
  std::size_t matched = 0, total = 0;
  std::string bad;
  for (auto f : {Family::q, Family::c}) {
    auto qs = systems::quantum_system(f);
    auto alg = fit::fit_ternary(qs.gens, fit::algebra_of(f), Regime::quantum);
    for (const auto& c : fit::compare_constants(alg, f)) {
      ++total;
      if (c.match())
        ++matched;
      else
        bad += " " + fam(f) + ":" + c.name + " printed " + c.printed.to_string() + " derived " + c.computed.to_string();
    }
  }
  std::string d = std::to_string(matched) + "/" + std::to_string(total) + " printed quantum structure constants reproduced";
  if (!bad.empty()) d += ";" + bad;
  return {matched == total && total > 0, d};
}

Outcome casimirs() {
  std::vector<std::string> failed;
  auto hi = [](const fit::TripleAlgebraFit& a) { return a.vars->index("H"); };
  {
    auto cs = systems::classical_system(Family::c);
    auto alg = fit::fit_ternary(cs.gens, fit::algebra_of(Family::c), Regime::classical);
    auto k = fit::build_casimir(alg, cs.gens);
    bool higher = true;
    for (std::size_t i = 1; i < k.k.size(); ++i) higher = higher && k.k[i].is_zero();
    if (!higher) failed.push_back("c: k1..k5 = 0");
    Poly k0 = k.k_in_H.coefficient(hi(alg), 0);
    if (k0 != exact::parse("-128*kappa2*(r^2 - 4*kappa*kappa1)^2", alg.vars)) failed.push_back("c: k0");
    Poly C = exact::poisson_bracket(cs.gens.A, cs.gens.B);
    if (!(k.K - (C * C - Scalar(2) * fit::generating_function(cs))).is_zero()) failed.push_back("c: K = C^2 - 2h");
  }
  {
    auto cs = systems::classical_system(Family::q);
    auto alg = fit::fit_ternary(cs.gens, fit::algebra_of(Family::q), Regime::classical);
    auto k = fit::build_casimir(alg, cs.gens);
    if (k.k_in_H.coefficient(hi(alg), 2) != exact::parse("-32*lambda2", alg.vars)) failed.push_back("q: k2");
    Poly C = exact::poisson_bracket(cs.gens.A, cs.gens.B);
    if (!(k.K - (C * C - Scalar(2) * fit::generating_function(cs))).is_zero()) failed.push_back("q: K = C^2 - 2h");
  }
  {
    auto qs = systems::quantum_system(Family::c);
    auto alg = fit::fit_ternary(qs.gens, fit::algebra_of(Family::c), Regime::quantum);
    auto k = fit::build_casimir(alg, qs.gens);
    const auto& t = alg.vars;
    Poly r0 = k.k_in_H.substitute({{"H", exact::parse("r", t)}}, t).coefficient(t->index("r"), 0);
    // Distinct linear factors divide r0 iff r0 vanishes at each root.
    const std::vector<std::pair<std::string, std::string>> roots{
        {"kappa1", "35/8*hbar^2"}, {"kappa1", "3/8*hbar^2"}, {"kappa2", "3/8*hbar^2"}};
    for (const auto& [var, root] : roots)
      if (!r0.substitute({{var, exact::parse(root, t)}}, t).is_zero())
        failed.push_back("quantum c: factor at " + var + " = " + root);
  }
  std::string d = "c k1..k5 = 0, c k0, q k2, quantum c constant-term factor, K = C^2 - 2h for q and c";
  if (!failed.empty()) {
    d += "; failed:";
    for (const auto& f : failed) d += " [" + f + "]";
  }
  return {failed.empty(), d};
}

Outcome structure_functions() {
  std::string d;
  bool ok = true;
  for (auto f : {Family::q, Family::c}) {
    auto b = oscillator::block_structure(f);
    bool eq = b.phi == b.factored();
    ok = ok && eq && b.relations_consistent;
    d += fam(f) + " expanded Phi " + (eq ? "equals" : "differs from") + " the factored form; ";
  }
  auto s = report::verify_structure_functions();
  const auto& v = s.data.at("beta_nonzero_verdict");
  bool recorded = v.contains("holds") && v.contains("unshifted_solution");
  ok = ok && recorded;
  for (const auto& f : s.findings)
    if (f.kind == "resolution") d += "beta != 0 verdict: " + f.derived;
  return {ok, d};
}

std::string combo_name(const std::vector<std::size_t>& b) {
  std::string s = "[";
  for (auto i : b) s += std::to_string(i);
  return s + "]";
}

// Printed closed forms evaluated on 0 <= n_1 <= ... <= n_k <= 4: how many
// label tuples give a separable joint level (H_1..H_k).
std::string printed_forms_on_lattice(ChainLabel c) {
  auto pr = spectrum::printed_ladder(c);
  const auto& mu = report::containment_sets()[1];
  auto v = spectrum::ladder_point(mu);
  auto t = spectrum::ladder_table();
  const std::size_t k = pr.energies.size();
  std::vector<Poly> forms;
  for (const auto& e : pr.energies) forms.push_back(spectrum::in_hbar_mu(spectrum::lparse(e)));
  std::size_t total = 0, separable = 0;
  std::vector<long> n(k, 0);
  std::function<void(std::size_t, long)> walk = [&](std::size_t i, long lo) {
    if (i == k) {
      for (std::size_t j = 0; j < k; ++j) v[t->index(spectrum::label_names()[j])] = n[j];
      std::vector<Scalar> e;
      for (const auto& f : forms) e.push_back(f.evaluate_exact(v));
      ++total;
      separable += numeric::separable_quanta(c, e, mu).has_value();
      return;
    }
    for (long x = lo; x <= 4; ++x) {
      n[i] = x;
      walk(i + 1, x);
    }
  };
  walk(0, 0);
  return "printed forms give separable levels on " + std::to_string(separable) + "/" + std::to_string(total) +
         " label tuples";
}

Outcome spectrum_formulas() {
  bool ok = true;
  std::string d;
  for (auto c : {ChainLabel::c112, ChainLabel::c122, ChainLabel::c124}) {
    auto pr = spectrum::printed_ladder(c);
    std::string hit;
    std::size_t best = 0;
    for (const auto& combo : spectrum::branch_combinations(c)) {
      auto l = spectrum::ladder(c, combo);
      std::size_t same = 0;
      for (std::size_t i = 0; i < pr.energies.size(); ++i) same += spectrum::lparse(pr.energies[i]) == l.energies[i];
      best = std::max(best, same);
      if (same == pr.energies.size() && hit.empty()) hit = combo_name(combo);
    }
    ok = ok && !hit.empty();
    d += "(" + systems::chain_name(c) + ") " +
         (hit.empty() ? "no branch reproduces all energies, best " + std::to_string(best) + "/" +
                            std::to_string(pr.energies.size())
                      : "reproduced by branches " + hit) +
         ", " + printed_forms_on_lattice(c) + "; ";
  }
  auto c = ChainLabel::c1248;
  auto pr = spectrum::printed_ladder(c);
  std::vector<std::pair<std::string, std::pair<std::size_t, std::string>>> variants;
  for (std::size_t i = 2; i < pr.energies.size(); ++i)
    variants.push_back({"printed H" + std::to_string(i + 1), {i, pr.energies[i]}});
  for (const auto& v : pr.energy_variants) variants.push_back(v);
  std::vector<bool> resolved(pr.energies.size(), false);
  std::string named;
  for (const auto& combo : spectrum::branch_combinations(c)) {
    auto l = spectrum::ladder(c, combo);
    for (const auto& [name, v] : variants)
      if (spectrum::lparse(v.second) == l.energies[v.first] && !resolved[v.first]) {
        resolved[v.first] = true;
        named += " H" + std::to_string(v.first + 1) + " = " + name + " " + combo_name(combo) + ";";
      }
  }
  bool six = resolved[2] && resolved[3];
  ok = ok && six;
  d += "(1,2,4,8) " + printed_forms_on_lattice(c) + ", " + (named.empty() ? std::string("no printed H3/H4 variant matches any branch") : "matching:" + named);
  return {ok, d};
}

Outcome oracle_agreement() {
  const auto& sets = report::containment_sets();
  std::vector<std::future<std::pair<bool, std::string>>> jobs;
  for (auto c : systems::all_chains())
    jobs.push_back(std::async(std::launch::async, [c, &sets] {
      std::size_t rows = 0, found = 0;
      for (const auto& combo : spectrum::branch_combinations(c)) {
        auto l = spectrum::ladder(c, combo);
        for (const auto& mu : sets) {
          auto tab = spectrum::enumerate(l, mu, 4);
          Scalar top = 0;
          for (const auto& r : tab.rows) top = std::max(top, r.energies.back());
          auto cc = numeric::check_containment(tab, numeric::chain_spectrum_oracle(c, mu, top));
          rows += cc.rows;
          found += cc.top_found;
        }
      }
      return std::make_pair(found == rows && rows > 0, "(" + systems::chain_name(c) + ") " + std::to_string(found) +
                                                            "/" + std::to_string(rows));
    }));
  bool ok = true;
  std::string d = "ladder levels found in the separable spectrum:";
  for (auto& j : jobs) {
    auto [pass, s] = j.get();
    ok = ok && pass;
    d += " " + s;
  }
  double worst = 0;
  for (double omega : {1.0, 2.0, 0.5})
    for (double nu : {0.5, 1.5, 2.25}) {
      auto r = numeric::radial_oracle({omega, nu, 1.0}, 3);
      worst = std::max(worst, r.max_error());
    }
  ok = ok && worst < 1e-4;
  std::ostringstream os;
  os << "; 201-point grid max relative error " << numeric::fixed(worst).dump() << " over 9 (omega, nu) pairs";
  return {ok, d + os.str()};
}

Outcome numeric_conservation() {
  bool ok = true;
  std::ostringstream d;
  for (auto f : {Family::q, Family::c}) {
    auto cs = systems::classical_system(f);
    std::vector<std::pair<std::string, Poly>> ints{{"H", cs.gens.H}, {"A", cs.gens.A}, {"B", cs.gens.B}};
    auto params = numeric::generic_couplings(cs.vars);
    auto z = numeric::generic_state(cs.vars->positions().size());
    numeric::IntegratorSettings a{1e-4, 10.0, 1e-3, 2}, b = a;
    b.step /= 2;
    auto fa = std::async(std::launch::async, [&] { return numeric::integrate_and_check(cs.gens.H, ints, params, z, a); });
    auto rb = numeric::integrate_and_check(cs.gens.H, ints, params, z, b);
    auto ra = fa.get();
    double min_ratio = INFINITY;
    for (std::size_t i = 0; i < ra.drift.size(); ++i) min_ratio = std::min(min_ratio, ra.drift[i] / rb.drift[i]);
    bool pass = ra.max_drift() < 1e-9 && min_ratio >= 3;
    ok = ok && pass;
    d << fam(f) << ": max drift " << numeric::fixed(ra.max_drift()).dump() << " (H " << numeric::fixed(ra.drift[0]).dump()
      << ", A " << numeric::fixed(ra.drift[1]).dump() << ", B " << numeric::fixed(ra.drift[2]).dump()
      << "), halving ratio >= " << numeric::fixed(min_ratio).dump() << "; ";
  }
  d << "Strang splitting, h = 1e-4, T = 10, target drift < 1e-9";
  return {ok, d.str()};
}

Outcome positivity_domains() {
  bool ok = true;
  std::string d;
  auto show = [](const std::map<std::string, Scalar>& m) {
    std::string s;
    for (const auto& [n, v] : m) s += (s.empty() ? "" : ", ") + n + " > " + v.get_str();
    return s;
  };
  for (auto c : {ChainLabel::c112, ChainLabel::c122, ChainLabel::c124}) {
    auto l = spectrum::ladder(c);
    auto pr = spectrum::printed_ladder(c);
    bool same = l.lower_bounds == pr.bounds;
    ok = ok && same;
    d += "(" + systems::chain_name(c) + ") " + (same ? "reproduced " + show(pr.bounds)
                                                     : "printed " + show(pr.bounds) + ", derived " + show(l.lower_bounds)) +
         "; ";
  }
  auto c = ChainLabel::c1248;
  auto l = spectrum::ladder(c);
  auto pr = spectrum::printed_ladder(c);
  Scalar derived = l.lower_bounds.at("mu3");
  bool resolved = derived == pr.bounds.at("mu3");
  for (const auto& [name, b] : pr.bound_variants) resolved = resolved || (b.first == "mu3" && b.second == derived);
  ok = ok && resolved;
  d += "(1,2,4,8) mu3 > " + derived.get_str() + (resolved ? " (matches a printed value)" : " (matches neither -7/4 nor -1/4)");
  return {ok, d};
}

Outcome property_suites() {
  std::vector<exact::PropertyResult> all = exact::poisson_properties(100, 20240611);
  for (auto& r : weyl::operator_properties(100, 20240612)) all.push_back(r);
  bool ok = true;
  std::string d;
  for (const auto& r : all) {
    ok = ok && r.holds() && r.cases == 100;
    d += (d.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
  }
  return {ok, d};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> v{
      {"conservation exactness", conservation},
      {"structure-constant recovery", structure_constants},
      {"Casimir checks", casimirs},
      {"structure-function identities", structure_functions},
      {"spectrum formulas", spectrum_formulas},
      {"oracle agreement", oracle_agreement},
      {"classical numeric conservation", numeric_conservation},
      {"positivity domains", positivity_domains},
      {"property suites", property_suites}};
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long n = std::strtol(argv[i], &end, 10);
    if (*end || n < 1 || n > static_cast<long>(criteria().size())) {
      std::cerr << "usage: acceptance [criterion 1-" << criteria().size() << " ...]\n";
      return 2;
    }
    which.push_back(static_cast<std::size_t>(n));
  }
  if (which.empty())
    for (std::size_t i = 1; i <= criteria().size(); ++i) which.push_back(i);
  int failed = 0;
  for (auto n : which) {
    const auto& [name, run] = criteria()[n - 1];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << " " << name << ": " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
