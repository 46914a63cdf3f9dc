#pragma once

#include <map>
#include <string>
#include <vector>

#include "hchain/spectrum/ladder.hpp"

namespace hchain::spectrum {

/// Printed structure function of one link with the labels it is written in:
/// lower is set to zero, position becomes X and top becomes T.
struct PrintedPhi {
  std::string source;
  std::string lower, position, top;
};

/// Printed root in units of 2 hbar mu, or printed upper value of a link at
/// its top label.
struct PrintedValue {
  std::size_t link;
  std::string source;
  std::string top_label;  // empty for roots
};

struct PrintedLadder {
  std::vector<std::string> energies;
  std::vector<PrintedPhi> phis;
  std::map<std::string, Scalar> bounds;
  std::vector<PrintedValue> roots;
  std::vector<PrintedValue> tops;
  /// Further printed variants: item name -> (energy index, source).
  std::vector<std::pair<std::string, std::pair<std::size_t, std::string>>> energy_variants;
  std::vector<std::pair<std::string, std::pair<std::string, Scalar>>> bound_variants;
};

inline PrintedLadder printed_ladder(ChainLabel c) {
  const std::string h1_shifted = "hbar*mu*(2*(m+1) + 1 + mu1)";
  const PrintedPhi phi1_c{"3*2^15*hbar^10*mu^6*m*(m+1)*(q+1-m)*(m+1+mu1)*(m+mu1)*(q+1-m+2*mu2)", "", "m", "q"};
  const PrintedPhi phi2_c124{"3*2^19*hbar^10*mu^6*(q-m)*(p+1-q)*(q-m+1)*(q-m+1+mu2)*(q-m+mu2)*(p+1-q+4*mu3)", "m",
                             "q", "p"};
  const PrintedValue top1_c{1, "q + 3/2 + mu1/2 + mu2", "q"};
  const PrintedValue root1_c{1, "3/2 + mu1/2", ""};
  PrintedLadder p;
  switch (c) {
    case ChainLabel::c112:
      p.energies = {"hbar*mu*(2*m + 1 + mu1)", "hbar*mu*(4*q - 2*m + 2 + mu1 + mu2)",
                    "hbar*mu*(2*(q + p - m) + 4 + mu1 + mu2 + 2*mu3)"};
      p.phis = {{"16*hbar^4*m*(q+1-m)*(m+mu1)*(q+1-m+mu2)", "", "m", "q"},
                {"3*2^16*hbar^10*mu^6*(q-m)*(p+1-q)*(2*q-1-2*m)*(2*q-2*m+mu2)*(2*q-1-2*m+mu2)*(p+1-q+2*mu3)", "m", "q",
                 "p"}};
      p.bounds = {{"mu1", -1}, {"mu2", -1}, {"mu3", Scalar(-1, 2)}};
      p.roots = {{1, "1/2 + mu1/2", ""}};
      p.tops = {{1, "q + 1 + mu1/2 + mu2/2", "q"}};
      break;
    case ChainLabel::c122:
      p.energies = {h1_shifted, "hbar*mu*(4*q - 2*m + 5 + mu1 + 2*mu2)",
                    "hbar*mu*(2*(q + p - m) + 5 + mu1 + 2*mu2 + 2*mu3)"};
      p.phis = {phi1_c, {"4*hbar^4*(q-m)*(p+1-q)*(q-m+mu2)*(p+1-q+2*mu3)", "m", "q", "p"}};
      p.bounds = {{"mu1", -1}, {"mu2", Scalar(-1, 2)}, {"mu3", Scalar(-1, 2)}};
      p.roots = {root1_c};
      p.tops = {top1_c};
      break;
    case ChainLabel::c124:
      p.energies = {h1_shifted, "hbar*mu*(4*(q+1) - 2*m + 5 + mu1 + 2*mu2)",
                    "hbar*mu*(2*(q + p - m) + 7 + mu1 + 2*mu2 + 4*mu3)"};
      p.phis = {phi1_c, phi2_c124};
      p.bounds = {{"mu1", -1}, {"mu2", Scalar(-1, 2)}, {"mu3", Scalar(-1, 4)}};
      p.roots = {root1_c};
      p.tops = {top1_c};
      break;
    default:
      p.energies = {h1_shifted, "hbar*mu*(4*(q+1) - 2*m + 5 + mu1 + 2*mu2)",
                    "hbar*mu*(2*(3*(p+3) - (q+1) - (m+1)) + 7 + mu1 + 2*mu2 + 4*mu3)",
                    "hbar*mu*(2*(2*p + l - q - m) + 15 + mu1 + 2*mu2 + 4*mu3 + 8*mu4)"};
      p.phis = {phi1_c, phi2_c124,
                {"9*2^13*hbar^10*mu^6*(p-q)*(l+1-p)*(3*p-3*q+4)*(3*p-3*q+4+4*mu3)*(3*p-3*q+4*mu3)*(l+1-p+8*mu4)", "q",
                 "p", "l"}};
      p.bounds = {{"mu1", -1}, {"mu2", Scalar(-1, 2)}, {"mu3", Scalar(-1, 4)}, {"mu4", Scalar(-1, 8)}};
      p.roots = {root1_c, {3, "2*(p-q) - m + 7/2 + mu1/2 + mu2 + 2*mu3", ""}};
      p.tops = {top1_c};
      p.energy_variants = {
          {"H3 from h3 = w + p + q + 7", {2, "2*hbar*mu*(2*(p-q) - m + 7/2 + mu1/2 + mu2 + 2*mu3 + p + q + 7)"}},
          {"H4 from the h4 ladder", {3, "2*hbar*mu*(2*p - q - m + l + 15/2 + mu1/2 + mu2 + 2*mu3 + 4*mu4)"}}};
      p.bound_variants = {{"mu3 bound next to the third structure function", {"mu3", Scalar(-7, 4)}}};
      break;
  }
  return p;
}

struct Comparison {
  std::string item;
  std::string printed;
  std::string derived;
  bool match = false;
};

inline Poly printed_phi_in_link(const PrintedPhi& ph) {
  std::map<std::string, Poly> bind{{ph.position, lsym("X")}, {ph.top, lsym("T")}};
  if (!ph.lower.empty()) bind[ph.lower] = Poly(ladder_table());
  return lparse(ph.source).substitute(bind, ladder_table());
}

/// Energy in units of hbar mu.
inline Poly in_hbar_mu(const Poly& e) { return e * lparse("1/(hbar*mu)"); }

/// Derived ladder (with the printed branch choices) against every printed
/// closed form of the chain.
inline std::vector<Comparison> compare_with_printed(ChainLabel c) {
  auto lad = ladder(c, BranchRule::printed);
  auto pr = printed_ladder(c);
  auto t = ladder_table();
  std::vector<Comparison> out;
  auto units = [](const Poly& e) { return in_hbar_mu(e).to_string() + " hbar*mu"; };
  for (std::size_t i = 0; i < pr.energies.size(); ++i) {
    Poly p = lparse(pr.energies[i]);
    out.push_back({"H" + std::to_string(i + 1), units(p), units(lad.energies[i]), p == lad.energies[i]});
  }
  for (const auto& [name, v] : pr.energy_variants) {
    Poly p = lparse(v.second);
    out.push_back({name, units(p), units(lad.energies[v.first]), p == lad.energies[v.first]});
  }
  for (std::size_t k = 0; k < pr.phis.size(); ++k) {
    Poly p = printed_phi_in_link(pr.phis[k]);
    const Poly& d = lad.links[k].phi;
    const auto& ph = pr.phis[k];
    std::string labels = ph.position + " -> X, " + ph.top + " -> T" + (ph.lower.empty() ? "" : ", " + ph.lower + " -> 0");
    out.push_back({"Phi of link " + std::to_string(k + 1) + " (" + labels + ")", ph.source, lad.links[k].factored(),
                   p == d});
  }
  for (const auto& r : pr.roots) {
    Poly p = lparse(r.source);
    Poly d = lad.links[r.link - 1].root_in_h();
    out.push_back({"lowest root of link " + std::to_string(r.link) + " in units of 2 hbar mu", p.to_string(),
                   d.to_string(), p == d});
  }
  for (const auto& r : pr.tops) {
    Poly p = lparse(r.source);
    const auto& l = lad.links[r.link - 1];
    Poly d = l.top_energy.substitute({{"T", lsym(r.top_label)}}, t) * lparse("1/(2*hbar*mu)");
    out.push_back({"upper value of link " + std::to_string(r.link) + " in units of 2 hbar mu", p.to_string(),
                   d.to_string(), p == d});
  }
  auto derived_bound = [&](const std::string& n) {
    auto it = lad.lower_bounds.find(n);
    return it == lad.lower_bounds.end() ? std::string("none") : n + " > " + it->second.get_str();
  };
  for (const auto& [n, v] : pr.bounds) {
    auto it = lad.lower_bounds.find(n);
    out.push_back({"bound on " + n, n + " > " + v.get_str(), derived_bound(n),
                   it != lad.lower_bounds.end() && it->second == v});
  }
  for (const auto& [name, b] : pr.bound_variants) {
    auto it = lad.lower_bounds.find(b.first);
    out.push_back({name, b.first + " > " + b.second.get_str(), derived_bound(b.first),
                   it != lad.lower_bounds.end() && it->second == b.second});
  }
  return out;
}

}  // namespace hchain::spectrum
