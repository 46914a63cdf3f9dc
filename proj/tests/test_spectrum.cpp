#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hchain/spectrum/printed.hpp"
#include "hchain/spectrum/table.hpp"

namespace {

using namespace hchain;
using namespace hchain::spectrum;

const std::vector<ChainLabel> kChains{ChainLabel::c112, ChainLabel::c122, ChainLabel::c124, ChainLabel::c1248};

Poly L(const char* s) { return lparse(s); }

TEST(SolveBoundary, FirstQLinkOf112) {
  auto lad = ladder(ChainLabel::c112);
  const auto& l = lad.links[0];
  EXPECT_EQ(l.root_in_h(), L("1/2 + mu1/2"));
  EXPECT_EQ(l.top_energy.substitute({{"T", lsym("q")}}, ladder_table()), L("2*hbar*mu*(q + 1 + mu1/2 + mu2/2)"));
  ASSERT_EQ(l.lower.size(), 2u);
  EXPECT_TRUE(l.lower[0].admissible);
  EXPECT_FALSE(l.lower[1].admissible);
}

TEST(SolveBoundary, FirstCLinkOf122) {
  auto lad = ladder(ChainLabel::c122);
  const auto& l = lad.links[0];
  EXPECT_EQ(l.root_in_h(), L("3/2 + mu1/2"));
  ASSERT_EQ(l.lower.size(), 4u);
  // (3 + mu1)/4 and (1 + mu1)/4 survive; the roots with -mu1 bound mu1 from above.
  std::vector<bool> ok;
  for (const auto& c : l.lower) ok.push_back(c.admissible);
  EXPECT_EQ(ok, (std::vector<bool>{true, false, true, false}));
  EXPECT_EQ(l.lower[2].root, L("1/4 + mu1/4"));
}

TEST(SolveBoundary, RootsAreListedInDescendingOrder) {
  for (auto c : kChains)
    for (const auto& l : ladder(c).links)
      for (std::size_t i = 1; i < l.lower.size(); ++i) EXPECT_GE(l.lower[i - 1].at_reference, l.lower[i].at_reference);
}

TEST(SolveBoundary, BranchOutOfRangeIsRejected) {
  EXPECT_THROW(ladder(ChainLabel::c122, std::vector<std::size_t>{0, 1}), NoPositiveBranch);
}

TEST(Ladder, PrintedBranchesReproduceFirstTwoEnergiesOf112) {
  auto lad = ladder(ChainLabel::c112);
  EXPECT_EQ(lad.energies[0], L("hbar*mu*(2*m + 1 + mu1)"));
  EXPECT_EQ(lad.energies[1], L("hbar*mu*(4*q - 2*m + 2 + mu1 + mu2)"));
}

// The top energy of (1,1,2) cannot depend on q: q only moves the state
// inside a multiplet of the top link.
TEST(Ladder, TopEnergyOf112IsIndependentOfInnerLabel) {
  auto lad = ladder(ChainLabel::c112);
  EXPECT_EQ(lad.energies[2], L("hbar*mu*(4*p - 2*m + 4 + mu1 + mu2 + 2*mu3)"));
  EXPECT_FALSE(lad.energies[2].depends_on("q"));
  auto cmp = compare_with_printed(ChainLabel::c112);
  EXPECT_FALSE(cmp[2].match);
}

TEST(Ladder, MaxRootLadders) {
  EXPECT_EQ(ladder(ChainLabel::c112, BranchRule::max_root).energies[2],
            L("hbar*mu*(4*p - 2*m + 6 + mu1 + mu2 + 2*mu3)"));
  auto l122 = ladder(ChainLabel::c122, BranchRule::max_root);
  EXPECT_EQ(l122.energies[0], L("hbar*mu*(4*m + 3 + mu1)"));
  EXPECT_EQ(l122.energies[1], L("hbar*mu*(4*q + 5 + mu1 + 2*mu2)"));
  EXPECT_EQ(l122.energies[2], L("hbar*mu*(4*p + 7 + mu1 + 2*mu2 + 2*mu3)"));
  auto l1248 = ladder(ChainLabel::c1248, BranchRule::max_root);
  EXPECT_EQ(l1248.energies[3], L("hbar*mu*(16*l - 8*q - 4*m + 29 + mu1 + 2*mu2 + 4*mu3 + 8*mu4)"));
}

TEST(Ladder, DerivedBounds) {
  auto b112 = ladder(ChainLabel::c112).lower_bounds;
  EXPECT_EQ(b112.at("mu1"), -1);
  EXPECT_EQ(b112.at("mu2"), -1);
  EXPECT_EQ(b112.at("mu3"), -1);
  auto b1248 = ladder(ChainLabel::c1248).lower_bounds;
  EXPECT_EQ(b1248.at("mu1"), -2);
  EXPECT_EQ(b1248.at("mu2"), -1);
  EXPECT_EQ(b1248.at("mu3"), -1);
  EXPECT_EQ(b1248.at("mu4"), -1);
  EXPECT_TRUE(ladder(ChainLabel::c1248).other_bounds.empty());
}

TEST(Ladder, PrintedFirstLinkStructureFunctionOf112Matches) {
  auto cmp = compare_with_printed(ChainLabel::c112);
  auto it = std::find_if(cmp.begin(), cmp.end(), [](const Comparison& c) { return c.item.rfind("Phi of link 1", 0) == 0; });
  ASSERT_NE(it, cmp.end());
  EXPECT_TRUE(it->match);
}

TEST(Ladder, StructureFunctionsVanishAtBothEnds) {
  auto t = ladder_table();
  for (auto c : kChains)
    for (auto rule : {BranchRule::printed, BranchRule::max_root})
      for (const auto& l : ladder(c, rule).links) {
        EXPECT_TRUE(l.phi.substitute({{"X", Poly(t)}}, t).is_zero());
        EXPECT_TRUE(l.phi.substitute({{"X", lsym("T") + Scalar(1)}}, t).is_zero());
      }
}

TEST(Ladder, InnerTopsLieOnTheLattice) {
  for (auto c : kChains)
    for (const auto& b : branch_combinations(c)) EXPECT_TRUE(tops_fit_lattice(ladder(c, b)));
}

TEST(Ladder, BranchCombinationCounts) {
  EXPECT_EQ(branch_combinations(ChainLabel::c112).size(), 2u);
  EXPECT_EQ(branch_combinations(ChainLabel::c122).size(), 2u);
  EXPECT_EQ(branch_combinations(ChainLabel::c124).size(), 4u);
  EXPECT_EQ(branch_combinations(ChainLabel::c1248).size(), 8u);
}

TEST(Ladder, NestingConsistency) {
  auto a = ladder(ChainLabel::c122), b = ladder(ChainLabel::c124), c = ladder(ChainLabel::c1248);
  EXPECT_EQ(a.energies[0], b.energies[0]);
  EXPECT_EQ(b.energies[0], c.energies[0]);
  EXPECT_EQ(b.energies[1], c.energies[1]);
}

TEST(Ladder, UnitCovariance) {
  auto t = ladder_table();
  for (auto c : kChains)
    for (const auto& e : ladder(c).energies) {
      Poly reduced = strip_units(e);
      EXPECT_EQ(reduced * L("hbar*mu"), e);
      EXPECT_FALSE(reduced.depends_on("hbar"));
      EXPECT_FALSE(reduced.depends_on("mu"));
    }
}

std::vector<Scalar> halves() { return {Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(1, 2)}; }

TEST(Enumerate, GroundStateOf112) {
  auto tab = enumerate(ladder(ChainLabel::c112), halves(), 0);
  ASSERT_EQ(tab.rows.size(), 1u);
  EXPECT_EQ(tab.rows[0].energies.back(), 6);
  auto top = enumerate(ladder(ChainLabel::c112, BranchRule::max_root), halves(), 0);
  EXPECT_EQ(top.rows[0].energies.back(), 8);
}

TEST(Enumerate, DegeneracyOf112MatchesBruteForce) {
  auto tab = enumerate(ladder(ChainLabel::c112), halves(), 3);
  std::map<Scalar, std::size_t> count;
  for (int m = 0; m <= 3; ++m)
    for (int q = m; q <= 3; ++q)
      for (int p = q; p <= 3; ++p) count[Scalar(4 * p - 2 * m + 4) + Scalar(1, 2) * 4] += 1;
  EXPECT_EQ(tab.degeneracy, count);
  EXPECT_EQ(tab.rows.size(), 20u);
}

TEST(Enumerate, InnerLabelEqualToOuterGivesZeroPhi) {
  auto tab = enumerate(ladder(ChainLabel::c112), halves(), 3);
  for (const auto& r : tab.rows)
    if (r.labels[0] == r.labels[1]) {
      EXPECT_EQ(r.phi[1], 0);
    }
}

TEST(Enumerate, DomainViolation) {
  std::vector<Scalar> mu{Scalar(-5, 2), 1, 1, 1};
  EXPECT_THROW(enumerate(ladder(ChainLabel::c122), mu, 2), DomainViolation);
  std::vector<Scalar> mu3{1, 1, Scalar(-3, 2)};
  EXPECT_THROW(enumerate(ladder(ChainLabel::c112), mu3, 2), DomainViolation);
}

// Randomized: parameters drawn inside the derived domain give positive
// structure functions on every interior point (checked inside enumerate).
TEST(Enumerate, RandomParametersInsideDomain) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = kChains[static_cast<std::size_t>(trial) % kChains.size()];
    auto combos = branch_combinations(c);
    auto lad = ladder(c, combos[static_cast<std::size_t>(trial / 4) % combos.size()]);
    std::vector<Scalar> mu;
    for (const auto& n : mu_names()) {
      auto it = lad.lower_bounds.find(n);
      Scalar low = it == lad.lower_bounds.end() ? Scalar(0) : it->second;
      Scalar v = low + Scalar(num(rng), 10);
      v.canonicalize();
      mu.push_back(v);
    }
    EXPECT_NO_THROW(enumerate(lad, mu, 2));
  }
}

TEST(Export, CsvAndJsonShapes) {
  auto tab = enumerate(ladder(ChainLabel::c1248), halves(), 1);
  auto csv = to_csv(tab);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,q,p,l,H1,H2,H3,H4,Phi1,Phi2,Phi3");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(tab.rows.size() + 1));
  auto j = to_json(tab);
  EXPECT_EQ(j["rows"].size(), tab.rows.size());
  EXPECT_EQ(j["chain"], "1,2,4,8");
  EXPECT_NE(to_svg(tab).find("</svg>"), std::string::npos);
}

}  // namespace
