#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qmp/catalog.hpp"
#include "qmp/error.hpp"
#include "qmp/fermi.hpp"
#include "qmp/rng.hpp"
#include "qmp/spectrum_lab.hpp"
#include "qmp/tensor.hpp"

using namespace qmp;

namespace {

std::set<std::string> ids_of(const std::vector<FamilyMatch>& m) {
  std::set<std::string> out;
  for (const auto& x : m) out.insert(x.id);
  return out;
}

SpectraBundle qubits_with_minimal(const std::vector<double>& mins) {
  SpectraBundle b;
  for (double x : mins) b.marginals.push_back({1 - x, x});
  return b;
}

std::vector<double> fermi_spectrum(int r, int n, std::uint64_t seed) {
  return spectrum(one_rdm(haar_fermion(r, n, seed))).values;
}

}  // namespace

TEST(Registry, StableIdentifiers) {
  const auto& ids = family_ids();
  for (const char* id : {"POLYGON", "BRAVYI_2Q", "FRANZ_3QUTRIT", "BASIC", "THREE_QUBIT_MIXED",
                         "PAULI", "TWO_PARTICLE_PURE", "BD6", "F7_BD", "F7_LIST", "F8_31",
                         "F84_14", "F84_ABS", "W2H4_MIXED", "CHSH_16", "W2H5"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  try {
    instantiate_family("NOPE");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownFamily);
  }
}

TEST(Registry, ListCountsMatchDeclaredCounts) {
  EXPECT_EQ(tables::f8_31().size(), 31u);
  const auto groups = tables::f8_31_groups();
  EXPECT_EQ(groups, (std::vector<int>{1, 4, 5, 2, 3, 2, 6, 4, 4}));
  EXPECT_EQ(std::accumulate(groups.begin(), groups.end(), 0), 31);
  EXPECT_EQ(tables::f84_14().size(), 14u);
  EXPECT_EQ(tables::f84_abs_forms().size(), 7u);
  EXPECT_EQ(tables::f7_list().size(), 4u);
  EXPECT_EQ(tables::f7_bd().size(), 4u);
  EXPECT_EQ(tables::three_qubit_mixed().size(), 10u);
  EXPECT_EQ(tables::chsh16().size(), 16u);
  EXPECT_EQ(tables::franz_base().size(), 7u);
  const auto bd = tables::bd6();
  EXPECT_EQ(std::count_if(bd.begin(), bd.end(),
                          [](const auto& r) { return r.relation == Relation::kEqual; }),
            3);
  EXPECT_EQ(bd.size(), 4u);
  EXPECT_EQ(instantiate_family("W2H5").declared_count, 460u);
  EXPECT_EQ(instantiate_family("THREE_QUBIT_MIXED").status, "as tabulated");
  for (const auto& id : family_ids()) {
    if (id == "POLYGON" || id == "BASIC" || id == "PAULI" || id == "TWO_PARTICLE_PURE") continue;
    const auto f = instantiate_family(id);
    if (f.kind == CheckKind::kLinear) EXPECT_EQ(f.records.size(), f.declared_count) << id;
    for (const auto& rec : f.records) {
      ASSERT_EQ(rec.lhs.size(), f.ranks.size()) << id;
      for (std::size_t s = 0; s < rec.lhs.size(); ++s)
        EXPECT_EQ(static_cast<int>(rec.lhs[s].size()), f.ranks[s]) << id;
      if (f.joint_rank > 0) EXPECT_EQ(static_cast<int>(rec.rhs.size()), f.joint_rank) << id;
    }
  }
}

TEST(Registry, FranzPermutationsDeduplicated) {
  const auto all = tables::franz();
  const auto tabulated = tables::franz_base();
  EXPECT_GE(all.size(), 7u);
  EXPECT_LE(all.size(), 42u);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
  std::vector<int> perm = {0, 1, 2};
  do {
    for (const auto& rec : tabulated) {
      InequalityRecord r = rec;
      for (int role = 0; role < 3; ++role) r.lhs[perm[role]] = rec.lhs[role];
      EXPECT_NE(std::find(all.begin(), all.end(), r), all.end());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Applicable, Examples) {
  EXPECT_EQ(ids_of(applicable_families(SystemDescriptor::fermion(6, 3))),
            (std::set<std::string>{"BD6", "PAULI"}));
  const auto mixed22 = ids_of(applicable_families(SystemDescriptor::tensor({2, 2}, Purity::kMixed)));
  EXPECT_TRUE(mixed22.count("BRAVYI_2Q"));
  EXPECT_TRUE(mixed22.count("BASIC"));
  EXPECT_FALSE(mixed22.count("PAULI"));
  const auto q3 = ids_of(applicable_families(SystemDescriptor::tensor({3, 3, 3})));
  EXPECT_TRUE(q3.count("FRANZ_3QUTRIT"));
  EXPECT_FALSE(q3.count("POLYGON"));
  EXPECT_TRUE(ids_of(applicable_families(SystemDescriptor::parse("qubits:3"))).count("POLYGON"));
  // Particle-hole matches are labelled.
  const auto dual = applicable_families(SystemDescriptor::fermion(7, 4));
  EXPECT_NE(std::find(dual.begin(), dual.end(), FamilyMatch{"F7_LIST", true}), dual.end());
  EXPECT_THROW(SystemDescriptor::parse("banana:3"), Error);
}

TEST(CheckFamily, BorlandDennisExamples) {
  auto rep = check_family("BD6", {{{1, 1, 1, 0, 0, 0}}, {}});
  EXPECT_TRUE(rep.satisfied);
  rep = check_family("BD6", {{{1, 1, 0.5, 0.5, 0, 0}}, {}});
  EXPECT_FALSE(rep.satisfied);
  EXPECT_LT(rep.worst_slack, -0.4);
  EXPECT_EQ(rep.violated.size(), 1u);
  // Equalities are two-sided within 1e-10.
  rep = check_family("BD6", {{{1, 1, 1 - 1e-9, 1e-9, 0, 0}}, {}});
  EXPECT_FALSE(rep.satisfied);
  rep = check_family("BD6", {{{1, 1, 1 - 1e-12, 1e-12, 0, 0}}, {}});
  EXPECT_TRUE(rep.satisfied);
}

TEST(CheckFamily, PolygonExamples) {
  EXPECT_FALSE(check_family("POLYGON", qubits_with_minimal({0.4, 0.1, 0.1})).satisfied);
  EXPECT_TRUE(check_family("POLYGON", qubits_with_minimal({0.5, 0.5, 0.5})).satisfied);
}

TEST(CheckFamily, BravyiPureJointForcesEqualMarginals) {
  const std::vector<double> pure = {1, 0, 0, 0};
  EXPECT_TRUE(check_family("BRAVYI_2Q", {{{0.7, 0.3}, {0.7, 0.3}}, pure}).satisfied);
  EXPECT_FALSE(check_family("BRAVYI_2Q", {{{0.7, 0.3}, {0.8, 0.2}}, pure}).satisfied);
}

TEST(CheckFamily, FranzUniformPoint) {
  const std::vector<double> u(3, 1.0 / 3);
  EXPECT_TRUE(check_family("FRANZ_3QUTRIT", {{u, u, u}, {}}).satisfied);
}

TEST(CheckFamily, CanonicalizationIsRecorded) {
  const auto rep = check_family("BD6", {{{0, 1, 0, 1, 0, 1}}, {}});
  EXPECT_TRUE(rep.satisfied);
  ASSERT_FALSE(rep.transformations.empty());
  EXPECT_NE(rep.transformations[0].find("sorted"), std::string::npos);
  const auto scaled = check_family("BD6", {{{2, 2, 2, 0, 0, 0}}, {}});
  EXPECT_TRUE(scaled.satisfied);
  EXPECT_FALSE(scaled.transformations.empty());
  // Sites are reordered by increasing gap for the three-qubit list.
  const auto tq = check_family(
      "THREE_QUBIT_MIXED",
      {{{0.9, 0.1}, {0.6, 0.4}, {0.5, 0.5}}, {0.3, 0.2, 0.1, 0.1, 0.1, 0.1, 0.05, 0.05}});
  bool reordered = false;
  for (const auto& t : tq.transformations) reordered |= t.find("reordered") != std::string::npos;
  EXPECT_TRUE(reordered);
}

TEST(CheckFamily, RankMismatch) {
  try {
    check_family("BD6", {{{1, 1, 1, 0, 0}}, {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankMismatch);
  }
  EXPECT_THROW(check_family("BRAVYI_2Q", {{{0.5, 0.5}}, {}}), Error);
}

TEST(CheckFamily, SlackMatchesSatisfied) {
  for (int t = 0; t < 200; ++t) {
    const auto v = sample_sorted_point(6, 3, true, derive_seed(3, t));
    const auto rep = check_family("BD6", {{v}, {}});
    EXPECT_EQ(rep.satisfied, rep.worst_slack >= -1e-10);
  }
}

TEST(CheckFamily, F8ListHoldsOnSampledStates) {
  double worst = 1;
  for (int t = 0; t < 10000; ++t) {
    const auto rep = check_family("F8_31", {{fermi_spectrum(8, 3, derive_seed(81, t))}, {}});
    worst = std::min(worst, rep.worst_slack);
  }
  EXPECT_GE(worst, -1e-10);
}

TEST(CheckFamily, ParticleHoleDualEvaluation) {
  for (int t = 0; t < 500; ++t) {
    const auto lam = sample_sorted_point(7, 3, true, derive_seed(17, t));
    const auto mu = particle_hole({lam, 3}, 7).values;
    CheckOptions ph;
    ph.particle_hole = true;
    for (const char* id : {"F7_LIST", "F7_BD"}) {
      EXPECT_EQ(check_family(id, {{lam}, {}}).satisfied,
                check_family(id, {{mu}, {}}, ph).satisfied)
          << id << " " << t;
    }
  }
  for (int t = 0; t < 200; ++t) {
    const auto mu = fermi_spectrum(7, 4, derive_seed(18, t));
    CheckOptions ph;
    ph.particle_hole = true;
    EXPECT_TRUE(check_family("F7_LIST", {{mu}, {}}, ph).satisfied);
  }
}

TEST(Equivalence, AlternativeFormsAgree) {
  auto rep = check_equivalence("F84_14", "F84_ABS", 100000, 1);
  EXPECT_EQ(rep.disagreements, 0u);
  EXPECT_GT(rep.satisfied_a, 0u);
  EXPECT_LT(rep.satisfied_a, rep.samples);
  rep = check_equivalence("F7_BD", "F7_LIST", 100000, 2);
  EXPECT_EQ(rep.disagreements, 0u);
  EXPECT_GT(rep.satisfied_a, 0u);
  EXPECT_LT(rep.satisfied_a, rep.samples);
  rep = check_equivalence("BD6", "BD6", 1000, 3);
  EXPECT_EQ(rep.disagreements, 0u);
}

TEST(Equivalence, DetectsGenuineDifferences) {
  const auto rep = check_equivalence("F7_LIST", "F7_BD", 1000, 3);
  EXPECT_EQ(rep.disagreements, 0u);
  try {
    check_equivalence("BD6", "F84_14", 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompatibleSystems);
  }
}

TEST(Equivalence, IndependentOfWorkers) {
  const auto a = check_equivalence("F84_14", "F84_ABS", 3000, 9, 1);
  const auto b = check_equivalence("F84_14", "F84_ABS", 3000, 9, 3);
  EXPECT_EQ(a.disagreements, b.disagreements);
  EXPECT_EQ(a.satisfied_a, b.satisfied_a);
}

TEST(Chsh, Examples) {
  const double h = std::sqrt(2.0) / 2;
  EXPECT_TRUE(check_chsh({1, 1, 1, 1}).satisfied);
  // Order (E11, E12, E21, E22).
  const auto ts = check_chsh({h, -h, h, h});
  EXPECT_FALSE(ts.satisfied);
  EXPECT_NEAR(ts.worst_slack, 2 - 2 * std::sqrt(2.0), 1e-12);
  EXPECT_FALSE(check_chsh({1, -1, 1, 1}).satisfied);
  try {
    check_chsh({1.5, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Chsh, LocalDeterministicStrategiesSatisfyAll) {
  int strategies = 0;
  for (int a1 : {-1, 1})
    for (int a2 : {-1, 1})
      for (int b1 : {-1, 1})
        for (int b2 : {-1, 1}) {
          const auto rep = check_chsh({double(a1 * b1), double(a1 * b2), double(a2 * b1),
                                       double(a2 * b2)});
          EXPECT_TRUE(rep.satisfied);
          EXPECT_EQ(rep.evaluated, 16u);
          ++strategies;
        }
  EXPECT_EQ(strategies, 16);
}

TEST(Degeneracy, GreedyPairing) {
  EXPECT_EQ(degeneracy_defect({0.5, 0.5, 0.5, 0.5}), 0);
  EXPECT_NEAR(degeneracy_defect({0.6, 0.4, 0.5, 0.5}), 0.2, 1e-15);
  EXPECT_NEAR(degeneracy_defect({0.5, 0.5, 0.5, 0.5, 0.1}), 0.1, 1e-15);
}
