#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracles.hpp"
#include "qmp/catalog.hpp"
#include "qmp/error.hpp"
#include "qmp/fermi.hpp"
#include "qmp/rng.hpp"
#include "qmp/spectrum_lab.hpp"

using namespace qmp;

namespace {

std::vector<double> random_point(int len, std::uint64_t seed) {
  CounterRng rng(seed);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(len);
  double s = 0;
  for (auto& x : v) s += (x = e(rng));
  for (auto& x : v) x /= s;
  std::sort(v.rbegin(), v.rend());
  return v;
}

// Direct partial-sum scan.
bool partial_sums_dominate(std::vector<double> nu, std::vector<double> lambda) {
  const std::size_t n = std::max(nu.size(), lambda.size());
  nu.resize(n, 0);
  lambda.resize(n, 0);
  std::sort(nu.rbegin(), nu.rend());
  std::sort(lambda.rbegin(), lambda.rend());
  double a = 0, b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += nu[i];
    b += lambda[i];
    if (b > a + 1e-10) return false;
  }
  return true;
}

}  // namespace

TEST(Majorization, Examples) {
  EXPECT_TRUE(majorizes(std::vector<double>{1, 0}, std::vector<double>{0.5, 0.5}));
  EXPECT_FALSE(majorizes(std::vector<double>{0.5, 0.5}, std::vector<double>{1, 0}));
  const std::vector<double> l{0.5, 0.3, 0.2};
  EXPECT_TRUE(majorizes(l, l));
  EXPECT_TRUE(majorizes(std::vector<double>{1}, std::vector<double>{0.5, 0.5}));
}

TEST(Majorization, SumMismatchRejected) {
  try {
    majorizes(std::vector<double>{1, 0}, std::vector<double>{0.5, 0.4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSumMismatch);
  }
}

TEST(Majorization, AgreesWithPartialSumScan) {
  for (int t = 0; t < 500; ++t) {
    const auto a = random_point(3 + t % 3, derive_seed(1, t));
    const auto b = random_point(3 + (t / 3) % 3, derive_seed(2, t));
    EXPECT_EQ(majorizes(a, b), partial_sums_dominate(a, b));
    EXPECT_EQ(majorizes(b, a), partial_sums_dominate(b, a));
  }
}

TEST(Majorization, PartialOrder) {
  for (int t = 0; t < 300; ++t) {
    const auto a = random_point(4, derive_seed(3, t));
    const auto b = random_point(4, derive_seed(4, t));
    const auto c = random_point(4, derive_seed(5, t));
    EXPECT_TRUE(majorizes(a, a));
    if (majorizes(a, b) && majorizes(b, c)) EXPECT_TRUE(majorizes(a, c));
    if (majorizes(a, b) && majorizes(b, a)) {
      for (int i = 0; i < 4; ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
    }
  }
  // Integer version on a chain.
  EXPECT_TRUE(majorizes(std::vector<int>{4, 0}, std::vector<int>{3, 1}));
  EXPECT_TRUE(majorizes(std::vector<int>{3, 1}, std::vector<int>{2, 2}));
  EXPECT_TRUE(majorizes(std::vector<int>{4, 0}, std::vector<int>{2, 2}));
}

TEST(YoungDiagram, TrailingZerosDropped) {
  EXPECT_EQ(YoungDiagram({3, 1, 0, 0}), YoungDiagram({3, 1}));
  EXPECT_EQ(YoungDiagram({3, 1}).size(), 4);
  EXPECT_THROW(YoungDiagram({1, 2}), Error);
  EXPECT_THROW(YoungDiagram({2, -1}), Error);
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(YoungDiagram({5, 4, 2, 1})), YoungDiagram({4, 3, 2, 2, 1}));
  EXPECT_EQ(transpose(YoungDiagram({1})), YoungDiagram({1}));
  EXPECT_EQ(transpose(YoungDiagram({3, 3})), YoungDiagram({2, 2, 2}));
}

TEST(Transpose, InvolutionUpToTwentyCells) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int budget, int maxpart) {
    parts.push_back(cur);
    for (int p = 1; p <= std::min(budget, maxpart); ++p) {
      cur.push_back(p);
      rec(budget - p, p);
      cur.pop_back();
    }
  };
  rec(20, 20);
  int count = 0;
  for (const auto& p : parts) {
    const YoungDiagram d(p);
    EXPECT_EQ(transpose(transpose(d)), d);
    EXPECT_EQ(transpose(d).size(), d.size());
    ++count;
  }
  EXPECT_EQ(count, 2714);  // partitions of 0..20
}

TEST(GaleRyser, Examples) {
  EXPECT_TRUE(gale_ryser(YoungDiagram({2, 2, 1}), YoungDiagram({3, 1, 1})));
  EXPECT_TRUE(gale_ryser(YoungDiagram({3}), YoungDiagram({1, 1, 1})));
  EXPECT_FALSE(gale_ryser(YoungDiagram({3}), YoungDiagram({3})));
  try {
    gale_ryser(YoungDiagram({2}), YoungDiagram({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
  }
}

TEST(GaleRyser, AgreesWithExhaustiveMatrices) {
  const auto margins = oracle::realisable_margins(4, 4);
  const auto parts = oracle::box_partitions(4, 4);
  int pairs = 0;
  for (const auto& r : parts) {
    for (const auto& c : parts) {
      if (std::accumulate(r.begin(), r.end(), 0) != std::accumulate(c.begin(), c.end(), 0))
        continue;
      ++pairs;
      EXPECT_EQ(gale_ryser(YoungDiagram(r), YoungDiagram(c)), margins.count({r, c}) > 0);
    }
  }
  EXPECT_EQ(pairs, 390);  // sum over sizes of (partitions of that size)^2
}

TEST(ParticleHole, Examples) {
  auto s = particle_hole({{1, 1, 1, 0, 0, 0}, 3}, 6);
  EXPECT_EQ(s.values, (std::vector<double>{1, 1, 1, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(s.trace_tag, 3);
  s = particle_hole({{1, 1, 1, 1, 1, 1, 1, 0}, 7}, 8);
  EXPECT_EQ(s.values, (std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(s.trace_tag, 1);
  EXPECT_THROW(particle_hole({{1.5, 0.5, 0, 0}, 2}, 4), Error);
}

TEST(ParticleHole, InvolutionPreservingPauliBox) {
  for (int t = 0; t < 200; ++t) {
    const auto psi = haar_fermion(7, 3, derive_seed(9, t));
    const auto lam = spectrum(one_rdm(psi));
    const auto d = particle_hole(lam, 7);
    for (double x : d.values) {
      EXPECT_GE(x, -1e-12);
      EXPECT_LE(x, 1 + 1e-12);
    }
    EXPECT_NEAR(std::accumulate(d.values.begin(), d.values.end(), 0.0), 4, 1e-10);
    EXPECT_TRUE(std::is_sorted(d.values.rbegin(), d.values.rend()));
    const auto back = particle_hole(d, 7);
    for (int i = 0; i < 7; ++i) EXPECT_NEAR(back.values[i], lam.values[i], 1e-14);
  }
}

TEST(ParticleHole, BorlandDennisInvariant) {
  for (int t = 0; t < 200; ++t) {
    const auto lam = spectrum(one_rdm(haar_fermion(6, 3, derive_seed(10, t))));
    const auto d = particle_hole(lam, 6);
    const auto a = check_family("BD6", {{lam.values}, {}});
    const auto b = check_family("BD6", {{d.values}, {}});
    EXPECT_EQ(a.satisfied, b.satisfied);
    EXPECT_TRUE(a.satisfied);
  }
  // A violating point stays violating.
  const Spectrum bad{{1, 1, 0.5, 0.5, 0, 0}, 3};
  EXPECT_FALSE(check_family("BD6", {{bad.values}, {}}).satisfied);
  EXPECT_FALSE(check_family("BD6", {{particle_hole(bad, 6).values}, {}}).satisfied);
}

TEST(Renormalize, Examples) {
  auto s = renormalize({{3, 0, 0}, 3}, 1);
  EXPECT_EQ(s.values, (std::vector<double>{1, 0, 0}));
  EXPECT_DOUBLE_EQ(s.trace_tag, 1);
  s = renormalize({{0.5, 0.5}, 1}, 2);
  EXPECT_EQ(s.values, (std::vector<double>{1, 1}));
  const Spectrum x{{0.7, 0.2, 0.1}, 1};
  const auto back = renormalize(renormalize(x, 3), 1);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(back.values[i], x.values[i], 1e-14);
  EXPECT_THROW(renormalize({{0, 0}, 0}, 1), Error);
}
