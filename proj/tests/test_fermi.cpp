#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmp/catalog.hpp"
#include "qmp/error.hpp"
#include "qmp/fermi.hpp"
#include "qmp/rng.hpp"

using namespace qmp;

namespace {

CMatrix random_hermitian(int n, std::uint64_t seed) {
  CVector g = complex_gaussian_vector(static_cast<std::size_t>(n * n), seed);
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = g(i * n + j);
  return (m + m.adjoint()) / 2.0;
}

double expectation(const CMatrix& h, const CVector& v) { return (v.adjoint() * h * v)(0, 0).real(); }

}  // namespace

TEST(FermionBasis, LexicographicBijection) {
  const FermionBasis b(6, 3);
  ASSERT_EQ(b.size(), 20u);
  const auto subs = oracle::subsets(6, 3);
  for (std::size_t k = 0; k < b.size(); ++k) {
    std::vector<int> one_based;
    for (int i : subs[k]) one_based.push_back(i + 1);
    EXPECT_EQ(b.subset(k), one_based);
    EXPECT_EQ(b.index_of_subset(one_based), k);
    EXPECT_EQ(b.index_of(b.mask(k)), static_cast<std::ptrdiff_t>(k));
  }
  EXPECT_EQ(b.index_of(0b11), -1);
  EXPECT_EQ(binomial(8, 4), 70u);
}

TEST(Slater, IndicesAndOneRdm) {
  const FermionBasis b(6, 3);
  auto s = slater(b, {1, 2, 3});
  EXPECT_EQ(s.amplitudes(0), Complex(1));
  EXPECT_NEAR(s.amplitudes.norm(), 1, 0);
  s = slater(b, {4, 5, 6});
  EXPECT_EQ(s.amplitudes(19), Complex(1));
  const auto rho = one_rdm(slater(b, {2, 4, 5})).entries;
  for (int i = 0; i < 6; ++i) {
    const double occ = (i == 1 || i == 3 || i == 4) ? 1 : 0;
    EXPECT_NEAR(std::abs(rho(i, i) - occ), 0, 1e-15);
  }
  EXPECT_NEAR((rho - CMatrix(rho.diagonal().asDiagonal())).norm(), 0, 1e-15);
  EXPECT_THROW(slater(b, {1, 2}), Error);
  EXPECT_THROW(slater(b, {1, 2, 7}), Error);
}

TEST(OneRdm, SuperpositionOfComplementarySlaters) {
  const FermionBasis b(6, 3);
  const double a = 0.3, c = 0.7;
  FermionState psi{b, CVector::Zero(20)};
  psi.amplitudes(0) = std::sqrt(a);
  psi.amplitudes(19) = std::sqrt(c);
  const auto rho = one_rdm(psi).entries;
  CMatrix expect = CMatrix::Zero(6, 6);
  for (int i = 0; i < 3; ++i) expect(i, i) = a;
  for (int i = 3; i < 6; ++i) expect(i, i) = c;
  EXPECT_LT((rho - expect).norm(), 1e-14);
  EXPECT_LT((oracle::embedded_one_rdm(psi.amplitudes, 6, 3) - expect).norm(), 1e-14);
}

TEST(OneRdm, MatchesEmbeddedAntisymmetricTensor) {
  for (auto [r, n] : {std::pair{4, 2}, {5, 2}, {6, 3}, {5, 3}, {6, 4}}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto psi = haar_fermion(r, n, derive_seed(r * 10 + n, seed));
      const auto rho = one_rdm(psi).entries;
      EXPECT_LT((rho - oracle::embedded_one_rdm(psi.amplitudes, r, n)).norm(), 1e-12)
          << r << "," << n;
    }
  }
}

TEST(OneRdm, BorlandDennisPairSums) {
  for (int t = 0; t < 50; ++t) {
    const auto s = spectrum(one_rdm(haar_fermion(6, 3, derive_seed(31, t)))).values;
    EXPECT_NEAR(s[0] + s[5], 1, 1e-10);
    EXPECT_NEAR(s[1] + s[4], 1, 1e-10);
    EXPECT_NEAR(s[2] + s[3], 1, 1e-10);
    for (double x : s) {
      EXPECT_GE(x, -1e-10);
      EXPECT_LE(x, 1 + 1e-10);
    }
  }
}

TEST(OneRdm, MixedInputMatchesPureCase) {
  const auto psi = haar_fermion(5, 2, 4);
  const CMatrix rho = psi.amplitudes * psi.amplitudes.adjoint();
  EXPECT_LT((one_rdm(psi.basis, rho).entries - one_rdm(psi).entries).norm(), 1e-13);
}

TEST(TwoRdm, SlaterPair) {
  const FermionBasis b(4, 2);
  const auto d = two_rdm(slater(b, {1, 2}));
  EXPECT_NEAR(d.matrix.trace().real(), 2, 1e-14);
  EXPECT_NEAR(d.trace_norm, 2, 0);
  EXPECT_FALSE(d.normalization.empty());
  EXPECT_EQ(d.pairs.front(), (std::pair<int, int>{0, 1}));
  EXPECT_NEAR(std::abs(d.matrix(0, 0) - 2.0), 0, 1e-14);
  EXPECT_NEAR(d.matrix.norm(), 2, 1e-14);  // rank one
}

TEST(TwoRdm, ContractionReproducesOneRdm) {
  for (int t = 0; t < 5; ++t) {
    const auto psi = haar_fermion(6, 3, derive_seed(7, t));
    const auto d = two_rdm(psi);
    EXPECT_LT((d.matrix - d.matrix.adjoint()).norm(), 1e-12);
    EXPECT_NEAR(d.matrix.trace().real(), 6, 1e-10);
    const CMatrix rho = one_rdm(psi).entries;
    EXPECT_LT((contract_two_rdm(d, 6) - 2.0 * rho).norm(), 1e-10);
    // Independent contraction with explicit antisymmetry signs.
    auto gamma = [&](int i, int j, int k, int l) -> Complex {
      if (i == j || k == l) return 0;
      int s = 1;
      if (i > j) { std::swap(i, j); s = -s; }
      if (k > l) { std::swap(k, l); s = -s; }
      auto idx = [&](int a, int b) {
        for (std::size_t p = 0; p < d.pairs.size(); ++p)
          if (d.pairs[p] == std::pair{a, b}) return p;
        return d.pairs.size();
      };
      return static_cast<double>(s) * d.matrix(idx(i, j), idx(k, l)) / 2.0;
    };
    CMatrix c = CMatrix::Zero(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < 6; ++k)
        for (int j = 0; j < 6; ++j) c(i, k) += gamma(i, j, k, j);
    EXPECT_LT((c - 2.0 * rho).norm(), 1e-10);
  }
}

TEST(TwoRdm, RequiresTwoParticles) {
  EXPECT_THROW(two_rdm(haar_fermion(4, 1, 1)), Error);
}

TEST(Energy, TwoParticlesIsDirectExpectation) {
  const auto psi = haar_fermion(4, 2, 3);
  const CMatrix h1 = random_hermitian(4, 5);
  const CMatrix h12 = random_hermitian(6, 6);
  const CMatrix h = oracle::fermion_hamiltonian(h1, h12, 4, 2);
  EXPECT_NEAR(energy_from_two_rdm(h1, h12, psi), expectation(h, psi.amplitudes), 1e-10);
}

TEST(Energy, OneBodyOnlyEqualsTraceWithOneRdm) {
  const auto psi = haar_fermion(6, 3, 8);
  const CMatrix h1 = random_hermitian(6, 9);
  const CMatrix zero = CMatrix::Zero(15, 15);
  const double e = energy_from_two_rdm(h1, zero, psi);
  EXPECT_NEAR(e, (h1 * one_rdm(psi).entries).trace().real(), 1e-10);
  EXPECT_NEAR(e, expectation(oracle::fermion_hamiltonian(h1, zero, 6, 3), psi.amplitudes),
              1e-10);
}

TEST(Energy, AgreesWithAssembledHamiltonian) {
  for (int t = 0; t < 3; ++t) {
    const auto psi = haar_fermion(6, 3, derive_seed(12, t));
    const CMatrix h1 = random_hermitian(6, derive_seed(13, t));
    const CMatrix h12 = random_hermitian(15, derive_seed(14, t));
    const CMatrix h = oracle::fermion_hamiltonian(h1, h12, 6, 3);
    EXPECT_NEAR(energy_from_two_rdm(h1, h12, psi), expectation(h, psi.amplitudes), 1e-10);
  }
}

TEST(Energy, ShapeMismatchRejected) {
  const auto psi = haar_fermion(6, 3, 1);
  EXPECT_THROW(energy_from_two_rdm(random_hermitian(5, 1), CMatrix::Zero(15, 15), psi), Error);
  EXPECT_THROW(energy_from_two_rdm(random_hermitian(6, 1), CMatrix::Zero(10, 10), psi), Error);
}

TEST(HaarFermion, DeterministicAndNormalized) {
  const auto a = haar_fermion(7, 3, 99);
  const auto b = haar_fermion(7, 3, 99);
  EXPECT_EQ(a.amplitudes, b.amplitudes);
  EXPECT_NEAR(a.amplitudes.norm(), 1, 1e-12);
  EXPECT_THROW(haar_fermion(3, 3, 1), Error);
  EXPECT_THROW(haar_fermion(3, 0, 1), Error);
}

TEST(HaarFermion, PauliBoundsOnManySamples) {
  for (int t = 0; t < 10000; ++t) {
    const auto s = spectrum(one_rdm(haar_fermion(6, 3, derive_seed(55, t))));
    ASSERT_GE(s.values.back(), -1e-10);
    ASSERT_LE(s.values.front(), 1 + 1e-10);
    ASSERT_NEAR(std::accumulate(s.values.begin(), s.values.end(), 0.0), 3, 1e-10);
  }
}

TEST(HaarFermion, TwoParticleSpectraEvenlyDegenerate) {
  for (int r : {4, 5, 6}) {
    for (int t = 0; t < 10000; ++t) {
      const auto s = spectrum(one_rdm(haar_fermion(r, 2, derive_seed(60 + r, t))));
      ASSERT_LT(degeneracy_defect(s.values), 1e-8) << r << " " << t;
    }
  }
}

TEST(FermionOps, SignsMatchReference) {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    for (int p = 0; p < 6; ++p) {
      for (bool create : {false, true}) {
        const auto act = apply_fermion_op(mask, p, create);
        std::uint64_t m = mask;
        int sign = 1;
        const bool ok = oracle::fermion_op(m, p, create, sign);
        ASSERT_EQ(act.nonzero, ok);
        if (ok) {
          EXPECT_EQ(act.mask, m);
          EXPECT_EQ(act.sign, sign);
        }
      }
    }
  }
}
