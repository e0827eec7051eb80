// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "entclone/monotones.hpp"
#include "entclone/random_states.hpp"
#include "entclone/state_factory.hpp"
#include "oracles.hpp"

namespace entclone {
namespace {

const double kH = 1.0 / std::sqrt(2.0);

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

ComplexVector real_vec(std::initializer_list<double> values) {
  ComplexVector v(values.size());
  int k = 0;
  for (double x : values) v[k++] = x;
  return v;
}

TEST(Bell, MatchesDefinition) {
  EXPECT_LT((bell(0, 0).amp() - real_vec({kH, 0, 0, kH})).norm(), 1e-15);
  EXPECT_LT((bell(1, 0).amp() - real_vec({0, kH, kH, 0})).norm(), 1e-15);
  EXPECT_LT((bell(0, 1).amp() - real_vec({kH, 0, 0, -kH})).norm(), 1e-15);
  EXPECT_LT((bell(1, 1).amp() - real_vec({0, kH, -kH, 0})).norm(), 1e-15);
  EXPECT_THROW(bell(2, 0), InvalidInput);
}

TEST(Bell, GramMatrixIsIdentity) {
  ComplexMatrix basis(4, 4);
  for (int k = 0; k < 4; ++k) basis.col(k) = bell(k / 2, k % 2).amp();
  EXPECT_LE(max_abs(basis.adjoint() * basis - ComplexMatrix::Identity(4, 4)), 1e-12);
}

TEST(SchmidtState, MaximalCasesAreBellStates) {
  EXPECT_LE((schmidt_state(SchmidtKind::Psi1, kH).amp() - bell(0, 0).amp()).norm(), 1e-12);
  EXPECT_LE((schmidt_state(SchmidtKind::Psi3, kH).amp() - bell(1, 0).amp()).norm(), 1e-12);
}

TEST(SchmidtState, FamiliesAreOrthogonalForEveryA) {
  for (double a = 0.01; a < 1.0; a += 0.0137) {
    const ComplexVector p1 = schmidt_state(SchmidtKind::Psi1, a).amp();
    EXPECT_LE(std::abs(p1.dot(schmidt_state(SchmidtKind::Psi2, a).amp())), 1e-12);
    EXPECT_LE(std::abs(p1.dot(schmidt_state(SchmidtKind::Psi3, a).amp())), 1e-12);
  }
}

TEST(SchmidtState, RejectsProductStates) {
  for (double a : {0.0, 1.0, -0.2, 1.3, std::nan("")}) {
    EXPECT_THROW(schmidt_state(SchmidtKind::Psi1, a), InvalidInput) << a;
  }
}

TEST(Density, IsRankOneProjector) {
  std::mt19937_64 rng(31);
  const PureState psi = random_pure_state(2, 3, rng);
  const BipartiteDensity rho = density(psi);
  EXPECT_NEAR(rho.mat().trace().real(), 1.0, 1e-12);
  EXPECT_LE(max_abs(rho.mat() * rho.mat() - rho.mat()), 1e-12);
  const EigenDecomposition eig = hermitian_eigs(rho.mat());
  EXPECT_NEAR(eig.values[5], 1.0, 1e-12);
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(eig.values[k], 0.0, 1e-12);
}

TEST(Mix, SameFamilyCrossTermsCancel) {
  // a^2|00><00| + ab(|00><11| + h.c.) + b^2|11><11| plus the Psi2 projector
  // with -ab cross terms: the average is diag(1/2, 0, 0, 1/2).
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  for (double a : {0.2, 0.6, 0.9}) {
    const BipartiteDensity p1 = density(schmidt_state(SchmidtKind::Psi1, a));
    const BipartiteDensity p2 = density(schmidt_state(SchmidtKind::Psi2, a));
    const WeightedState terms[] = {{0.5, p1}, {0.5, p2}};
    EXPECT_LE(max_abs(mix(terms).mat() - expected), 1e-15);
  }
}

TEST(Mix, FourBellStatesGiveMaximallyMixed) {
  std::vector<BipartiteDensity> bells;
  for (int k = 0; k < 4; ++k) bells.push_back(density(bell(k / 2, k % 2)));
  std::vector<WeightedState> terms;
  for (const auto& b : bells) terms.push_back({0.25, b});
  EXPECT_LE(max_abs(mix(terms).mat() - ComplexMatrix::Identity(4, 4) / 4.0), 1e-15);
}

TEST(Mix, SingleTermAndErrors) {
  std::mt19937_64 rng(32);
  const BipartiteDensity rho = random_density(2, 2, rng);
  const WeightedState one[] = {{1.0, rho}};
  EXPECT_LE(max_abs(mix(one).mat() - rho.mat()), 1e-15);

  const WeightedState bad_sum[] = {{0.5, rho}, {0.4, rho}};
  EXPECT_THROW(mix(bad_sum), InvalidInput);
  const WeightedState negative[] = {{1.5, rho}, {-0.5, rho}};
  EXPECT_THROW(mix(negative), InvalidInput);
  const BipartiteDensity other = random_density(1, 4, rng);
  const WeightedState mismatch[] = {{0.5, rho}, {0.5, other}};
  EXPECT_THROW(mix(mismatch), InvalidInput);
}

TEST(PermuteToAliceBob, GroupedLayoutIsIdentity) {
  std::mt19937_64 rng(33);
  const BipartiteDensity rho = random_density(4, 4, rng);
  const BipartiteDensity same =
      permute_to_alice_bob(rho.mat(), {Side::A, Side::A, Side::B, Side::B});
  EXPECT_EQ(max_abs(same.mat() - rho.mat()), 0.0);
  EXPECT_EQ(same.dimA(), 4);
}

TEST(PermuteToAliceBob, TwoQubitSwap) {
  std::mt19937_64 rng(34);
  const BipartiteDensity ra = random_density(2, 1, rng);
  const BipartiteDensity rb = random_density(2, 1, rng);
  // Slot 0 belongs to Bob, slot 1 to Alice.
  const BipartiteDensity out = permute_to_alice_bob(tensor(rb.mat(), ra.mat()), {Side::B, Side::A});
  EXPECT_LE(max_abs(out.mat() - tensor(ra.mat(), rb.mat())), 1e-15);
}

TEST(PermuteToAliceBob, PreservesSpectrum) {
  std::mt19937_64 rng(35);
  for (int k = 0; k < 10; ++k) {
    const BipartiteDensity rho = random_density(4, 4, rng);
    const BipartiteDensity out =
        permute_to_alice_bob(rho.mat(), {Side::B, Side::A, Side::B, Side::A});
    EXPECT_LE((hermitian_eigs(rho.mat()).values - hermitian_eigs(out.mat()).values)
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(PermuteToAliceBob, LayoutLengthMismatch) {
  EXPECT_THROW(permute_to_alice_bob(ComplexMatrix::Identity(4, 4) / 4.0, {Side::A}),
               InvalidInput);
}

oracle::TwoQubit psi1(double a) { return oracle::schmidt(a, 0, 0, std::sqrt(1 - a * a)); }
oracle::TwoQubit psi2(double a) { return oracle::schmidt(std::sqrt(1 - a * a), 0, 0, -a); }
oracle::TwoQubit psi3(double a) { return oracle::schmidt(0, a, std::sqrt(1 - a * a), 0); }

TEST(BuildCloningPair, MatchesGroupedBasisConstruction) {
  for (CloningCase which : {CloningCase::I, CloningCase::II}) {
    for (auto [a, c] : {std::pair{0.6, 0.5}, std::pair{0.3, 0.8}, std::pair{kH, kH}}) {
      const auto partner = which == CloningCase::I ? psi2(a) : psi3(a);
      const oracle::Mat out = 0.5 * oracle::projector(oracle::grouped_copies(psi1(a), 2)) +
                              0.5 * oracle::projector(oracle::grouped_copies(partner, 2));
      const oracle::Mat in = 0.5 * oracle::projector(oracle::grouped_pair(psi1(a), psi1(c))) +
                             0.5 * oracle::projector(oracle::grouped_pair(partner, psi1(c)));
      const CloningIO io = build_cloning_pair(which, a, c);
      EXPECT_LE(max_abs(io.rho_out.mat() - out), 1e-15);
      EXPECT_LE(max_abs(io.rho_in.mat() - in), 1e-15);
      EXPECT_EQ(io.rho_in.dimA(), 4);
      EXPECT_EQ(io.rho_out.dimB(), 4);
      EXPECT_NEAR(io.rho_in.mat().trace().real(), 1.0, 1e-12);
      EXPECT_NEAR(io.rho_out.mat().trace().real(), 1.0, 1e-12);
      EXPECT_EQ(io.scenario.a, a);
      EXPECT_EQ(io.scenario.c, c);
      EXPECT_EQ(io.layout_out, (QubitLayout{Side::A, Side::B, Side::A, Side::B}));
    }
  }
}

TEST(BuildCloningPair, NegativityOfInputAtMaximalBlank) {
  EXPECT_NEAR(negativity(build_cloning_pair(CloningCase::I, kH, kH).rho_in), 1.0, 1e-10);
}

TEST(BuildCloningPair, CaseIOutputNegativityAtHalf) {
  // Oracle: ungrouped 16x16 output with qubits 1 and 3 transposed in place.
  const double a = 0.5;
  const double b = std::sqrt(1 - a * a);
  const Eigen::VectorXcd p1 = real_vec({a, 0, 0, b});
  const Eigen::VectorXcd p2 = real_vec({b, 0, 0, -a});
  const Eigen::VectorXcd c1 = Eigen::kroneckerProduct(p1, p1).eval();
  const Eigen::VectorXcd c2 = Eigen::kroneckerProduct(p2, p2).eval();
  const oracle::Mat ungrouped = 0.5 * oracle::projector(c1) + 0.5 * oracle::projector(c2);
  const double oracle_value =
      oracle::negativity_of(oracle::transpose_slots(ungrouped, {false, true, false, true}));
  const double closed = 4 * a * a * b * b + 4 * a * b * std::abs(a * a - b * b);
  EXPECT_NEAR(oracle_value, closed, 1e-12);
  EXPECT_NEAR(closed, 1.6160254, 1e-6);

  const CloningIO io = build_cloning_pair(CloningCase::I, a, kH);
  EXPECT_NEAR(negativity(io.rho_out), 1.6160254, 1e-6);
  EXPECT_NEAR(negativity(io.rho_out), oracle_value, 1e-12);
}

TEST(BuildCloningPair, BranchEntanglementIsTwiceSchmidtEntropy) {
  for (double a : {0.2, 0.45, 0.8}) {
    const double expected = 2.0 * oracle::binary_entropy_bits(a * a);
    for (const auto& branch : {psi1(a), psi2(a), psi3(a)}) {
      const PureState copies(oracle::grouped_copies(branch, 2), 4, 4);
      EXPECT_NEAR(entanglement_entropy(copies), expected, 1e-10);
    }
  }
}

TEST(BuildCloningPair, RejectsDegenerateParameters) {
  EXPECT_THROW(build_cloning_pair(CloningCase::I, 0.0, 0.5), InvalidInput);
  EXPECT_THROW(build_cloning_pair(CloningCase::II, 0.5, 1.0), InvalidInput);
}

TEST(BuildThreeBellPair, OutputSpectrumAndMarginal) {
  const CloningIO io = build_three_bell_pair(bell(0, 0));
  EXPECT_EQ(io.rho_out.dim(), 64);
  EXPECT_EQ(io.rho_out.dimA(), 8);
  const RealVector values = hermitian_eigs(io.rho_out.mat()).values;
  for (int k = 0; k < 61; ++k) EXPECT_NEAR(values[k], 0.0, 1e-12);
  for (int k = 61; k < 64; ++k) EXPECT_NEAR(values[k], 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(vn_entropy(io.rho_out.mat()), std::log2(3.0), 1e-9);

  const ComplexMatrix bob = partial_trace(io.rho_out, Side::B);
  EXPECT_LE(max_abs(bob - ComplexMatrix::Identity(8, 8) / 8.0), 1e-15);
}

TEST(BuildThreeBellPair, MatchesGroupedBasisConstruction) {
  const oracle::TwoQubit b00 = oracle::schmidt(kH, 0, 0, kH);
  const oracle::TwoQubit b01 = oracle::schmidt(kH, 0, 0, -kH);
  const oracle::TwoQubit b10 = oracle::schmidt(0, kH, kH, 0);
  oracle::Mat out = oracle::Mat::Zero(64, 64);
  for (const auto& b : {b00, b01, b10}) out += oracle::projector(oracle::grouped_copies(b, 3)) / 3.0;

  // Oracle for the marginal: trace out the three Bob qubits by hand.
  oracle::Mat marginal = oracle::Mat::Zero(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k)
      for (int j = 0; j < 8; ++j) marginal(j, k) += out(i * 8 + j, i * 8 + k);
  EXPECT_LE(max_abs(marginal - ComplexMatrix::Identity(8, 8) / 8.0), 1e-15);

  const PureState blank = schmidt_state(SchmidtKind::Phi, 0.3);
  const CloningIO io = build_three_bell_pair(blank);
  EXPECT_LE(max_abs(io.rho_out.mat() - out), 1e-15);
  EXPECT_NEAR(io.rho_in.mat().trace().real(), 1.0, 1e-12);
  EXPECT_EQ(io.scenario.kind, ScenarioKind::ThreeBell);
}

TEST(BuildThreeBellPair, RejectsWrongBlankDimension) {
  std::mt19937_64 rng(36);
  EXPECT_THROW(build_three_bell_pair(random_pure_state(2, 3, rng)), InvalidInput);
}

}  // namespace
}  // namespace entclone
