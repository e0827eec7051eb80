// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "entclone/monotones.hpp"
#include "entclone/random_states.hpp"
#include "entclone/state_factory.hpp"
#include "entclone/state_io.hpp"
#include "oracles.hpp"

namespace entclone {
namespace {

const double kH = 1.0 / std::sqrt(2.0);

TEST(Negativity, BellStateIsOne) {
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(negativity(density(bell(k / 2, k % 2))), 1.0, 1e-10);
  }
}

TEST(Negativity, ClassicalMixtureIsZero) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  EXPECT_NEAR(negativity(BipartiteDensity(m, 2, 2)), 0.0, 1e-12);
}

TEST(Negativity, CloningInputIsTwoCD) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uniform(0.02, 0.98);
  for (int k = 0; k < 30; ++k) {
    const double a = uniform(rng);
    const double c = uniform(rng);
    for (CloningCase which : {CloningCase::I, CloningCase::II}) {
      EXPECT_NEAR(negativity(build_cloning_pair(which, a, c).rho_in),
                  2.0 * c * std::sqrt(1.0 - c * c), 1e-10);
    }
  }
}

TEST(Negativity, PureSchmidtStates) {
  for (double a = 0.03; a < 1.0; a += 0.047) {
    for (SchmidtKind kind :
         {SchmidtKind::Psi1, SchmidtKind::Psi2, SchmidtKind::Psi3, SchmidtKind::Phi}) {
      EXPECT_NEAR(negativity(density(schmidt_state(kind, a))), 2.0 * a * std::sqrt(1 - a * a),
                  1e-10);
    }
  }
}

TEST(Negativity, ProductLawOnGroupedProducts) {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    const BipartiteDensity rho = random_density(2, 2, rng, 1 + k % 2);
    const BipartiteDensity sigma = random_density(2, 2, rng, 1 + (k / 2) % 2);
    const double nr = negativity(rho);
    const double ns = negativity(sigma);
    EXPECT_NEAR(negativity(tensor_grouped(rho, sigma)), nr * ns + nr + ns, 1e-9);
  }
}

TEST(EntanglementEntropy, ReferenceValues) {
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(entanglement_entropy(bell(k / 2, k % 2)), 1.0, 1e-12);
  EXPECT_NEAR(entanglement_entropy(schmidt_state(SchmidtKind::Psi1, std::sqrt(0.3))), 0.8813,
              5e-4);
  ComplexVector zero = ComplexVector::Zero(4);
  zero[0] = 1.0;
  EXPECT_NEAR(entanglement_entropy(PureState(zero, 2, 2)), 0.0, 1e-12);
}

TEST(HashingLowerBound, ReferenceValues) {
  EXPECT_NEAR(hashing_lower_bound(density(bell(0, 0))), 1.0, 1e-12);
  EXPECT_NEAR(hashing_lower_bound(build_three_bell_pair(bell(0, 0)).rho_out),
              3.0 - std::log2(3.0), 1e-9);
  EXPECT_NEAR(hashing_lower_bound(BipartiteDensity(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2)),
              -1.0, 1e-12);
}

TEST(SeparableDecomposition, TensorMatchesGroupedProduct) {
  std::mt19937_64 rng(43);
  auto random_dec = [&rng](int terms) {
    SeparableDecomposition d{2, 2, {}, {}};
    std::uniform_real_distribution<double> u(0.1, 1.0);
    double total = 0.0;
    for (int k = 0; k < terms; ++k) {
      d.weights.push_back(u(rng));
      total += d.weights.back();
      d.terms.push_back({random_pure_state(2, 1, rng).amp(), random_pure_state(1, 2, rng).amp()});
    }
    for (double& w : d.weights) w /= total;
    return d;
  };
  const SeparableDecomposition s1 = random_dec(3);
  const SeparableDecomposition s2 = random_dec(4);
  const SeparableDecomposition joint = tensor_decompositions(s1, s2);
  EXPECT_EQ(joint.terms.size(), 12U);
  const BipartiteDensity expected = tensor_grouped(s1.density(), s2.density());
  EXPECT_LE((joint.matrix() - expected.mat()).cwiseAbs().maxCoeff(), 1e-14);
}

// Checks a ReeResult's structural invariants.
void expect_valid(const BipartiteDensity& rho, const ReeResult& r) {
  double total = 0.0;
  for (double w : r.sigma.weights) {
    EXPECT_GE(w, 0.0);
    total += w;
  }
  EXPECT_NEAR(total, 1.0, 1e-9);
  for (const auto& t : r.sigma.terms) {
    EXPECT_NEAR(t.alice.norm(), 1.0, 1e-9);
    EXPECT_NEAR(t.bob.norm(), 1.0, 1e-9);
  }
  const BipartiteDensity sigma = r.sigma.density();
  EXPECT_LE(trace_norm(partial_transpose(sigma)), 1.0 + 1e-8);
  EXPECT_NEAR(r.upper_bound, relative_entropy(rho, sigma), 1e-9);
  EXPECT_GE(r.upper_bound, -1e-10);
}

TEST(ReeUpperBound, MaximallyMixedIsSeparable) {
  const BipartiteDensity rho(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2);
  const ReeResult r = ree_upper_bound(rho);
  EXPECT_LE(r.upper_bound, 0.01);
  EXPECT_EQ(r.sigma.terms.size(), 16U);
  expect_valid(rho, r);
}

TEST(ReeUpperBound, PureStatesApproachSchmidtEntropy) {
  for (double a2 : {0.1, 0.3, 0.5}) {
    const PureState psi = schmidt_state(SchmidtKind::Psi1, std::sqrt(a2));
    const double e = entanglement_entropy(psi);
    const BipartiteDensity rho = density(psi);
    const ReeResult r = ree_upper_bound(rho);
    EXPECT_GE(r.upper_bound, e - 1e-6) << a2;
    EXPECT_LE(r.upper_bound, e + 0.01) << a2;
    expect_valid(rho, r);
  }
}

TEST(ReeUpperBound, DeterministicPerSeed) {
  std::mt19937_64 rng(44);
  const BipartiteDensity rho = random_density(2, 2, rng);
  ReeOptions opt;
  opt.iters = 200;
  opt.restarts = 2;
  opt.seed = 9;
  const ReeResult r1 = ree_upper_bound(rho, opt);
  const ReeResult r2 = ree_upper_bound(rho, opt);
  EXPECT_EQ(r1.upper_bound, r2.upper_bound);
  EXPECT_EQ(r1.iterations, r2.iterations);
  EXPECT_EQ(r1.sigma.weights, r2.sigma.weights);
}

TEST(ReeUpperBound, NonConvergenceIsReportedNotThrown) {
  ReeOptions opt;
  opt.iters = 3;
  opt.restarts = 1;
  const ReeResult r = ree_upper_bound(density(bell(0, 0)), opt);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 3);
  EXPECT_TRUE(std::isfinite(r.upper_bound));
}

TEST(ReeUpperBound, AnalyticGradientMatchesCentralDifferences) {
  // The finite-difference path serves as the oracle for the analytic one:
  // a single descent step from the same start must land on the same value.
  std::mt19937_64 rng(45);
  const BipartiteDensity rho = random_density(2, 2, rng);
  ReeOptions opt;
  opt.terms = 5;
  opt.iters = 1;
  opt.restarts = 1;
  opt.seed = 3;
  const ReeResult analytic = ree_upper_bound(rho, opt);
  opt.gradient = GradientMode::CentralDifference;
  const ReeResult numeric = ree_upper_bound(rho, opt);
  EXPECT_NEAR(analytic.upper_bound, numeric.upper_bound, 1e-7);
  for (std::size_t k = 0; k < analytic.sigma.weights.size(); ++k) {
    EXPECT_NEAR(analytic.sigma.weights[k], numeric.sigma.weights[k], 1e-7);
  }
}

TEST(ReeUpperBound, CentralDifferenceModeAlsoDescends) {
  const BipartiteDensity rho(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2);
  ReeOptions opt;
  opt.gradient = GradientMode::CentralDifference;
  opt.iters = 150;
  opt.restarts = 1;
  EXPECT_LE(ree_upper_bound(rho, opt).upper_bound, 0.01);
}

TEST(ReeUpperBound, ThreeBellTwoCopyMixtureBelowKnownBound) {
  const oracle::Mat two_copy =
      (oracle::projector(oracle::grouped_copies(oracle::schmidt(kH, 0, 0, kH), 2)) +
       oracle::projector(oracle::grouped_copies(oracle::schmidt(kH, 0, 0, -kH), 2)) +
       oracle::projector(oracle::grouped_copies(oracle::schmidt(0, kH, kH, 0), 2))) /
      3.0;
  const BipartiteDensity rho(two_copy, 4, 4);
  const ReeResult r = ree_upper_bound(rho);
  EXPECT_LE(r.upper_bound, 0.435);
  EXPECT_EQ(r.sigma.terms.size(), 64U);
  expect_valid(rho, r);
}

TEST(ReeUpperBound, SeededSubadditivity) {
  std::mt19937_64 rng(46);
  for (int k = 0; k < 5; ++k) {
    const BipartiteDensity r1 = random_density(2, 2, rng);
    const BipartiteDensity r2 = random_density(2, 2, rng);
    ReeOptions opt;
    opt.iters = 500;
    const ReeResult e1 = ree_upper_bound(r1, opt);
    const ReeResult e2 = ree_upper_bound(r2, opt);

    const SeparableDecomposition seed = tensor_decompositions(e1.sigma, e2.sigma);
    const BipartiteDensity joint_rho = tensor_grouped(r1, r2);
    // Relative entropy is additive for the returned decompositions.
    EXPECT_NEAR(relative_entropy(joint_rho, seed.density()), e1.upper_bound + e2.upper_bound,
                1e-9);

    ReeOptions joint_opt;
    joint_opt.iters = 50;
    joint_opt.restarts = 1;
    joint_opt.warm_start = seed;
    const ReeResult joint = ree_upper_bound(joint_rho, joint_opt);
    EXPECT_LE(joint.upper_bound, e1.upper_bound + e2.upper_bound + 1e-9);
  }
}

TEST(ReeUpperBound, RejectsMismatchedWarmStart) {
  ReeOptions opt;
  opt.warm_start = SeparableDecomposition{2, 3, {1.0}, {{ComplexVector::Ones(2).normalized(),
                                                        ComplexVector::Ones(3).normalized()}}};
  EXPECT_THROW(ree_upper_bound(density(bell(0, 0)), opt), InvalidInput);
}

TEST(ReeReport, ContainsHeaderAndPvecBlocks) {
  ReeOptions opt;
  opt.terms = 3;
  opt.iters = 10;
  opt.restarts = 1;
  const ReeResult r = ree_upper_bound(density(bell(0, 0)), opt);
  std::ostringstream os;
  write_ree_report(os, r);
  std::istringstream in(os.str());
  std::string key;
  std::string value;
  in >> key >> value;
  EXPECT_EQ(key, "ree_upper_bound");
  in >> key >> value;
  EXPECT_EQ(key, "terms");
  EXPECT_EQ(value, "3");
  in >> key >> value;
  EXPECT_EQ(key, "iterations");
  in >> key >> value;
  EXPECT_EQ(key, "converged");
  EXPECT_TRUE(value == "true" || value == "false");

  std::string line;
  std::getline(in, line);
  for (int k = 0; k < 3; ++k) {
    std::getline(in, line);
    EXPECT_EQ(line.rfind("TERM " + std::to_string(k) + ' ', 0), 0U) << line;
    const PureState product = read_pvec(in);
    EXPECT_EQ(product.dimA(), 2);
    // A product vector has vanishing entanglement.
    EXPECT_NEAR(entanglement_entropy(product), 0.0, 1e-9);
  }
}

}  // namespace
}  // namespace entclone
