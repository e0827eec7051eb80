// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "entclone/cloning_analysis.hpp"
#include "entclone/monotones.hpp"
#include "entclone/random_states.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

std::string g9(double v) { return fmt::format("{:.9g}", v); }

CriterionResult worked_example() {
  const BoundaryResult b = blank_boundary(CloningCase::II, 0.547722558);
  const double c_min_sq = b.c_min_sq.value_or(kInfinity);
  const double e_blank = b.e_blank_min.value_or(kInfinity);
  const double e_state = entanglement_entropy(schmidt_state(SchmidtKind::Psi1, std::sqrt(0.3)));
  const bool ok = within(c_min_sq, 0.42, 1e-5) && within(e_blank, 0.9815, 5e-4) &&
                  within(e_state, 0.8813, 5e-4);
  return {1,
          "case II worked example (minimal blank at a^2 = 0.3)",
          c_min_sq,
          0.42,
          1e-5,
          ok,
          fmt::format("e_blank_min={} (0.9815+-5e-4) entanglement(psi1)={} (0.8813+-5e-4)",
                      g9(e_blank), g9(e_state))};
}

CriterionResult maximal_blank() {
  const RangeResult r = maximal_blank_range(CloningCase::I);
  const double lo = r.a_low.value_or(kInfinity);
  const double hi = r.a_high.value_or(kInfinity);
  const bool tangent = std::any_of(r.tangent_points.begin(), r.tangent_points.end(),
                                   [](double t) { return within(t, kInvSqrt2, 1e-6); });
  const double sum_sq = lo * lo + hi * hi;
  const bool ok = within(lo, 0.230, 1e-3) && within(hi, 0.973, 1e-3) && tangent &&
                  within(sum_sq, 1.0, 1e-5);
  return {2,
          "maximal-blank range for case I",
          lo,
          0.230,
          1e-3,
          ok,
          fmt::format("a_high={} (0.973+-1e-3) tangent_at_1/sqrt2={} a_low^2+a_high^2={} (1+-1e-5)",
                      g9(hi), tangent ? "yes" : "no", g9(sum_sq))};
}

CriterionResult maximal_equality() {
  double worst = 0.0;
  bool ok = true;
  for (CloningCase which : {CloningCase::I, CloningCase::II}) {
    const FeasibilityVerdict v = verdict(which, kInvSqrt2, kInvSqrt2);
    worst = std::max(worst, std::abs(v.margin));
    ok = ok && v.verdict == Verdict::Boundary;
  }
  ok = ok && worst <= kVerdictTolerance;
  return {3, "equality at a = c = 1/sqrt2 (both cases)", worst, 0.0, kVerdictTolerance, ok,
          "max |margin| over cases I and II"};
}

CriterionResult same_entanglement_blank() {
  constexpr int kSamples = 50;
  int ruled_out = 0;
  int total = 0;
  double min_margin = kInfinity;
  for (int k = 0; k < kSamples; ++k) {
    const double a = 0.1 + (0.97 - 0.1) * (k + 1) / (kSamples + 1);
    if (std::abs(a - kInvSqrt2) < 1e-6) continue;
    for (CloningCase which : {CloningCase::I, CloningCase::II}) {
      const FeasibilityVerdict v = verdict(which, a, a);
      ++total;
      ruled_out += v.verdict == Verdict::RuledOut;
      min_margin = std::min(min_margin, v.margin);
    }
  }
  return {4,
          "same-entanglement blank is ruled out (c = a)",
          static_cast<double>(ruled_out),
          static_cast<double>(total),
          0.0,
          ruled_out == total,
          fmt::format("RULED_OUT count over {} a-values x 2 cases; min margin={}", total / 2,
                      g9(min_margin))};
}

CriterionResult oracle_equivalence(const AcceptanceOptions& options) {
  double worst = 0.0;
  std::string detail = "closed form vs 16x16 partial-transpose eigensolve, 1000 samples per case";
  bool ok = true;
  for (CloningCase which : {CloningCase::I, CloningCase::II}) {
    CrosscheckOptions cc;
    cc.samples = 1000;
    cc.seed = options.seed + (which == CloningCase::I ? 0 : 1);
    cc.extra_points = {{kInvSqrt2, kInvSqrt2}};
    cc.closed_form_offset = options.closed_form_offset;
    try {
      worst = std::max(worst, crosscheck(which, cc).max_abs_deviation);
    } catch (const ConsistencyError& e) {
      ok = false;
      worst = std::max(worst, std::abs(options.closed_form_offset));
      detail = e.what();
    }
  }
  ok = ok && worst <= kConsistencyTolerance;
  return {5, "closed-form vs numeric negativity", worst, 0.0, kConsistencyTolerance, ok, detail};
}

CriterionResult three_bell() {
  const double log2_3 = std::log2(3.0);
  const Bell3Report r = bell3_report(1.0);
  const bool ok = r.verdict == Bell3Verdict::Insufficient && within(r.required_blank, log2_3, 1e-12) &&
                  within(r.output_hashing, 3.0 - log2_3, 1e-9) &&
                  within(r.output_entropy, log2_3, 1e-9);
  return {6,
          "three-Bell blank requirement",
          r.required_blank,
          log2_3,
          1e-12,
          ok,
          fmt::format("verdict(1 ebit)={} hashing={} (3-log2 3 +-1e-9) S(rho_out)={} (log2 3 +-1e-9)",
                      to_string(r.verdict), g9(r.output_hashing), g9(r.output_entropy))};
}

CriterionResult relative_entropy_additivity(const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed + 7);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const BipartiteDensity rho1 = random_density(2, 2, rng);
    const BipartiteDensity rho2 = random_density(2, 2, rng);
    const BipartiteDensity sigma1 = random_density(2, 2, rng);
    const BipartiteDensity sigma2 = random_density(2, 2, rng);
    const double joint =
        relative_entropy(tensor_grouped(rho1, rho2), tensor_grouped(sigma1, sigma2));
    const double parts = relative_entropy(rho1, sigma1) + relative_entropy(rho2, sigma2);
    worst = std::max(worst, std::abs(joint - parts));
  }
  return {7, "relative entropy is additive on products", worst, 0.0, 1e-9, worst <= 1e-9,
          "20 random two-qubit pairs"};
}

CriterionResult ree_sanity(const AcceptanceOptions& options) {
  ReeOptions base;
  base.seed = options.seed;
  std::vector<std::string> failures;

  const BipartiteDensity mixed(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2);
  const double mixed_bound = ree_upper_bound(mixed, base).upper_bound;
  if (!(mixed_bound <= 0.01)) failures.push_back("I/4=" + g9(mixed_bound));

  std::string pure_detail;
  for (double a2 : {0.1, 0.3, 0.5}) {
    const PureState psi = schmidt_state(SchmidtKind::Psi1, std::sqrt(a2));
    const double e = entanglement_entropy(psi);
    const double bound = ree_upper_bound(density(psi), base).upper_bound;
    pure_detail += fmt::format(" a^2={}:{}-{}", a2, g9(bound), g9(e));
    if (!(bound >= e - 1e-6 && bound <= e + 0.01)) failures.push_back("pure a^2=" + g9(a2));
  }

  const ComplexVector b00 = bell(0, 0).amp();
  const ComplexVector b01 = bell(0, 1).amp();
  const ComplexVector b10 = bell(1, 0).amp();
  ComplexMatrix two_copy = ComplexMatrix::Zero(16, 16);
  for (const ComplexVector* v : {&b00, &b01, &b10}) {
    const ComplexVector z = tensor(*v, *v);
    two_copy += z * z.adjoint() / 3.0;
  }
  const BipartiteDensity bell_mix =
      permute_to_alice_bob(two_copy, {Side::A, Side::B, Side::A, Side::B});
  const double bell_bound = ree_upper_bound(bell_mix, base).upper_bound;
  if (!(bell_bound <= 0.435)) failures.push_back("three-Bell=" + g9(bell_bound));

  std::mt19937_64 rng(options.seed + 11);
  double worst_excess = -kInfinity;
  for (int k = 0; k < 5; ++k) {
    const BipartiteDensity rho1 = random_density(2, 2, rng);
    const BipartiteDensity rho2 = random_density(2, 2, rng);
    ReeOptions factor = base;
    factor.seed = options.seed + 100 + k;
    const ReeResult r1 = ree_upper_bound(rho1, factor);
    const ReeResult r2 = ree_upper_bound(rho2, factor);
    ReeOptions joint_opt = base;
    joint_opt.restarts = 1;
    joint_opt.iters = 100;
    joint_opt.warm_start = tensor_decompositions(r1.sigma, r2.sigma);
    const ReeResult joint = ree_upper_bound(tensor_grouped(rho1, rho2), joint_opt);
    const double excess = joint.upper_bound - (r1.upper_bound + r2.upper_bound);
    worst_excess = std::max(worst_excess, excess);
    if (!(excess <= 1e-9)) failures.push_back(fmt::format("subadditivity pair {}", k));
  }

  std::string detail = fmt::format("I/4={} pure(bound-E):{} seeded-subadditivity max excess={}",
                                   g9(mixed_bound), pure_detail, g9(worst_excess));
  if (!failures.empty()) {
    detail += " FAILED:";
    for (const auto& f : failures) detail += ' ' + f;
  }
  return {8, "REE upper-bound optimizer sanity (three-Bell two-copy bound)",
          bell_bound, 0.41504, 0.02, failures.empty(), detail};
}

CriterionResult property_suite(const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed + 13);
  double pt_dev = 0.0;
  for (int k = 0; k < 100; ++k) {
    const BipartiteDensity rho = random_density(2, 2, rng);
    const ComplexMatrix once = partial_transpose(rho);
    pt_dev = std::max(pt_dev, (partial_transpose(once, 2, 2) - rho.mat()).cwiseAbs().maxCoeff());
    pt_dev = std::max(pt_dev, std::abs(once.trace() - Complex(1.0, 0.0)));
    pt_dev = std::max(pt_dev, hermiticity_defect(once));
  }

  double mult_dev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const BipartiteDensity rho = random_density(2, 2, rng, 1 + k % 4);
    const BipartiteDensity sigma = random_density(2, 2, rng, 1 + (k / 4) % 4);
    const double joint = trace_norm(partial_transpose(tensor_grouped(rho, sigma)));
    mult_dev = std::max(mult_dev, std::abs(joint - trace_norm(partial_transpose(rho)) *
                                                       trace_norm(partial_transpose(sigma))));
  }

  ComplexMatrix basis(4, 4);
  for (int k = 0; k < 4; ++k) basis.col(k) = bell(k / 2, k % 2).amp();
  const double bell_dev =
      (basis.adjoint() * basis - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff();

  double perm_dev = 0.0;
  const QubitLayout layouts[] = {{Side::A, Side::B, Side::A, Side::B},
                                 {Side::B, Side::A, Side::A, Side::B},
                                 {Side::B, Side::B, Side::A, Side::A}};
  for (int k = 0; k < 10; ++k) {
    const BipartiteDensity rho = random_density(4, 4, rng);
    const BipartiteDensity regrouped = permute_to_alice_bob(rho.mat(), layouts[k % 3]);
    perm_dev = std::max(perm_dev, (hermitian_eigs(rho.mat()).values -
                                   hermitian_eigs(regrouped.mat()).values)
                                      .cwiseAbs()
                                      .maxCoeff());
  }

  double neg_dev = 0.0;
  std::uniform_real_distribution<double> uniform(0.01, 0.99);
  for (int k = 0; k < 50; ++k) {
    const double a = uniform(rng);
    for (SchmidtKind kind :
         {SchmidtKind::Psi1, SchmidtKind::Psi2, SchmidtKind::Psi3, SchmidtKind::Phi}) {
      const double n = negativity(density(schmidt_state(kind, a)));
      neg_dev = std::max(neg_dev, std::abs(n - 2.0 * a * std::sqrt(1.0 - a * a)));
    }
  }

  const int failed = (pt_dev > 1e-12) + (mult_dev > 1e-9) + (bell_dev > 1e-12) +
                     (perm_dev > 1e-12) + (neg_dev > 1e-10);
  return {9,
          "property suite",
          static_cast<double>(failed),
          0.0,
          0.0,
          failed == 0,
          fmt::format("failed checks; pt-involution={} (1e-12) tracenorm-mult={} (1e-9) "
                      "bell-gram={} (1e-12) perm-spectrum={} (1e-12) pure-negativity={} (1e-10)",
                      g9(pt_dev), g9(mult_dev), g9(bell_dev), g9(perm_dev), g9(neg_dev))};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results;
  results.push_back(worked_example());
  results.push_back(maximal_blank());
  results.push_back(maximal_equality());
  results.push_back(same_entanglement_blank());
  results.push_back(oracle_equivalence(options));
  results.push_back(three_bell());
  results.push_back(relative_entropy_additivity(options));
  results.push_back(ree_sanity(options));
  results.push_back(property_suite(options));
  return results;
}

void write_acceptance(std::ostream& os, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    os << fmt::format("[{}] C{} {}: measured={} expected={} tol={} | {}\n",
                      r.passed ? "PASS" : "FAIL", r.id, r.name, g9(r.measured), g9(r.expected),
                      g9(r.tolerance), r.detail);
  }
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.passed; });
}

}  // namespace entclone
