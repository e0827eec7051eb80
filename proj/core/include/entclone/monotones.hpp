// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "entclone/matrix_core.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {

/// ||rho^{T_B}||_1 - 1.
double negativity(const BipartiteDensity& rho);

/// Entropy of the reduced state of a pure state, in ebits.
double entanglement_entropy(const PureState& psi);

/// Coherent information S(rho_B) - S(rho). Reported raw; negative values mean
/// the bound is vacuous.
double hashing_lower_bound(const BipartiteDensity& rho);

struct ProductTerm {
  ComplexVector alice;  // normalized, size dimA
  ComplexVector bob;    // normalized, size dimB
};

/// sigma = sum_k w_k |x_k><x_k| (x) |y_k><y_k|, separable by construction.
struct SeparableDecomposition {
  int dimA = 0;
  int dimB = 0;
  std::vector<double> weights;
  std::vector<ProductTerm> terms;

  ComplexMatrix matrix() const;
  BipartiteDensity density() const;
};

/// Combines decompositions of sigma1 (A1|B1) and sigma2 (A2|B2) into one of
/// sigma1 (x) sigma2 on (A1 A2 | B1 B2).
SeparableDecomposition tensor_decompositions(const SeparableDecomposition& first,
                                             const SeparableDecomposition& second);

enum class GradientMode { Analytic, CentralDifference };

struct ReeOptions {
  /// Number of product terms; 0 selects (dimA*dimB)^2 capped at kMaxDefaultTerms.
  int terms = 0;
  int iters = 2000;
  int restarts = 4;
  std::uint64_t seed = 42;
  /// Stop once the objective improved by less than this over `patience` steps.
  double stall_tolerance = 1e-9;
  int patience = 50;
  GradientMode gradient = GradientMode::Analytic;
  double fd_step = 1e-5;
  /// Used verbatim as the first start; its size overrides `terms`.
  std::optional<SeparableDecomposition> warm_start;

  static constexpr int kMaxDefaultTerms = 64;
};

struct ReeResult {
  double upper_bound = kInfinity;
  SeparableDecomposition sigma;
  int iterations = 0;
  bool converged = false;
};

int default_ree_terms(int dimA, int dimB);

/// Upper bound on the relative entropy of entanglement: minimizes S(rho||sigma)
/// by gradient descent over sigma in a K-term product-state ansatz. The best
/// restart wins; ties go to the earlier restart.
ReeResult ree_upper_bound(const BipartiteDensity& rho, const ReeOptions& options = {});

/// Plain-text report: value, K, iterations, converged flag, then one
/// "TERM <k> <weight>" line and a PVEC block (the product vector) per term.
void write_ree_report(std::ostream& os, const ReeResult& result);

}  // namespace entclone
