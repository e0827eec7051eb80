// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "entclone/matrix_core.hpp"

namespace entclone {

/// Normalized pure state of an Alice/Bob system.
class PureState {
 public:
  PureState(ComplexVector amp, int dimA, int dimB);

  const ComplexVector& amp() const noexcept { return amp_; }
  int dimA() const noexcept { return dimA_; }
  int dimB() const noexcept { return dimB_; }

 private:
  ComplexVector amp_;
  int dimA_;
  int dimB_;
};

/// The two-qubit Schmidt-form families:
///   Psi1 = a|00> + b|11>,  Psi2 = b|00> - a|11>,
///   Psi3 = a|01> + b|10>,  Phi  = c|00> + d|11>  (c passed as `a`).
enum class SchmidtKind { Psi1, Psi2, Psi3, Phi };

std::string_view to_string(SchmidtKind kind);

/// Bell state (1/sqrt2) sum_j (-1)^{jn} |j>|j xor m>.
PureState bell(int m, int n);

/// Throws InvalidInput("degenerate product state") unless 0 < a < 1.
PureState schmidt_state(SchmidtKind kind, double a);

/// |psi><psi|.
BipartiteDensity density(const PureState& psi);

struct WeightedState {
  double weight;
  std::reference_wrapper<const BipartiteDensity> rho;
};

BipartiteDensity mix(std::span<const WeightedState> terms);

using QubitLayout = std::vector<Side>;

/// Regroups a multi-qubit operator so that every A slot (in original order)
/// precedes every B slot.
BipartiteDensity permute_to_alice_bob(const ComplexMatrix& m, const QubitLayout& layout);

enum class CloningCase { I, II };

enum class ScenarioKind { CaseI, CaseII, ThreeBell };

struct Scenario {
  ScenarioKind kind;
  double a = 0.0;  // unused for ThreeBell
  double c = 0.0;
};

/// Would-be cloner input and output. Both densities are already regrouped as
/// (all Alice qubits | all Bob qubits); the layouts record the pre-regroup
/// slot order.
struct CloningIO {
  BipartiteDensity rho_in;
  BipartiteDensity rho_out;
  Scenario scenario;
  QubitLayout layout_in;
  QubitLayout layout_out;
};

/// rho_in  = [1/2 P(Psi1) + 1/2 P(Psi_k)] (x) P(Phi(c)),
/// rho_out = 1/2 P(Psi1 (x) Psi1) + 1/2 P(Psi_k (x) Psi_k),
/// with Psi_k = Psi2 for case I and Psi3 for case II.
CloningIO build_cloning_pair(CloningCase which, double a, double c);

/// Cloning of B00, B01, B10 with a two-qubit blank.
CloningIO build_three_bell_pair(const PureState& blank);

}  // namespace entclone
