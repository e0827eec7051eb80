// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/state_factory.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace entclone {

namespace {

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

ComplexVector kron(const ComplexVector& x, const ComplexVector& y) {
  return Eigen::kroneckerProduct(x, y).eval();
}

ComplexMatrix projector(const ComplexVector& v) { return hermitize(v * v.adjoint()); }

void require_open_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidInput(std::string("degenerate product state: ") + name +
                       " must lie strictly between 0 and 1");
  }
}

// Equal mixture of the projectors onto the given vectors.
ComplexMatrix equal_mixture(std::span<const ComplexVector> vectors) {
  ComplexMatrix m = ComplexMatrix::Zero(vectors[0].size(), vectors[0].size());
  for (const auto& v : vectors) m += v * v.adjoint();
  return hermitize(m / static_cast<double>(vectors.size()));
}

}  // namespace

PureState::PureState(ComplexVector amp, int dimA, int dimB)
    : amp_(std::move(amp)), dimA_(dimA), dimB_(dimB) {
  if (dimA <= 0 || dimB <= 0) throw InvalidInput("subsystem dimensions must be positive");
  if (amp_.size() != dimA * dimB) throw InvalidInput("amplitude count does not match dimA*dimB");
  if (!amp_.allFinite()) throw InvalidInput("pure state has non-finite amplitudes");
  if (std::abs(amp_.norm() - 1.0) > 1e-12) throw InvalidInput("pure state is not normalized");
}

std::string_view to_string(SchmidtKind kind) {
  switch (kind) {
    case SchmidtKind::Psi1: return "psi1";
    case SchmidtKind::Psi2: return "psi2";
    case SchmidtKind::Psi3: return "psi3";
    case SchmidtKind::Phi: return "phi";
  }
  return "?";
}

PureState bell(int m, int n) {
  if ((m != 0 && m != 1) || (n != 0 && n != 1)) throw InvalidInput("bell: m and n must be bits");
  ComplexVector amp = ComplexVector::Zero(4);
  const double h = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < 2; ++j) {
    const double sign = (j * n) % 2 == 0 ? 1.0 : -1.0;
    amp[j * 2 + (j ^ m)] = sign * h;
  }
  return PureState(std::move(amp), 2, 2);
}

PureState schmidt_state(SchmidtKind kind, double a) {
  require_open_unit(a, "a");
  const double b = std::sqrt(1.0 - a * a);
  ComplexVector amp = ComplexVector::Zero(4);
  switch (kind) {
    case SchmidtKind::Psi1:
    case SchmidtKind::Phi:
      amp[0] = a;
      amp[3] = b;
      break;
    case SchmidtKind::Psi2:
      amp[0] = b;
      amp[3] = -a;
      break;
    case SchmidtKind::Psi3:
      amp[1] = a;
      amp[2] = b;
      break;
  }
  // b is computed from a, so renormalizing only removes rounding.
  amp.normalize();
  return PureState(std::move(amp), 2, 2);
}

BipartiteDensity density(const PureState& psi) {
  return BipartiteDensity(projector(psi.amp()), psi.dimA(), psi.dimB());
}

BipartiteDensity mix(std::span<const WeightedState> terms) {
  if (terms.empty()) throw InvalidInput("mix: no terms");
  const BipartiteDensity& first = terms.front().rho.get();
  double total = 0.0;
  ComplexMatrix acc = ComplexMatrix::Zero(first.dim(), first.dim());
  for (const auto& t : terms) {
    const BipartiteDensity& r = t.rho.get();
    if (!(t.weight > 0.0)) throw InvalidInput("mix: weights must be positive");
    if (r.dimA() != first.dimA() || r.dimB() != first.dimB()) {
      throw InvalidInput("mix: dimension mismatch");
    }
    total += t.weight;
    acc += t.weight * r.mat();
  }
  if (std::abs(total - 1.0) > 1e-12) throw InvalidInput("mix: weights do not sum to 1");
  return BipartiteDensity(hermitize(acc), first.dimA(), first.dimB());
}

BipartiteDensity permute_to_alice_bob(const ComplexMatrix& m, const QubitLayout& layout) {
  const auto n = static_cast<int>(layout.size());
  if (n == 0 || m.rows() != (1L << n) || m.cols() != m.rows()) {
    throw InvalidInput("permute_to_alice_bob: layout length does not match qubit count");
  }
  std::vector<int> order;
  order.reserve(layout.size());
  int count_a = 0;
  for (int k = 0; k < n; ++k) {
    if (layout[k] == Side::A) {
      order.push_back(k);
      ++count_a;
    }
  }
  for (int k = 0; k < n; ++k)
    if (layout[k] == Side::B) order.push_back(k);
  const std::vector<int> dims(layout.size(), 2);
  return BipartiteDensity(hermitize(permute_subsystems(m, dims, order)), 1 << count_a,
                          1 << (n - count_a));
}

CloningIO build_cloning_pair(CloningCase which, double a, double c) {
  require_open_unit(a, "a");
  require_open_unit(c, "c");
  const ComplexVector psi1 = schmidt_state(SchmidtKind::Psi1, a).amp();
  const ComplexVector partner =
      schmidt_state(which == CloningCase::I ? SchmidtKind::Psi2 : SchmidtKind::Psi3, a).amp();
  const ComplexVector phi = schmidt_state(SchmidtKind::Phi, c).amp();

  const ComplexVector originals[] = {psi1, partner};
  const ComplexVector copies[] = {kron(psi1, psi1), kron(partner, partner)};
  const ComplexMatrix in = tensor(equal_mixture(originals), projector(phi));
  const ComplexMatrix out = equal_mixture(copies);

  QubitLayout layout{Side::A, Side::B, Side::A, Side::B};
  return CloningIO{
      permute_to_alice_bob(in, layout),
      permute_to_alice_bob(out, layout),
      Scenario{which == CloningCase::I ? ScenarioKind::CaseI : ScenarioKind::CaseII, a, c},
      layout,
      layout,
  };
}

CloningIO build_three_bell_pair(const PureState& blank) {
  if (blank.dimA() != 2 || blank.dimB() != 2) {
    throw InvalidInput("build_three_bell_pair: blank must be a two-qubit state");
  }
  const ComplexVector b00 = bell(0, 0).amp();
  const ComplexVector b01 = bell(0, 1).amp();
  const ComplexVector b10 = bell(1, 0).amp();

  const ComplexVector two_copies[] = {kron(b00, b00), kron(b01, b01), kron(b10, b10)};
  const ComplexVector three_copies[] = {kron(two_copies[0], b00), kron(two_copies[1], b01),
                                        kron(two_copies[2], b10)};
  const ComplexMatrix in = tensor(equal_mixture(two_copies), projector(blank.amp()));
  const ComplexMatrix out = equal_mixture(three_copies);

  QubitLayout layout{Side::A, Side::B, Side::A, Side::B, Side::A, Side::B};
  return CloningIO{
      permute_to_alice_bob(in, layout),
      permute_to_alice_bob(out, layout),
      Scenario{ScenarioKind::ThreeBell},
      layout,
      layout,
  };
}

}  // namespace entclone
