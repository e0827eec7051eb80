// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/random_states.hpp"

namespace entclone {

namespace {

ComplexMatrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) g(r, c) = {normal(rng), normal(rng)};
  return g;
}

}  // namespace

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim, dim, rng));
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

BipartiteDensity random_density(int dimA, int dimB, std::mt19937_64& rng, int rank) {
  const int d = dimA * dimB;
  const ComplexMatrix g = ginibre(d, rank > 0 ? rank : d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return BipartiteDensity(std::move(rho), dimA, dimB);
}

PureState random_pure_state(int dimA, int dimB, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(dimA * dimB, 1, rng);
  return PureState(g.col(0).normalized(), dimA, dimB);
}

}  // namespace entclone
