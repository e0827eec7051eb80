// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <random>

#include "entclone/matrix_core.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {

// Seeded generators for property checks. All draws come from complex
// Gaussian (Ginibre) matrices.

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng);

ComplexMatrix random_unitary(int dim, std::mt19937_64& rng);

/// G G^dagger / tr, with G of size d x rank. rank = 0 means full rank.
BipartiteDensity random_density(int dimA, int dimB, std::mt19937_64& rng, int rank = 0);

PureState random_pure_state(int dimA, int dimB, std::mt19937_64& rng);

}  // namespace entclone
