// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

namespace entclone {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvalidInput(std::string(what) + ": matrix is not square");
  }
}

double entropy_of_spectrum(const RealVector& values) {
  double s = 0.0;
  for (double v : values) {
    if (v > tolerance::kZeroEigenvalue) s -= v * std::log2(v);
  }
  return s;
}

}  // namespace

BipartiteDensity::BipartiteDensity(ComplexMatrix mat, int dimA, int dimB)
    : mat_(std::move(mat)), dimA_(dimA), dimB_(dimB) {
  if (dimA <= 0 || dimB <= 0) throw InvalidInput("subsystem dimensions must be positive");
  if (mat_.rows() != dimA * dimB || mat_.cols() != dimA * dimB) {
    throw InvalidInput("density matrix size does not match dimA*dimB");
  }
  if (!mat_.allFinite()) throw InvalidInput("density matrix has non-finite entries");
  if (hermiticity_defect(mat_) > tolerance::kHermitian) {
    throw InvalidInput("density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > tolerance::kTrace) {
    throw InvalidInput("density matrix does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tolerance::kPsd) {
    throw InvalidInput("density matrix is not positive semidefinite");
  }
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return kInfinity;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dimA, int dimB) {
  require_square(m, "partial_transpose");
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < dimA; ++i) {
    for (int j = 0; j < dimB; ++j) {
      for (int k = 0; k < dimA; ++k) {
        for (int l = 0; l < dimB; ++l) {
          out(i * dimB + j, k * dimB + l) = m(i * dimB + l, k * dimB + j);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const BipartiteDensity& rho) {
  return partial_transpose(rho.mat(), rho.dimA(), rho.dimB());
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dimA, int dimB, Side keep) {
  require_square(m, "partial_trace");
  if (keep == Side::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dimA, dimA);
    for (int i = 0; i < dimA; ++i)
      for (int k = 0; k < dimA; ++k)
        for (int j = 0; j < dimB; ++j) out(i, k) += m(i * dimB + j, k * dimB + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dimB, dimB);
  for (int j = 0; j < dimB; ++j)
    for (int l = 0; l < dimB; ++l)
      for (int i = 0; i < dimA; ++i) out(j, l) += m(i * dimB + j, i * dimB + l);
  return out;
}

ComplexMatrix partial_trace(const BipartiteDensity& rho, Side keep) {
  return partial_trace(rho.mat(), rho.dimA(), rho.dimB(), keep);
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> dims,
                                 std::span<const int> order) {
  require_square(m, "permute_subsystems");
  const std::size_t n = dims.size();
  if (order.size() != n) throw InvalidInput("permutation length does not match factor count");
  std::vector<int> seen(n, 0);
  for (int o : order) {
    if (o < 0 || static_cast<std::size_t>(o) >= n || seen[o]++) {
      throw InvalidInput("order is not a permutation");
    }
  }
  const long total = std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<>());
  if (total != m.rows()) throw InvalidInput("factor dimensions do not match matrix size");

  // Strides of the input factors (row-major, first factor most significant).
  std::vector<long> in_stride(n);
  long s = 1;
  for (std::size_t f = n; f-- > 0;) {
    in_stride[f] = s;
    s *= dims[f];
  }
  // Map each output basis index to its input basis index.
  std::vector<long> map(static_cast<std::size_t>(total));
  std::vector<int> digit(n, 0);
  for (long out_idx = 0; out_idx < total; ++out_idx) {
    long in_idx = 0;
    for (std::size_t k = 0; k < n; ++k) in_idx += digit[k] * in_stride[order[k]];
    map[static_cast<std::size_t>(out_idx)] = in_idx;
    for (std::size_t k = n; k-- > 0;) {
      if (++digit[k] < dims[order[k]]) break;
      digit[k] = 0;
    }
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c) out(r, c) = m(map[r], map[c]);
  return out;
}

EigenDecomposition hermitian_eigs(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigs");
  if (hermiticity_defect(h) > tolerance::kHermitian) throw InvalidInput("not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericError("eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (hermiticity_defect(m) > tolerance::kHermitian) throw InvalidInput("not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double vn_entropy(const ComplexMatrix& rho) {
  const EigenDecomposition eig = hermitian_eigs(rho);
  if (std::abs(eig.values.sum() - 1.0) > 1e-9) throw InvalidInput("vn_entropy: trace is not 1");
  if (eig.values.minCoeff() < -tolerance::kPsd) {
    throw InvalidInput("vn_entropy: matrix is not positive semidefinite");
  }
  return entropy_of_spectrum(eig.values);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double relative_entropy(const EigenDecomposition& rho_eigs, const ComplexMatrix& sigma) {
  if (sigma.rows() != rho_eigs.vectors.rows()) {
    throw InvalidInput("relative_entropy: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sigma);
  const RealVector& mu = solver.eigenvalues();
  // overlap(i, j) = |<v_i|w_j>|^2
  const Eigen::MatrixXd overlap =
      (rho_eigs.vectors.adjoint() * solver.eigenvectors()).cwiseAbs2();

  double cross = 0.0;
  for (Eigen::Index i = 0; i < rho_eigs.values.size(); ++i) {
    const double lambda = rho_eigs.values[i];
    if (lambda <= tolerance::kZeroEigenvalue) continue;
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
      if (mu[j] <= tolerance::kZeroEigenvalue) {
        if (lambda > tolerance::kPsd && overlap(i, j) > 1e-10) return kInfinity;
        continue;
      }
      cross += lambda * overlap(i, j) * std::log2(mu[j]);
    }
  }
  return -entropy_of_spectrum(rho_eigs.values) - cross;
}

double relative_entropy(const BipartiteDensity& rho, const BipartiteDensity& sigma) {
  if (rho.dimA() != sigma.dimA() || rho.dimB() != sigma.dimB()) {
    throw InvalidInput("relative_entropy: dimension mismatch");
  }
  return relative_entropy(hermitian_eigs(rho.mat()), sigma.mat());
}

BipartiteDensity tensor_grouped(const BipartiteDensity& rho, const BipartiteDensity& sigma) {
  const ComplexMatrix joint = tensor(rho.mat(), sigma.mat());
  const int dims[] = {rho.dimA(), rho.dimB(), sigma.dimA(), sigma.dimB()};
  const int order[] = {0, 2, 1, 3};
  ComplexMatrix grouped = permute_subsystems(joint, dims, order);
  // Kronecker roundoff can leave ~1e-17 anti-Hermitian residue.
  grouped = (0.5 * (grouped + grouped.adjoint())).eval();
  return BipartiteDensity(std::move(grouped), rho.dimA() * sigma.dimA(),
                          rho.dimB() * sigma.dimB());
}

}  // namespace entclone
