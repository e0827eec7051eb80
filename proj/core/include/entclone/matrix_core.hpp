// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entclone {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when an argument violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation cannot produce a trustworthy number.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
/// Eigenvalues at or below this are treated as exact zeros in entropies.
inline constexpr double kZeroEigenvalue = 1e-12;
}  // namespace tolerance

enum class Side { A, B };

/// A density matrix with an Alice/Bob split; the constructor enforces
/// Hermiticity, unit trace and positive semidefiniteness.
class BipartiteDensity {
 public:
  BipartiteDensity(ComplexMatrix mat, int dimA, int dimB);

  const ComplexMatrix& mat() const noexcept { return mat_; }
  int dimA() const noexcept { return dimA_; }
  int dimB() const noexcept { return dimB_; }
  int dim() const noexcept { return dimA_ * dimB_; }

 private:
  ComplexMatrix mat_;
  int dimA_;
  int dimB_;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns are eigenvectors
};

/// Largest entry of |M - M^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product; block (i,j) of the result is A(i,j) * B.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// <i,j|rho^{T_B}|k,l> = <i,l|rho|k,j>.
ComplexMatrix partial_transpose(const BipartiteDensity& rho);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dimA, int dimB);

/// Reduced state on the kept side.
ComplexMatrix partial_trace(const BipartiteDensity& rho, Side keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, int dimA, int dimB, Side keep);

/// Reorders tensor factors. `dims` lists the local dimension of each factor
/// in the current order; factor `order[k]` of the input becomes factor k of
/// the output.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> dims,
                                 std::span<const int> order);

/// Throws InvalidInput("not Hermitian") if the input deviates by more than
/// 1e-12 from its adjoint.
EigenDecomposition hermitian_eigs(const ComplexMatrix& h);

/// Sum of absolute eigenvalues. Only the Hermitian path is supported.
double trace_norm(const ComplexMatrix& m);

/// Von Neumann entropy in bits.
double vn_entropy(const ComplexMatrix& rho);

/// Binary entropy H(p) in bits.
double binary_entropy(double p);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// S(rho||sigma) in bits. Returns kInfinity when the support of rho is not
/// contained in the support of sigma.
double relative_entropy(const BipartiteDensity& rho, const BipartiteDensity& sigma);

/// Same as relative_entropy with rho's eigensystem precomputed.
double relative_entropy(const EigenDecomposition& rho_eigs, const ComplexMatrix& sigma);

/// rho (A1|B1) and sigma (A2|B2) combined as (A1 A2 | B1 B2).
BipartiteDensity tensor_grouped(const BipartiteDensity& rho, const BipartiteDensity& sigma);

}  // namespace entclone
