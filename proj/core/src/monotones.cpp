// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "entclone/state_io.hpp"

namespace entclone {

double negativity(const BipartiteDensity& rho) { return trace_norm(partial_transpose(rho)) - 1.0; }

double entanglement_entropy(const PureState& psi) {
  return vn_entropy(partial_trace(density(psi), Side::A));
}

double hashing_lower_bound(const BipartiteDensity& rho) {
  return vn_entropy(partial_trace(rho, Side::B)) - vn_entropy(rho.mat());
}

ComplexMatrix SeparableDecomposition::matrix() const {
  const int d = dimA * dimB;
  ComplexMatrix sigma = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const ComplexVector z = Eigen::kroneckerProduct(terms[k].alice, terms[k].bob).eval();
    sigma.noalias() += weights[k] * (z * z.adjoint());
  }
  return 0.5 * (sigma + sigma.adjoint());
}

BipartiteDensity SeparableDecomposition::density() const {
  return BipartiteDensity(matrix(), dimA, dimB);
}

SeparableDecomposition tensor_decompositions(const SeparableDecomposition& first,
                                             const SeparableDecomposition& second) {
  SeparableDecomposition out;
  out.dimA = first.dimA * second.dimA;
  out.dimB = first.dimB * second.dimB;
  for (std::size_t i = 0; i < first.terms.size(); ++i) {
    for (std::size_t j = 0; j < second.terms.size(); ++j) {
      out.weights.push_back(first.weights[i] * second.weights[j]);
      out.terms.push_back(
          {Eigen::kroneckerProduct(first.terms[i].alice, second.terms[j].alice).eval(),
           Eigen::kroneckerProduct(first.terms[i].bob, second.terms[j].bob).eval()});
    }
  }
  return out;
}

int default_ree_terms(int dimA, int dimB) {
  const int d = dimA * dimB;
  return std::min(d * d, ReeOptions::kMaxDefaultTerms);
}

namespace {

// Unconstrained parametrization of a K-term product ansatz. Per term the
// layout is [theta, Re u (dimA), Im u (dimA), Re v (dimB), Im v (dimB)];
// weights are softmax(theta), local vectors are u/|u| and v/|v|.
class ProductAnsatz {
 public:
  ProductAnsatz(int dimA, int dimB, int terms) : dimA_(dimA), dimB_(dimB), terms_(terms) {}

  int stride() const { return 1 + 2 * dimA_ + 2 * dimB_; }
  int size() const { return terms_ * stride(); }

  Eigen::VectorXd random_params(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    Eigen::VectorXd p(size());
    for (int k = 0; k < terms_; ++k) {
      p[k * stride()] = 0.0;
      for (int q = 1; q < stride(); ++q) p[k * stride() + q] = normal(rng);
    }
    return p;
  }

  Eigen::VectorXd encode(const SeparableDecomposition& dec) const {
    Eigen::VectorXd p(size());
    for (int k = 0; k < terms_; ++k) {
      const int base = k * stride();
      p[base] = std::log(std::max(dec.weights[k], 1e-300));
      for (int i = 0; i < dimA_; ++i) {
        p[base + 1 + i] = dec.terms[k].alice[i].real();
        p[base + 1 + dimA_ + i] = dec.terms[k].alice[i].imag();
      }
      for (int j = 0; j < dimB_; ++j) {
        p[base + 1 + 2 * dimA_ + j] = dec.terms[k].bob[j].real();
        p[base + 1 + 2 * dimA_ + dimB_ + j] = dec.terms[k].bob[j].imag();
      }
    }
    return p;
  }

  SeparableDecomposition decode(const Eigen::VectorXd& p) const {
    SeparableDecomposition dec;
    dec.dimA = dimA_;
    dec.dimB = dimB_;
    dec.weights.resize(terms_);
    dec.terms.resize(terms_);
    double max_theta = -kInfinity;
    for (int k = 0; k < terms_; ++k) max_theta = std::max(max_theta, p[k * stride()]);
    double total = 0.0;
    for (int k = 0; k < terms_; ++k) {
      dec.weights[k] = std::exp(p[k * stride()] - max_theta);
      total += dec.weights[k];
    }
    for (int k = 0; k < terms_; ++k) {
      dec.weights[k] /= total;
      const int base = k * stride();
      ComplexVector x(dimA_);
      for (int i = 0; i < dimA_; ++i) x[i] = {p[base + 1 + i], p[base + 1 + dimA_ + i]};
      ComplexVector y(dimB_);
      for (int j = 0; j < dimB_; ++j) {
        y[j] = {p[base + 1 + 2 * dimA_ + j], p[base + 1 + 2 * dimA_ + dimB_ + j]};
      }
      dec.terms[k] = {x.normalized(), y.normalized()};
    }
    return dec;
  }

  /// Chain rule from dS/dsigma (as the Hermitian matrix G with
  /// dS = Re tr(G dsigma)) to the raw parameters.
  Eigen::VectorXd pull_back(const Eigen::VectorXd& p, const SeparableDecomposition& dec,
                            const ComplexMatrix& g) const {
    Eigen::VectorXd grad(size());
    std::vector<double> gw(terms_);
    double mean = 0.0;
    for (int k = 0; k < terms_; ++k) {
      const ComplexVector& x = dec.terms[k].alice;
      const ComplexVector& y = dec.terms[k].bob;
      const ComplexVector z = Eigen::kroneckerProduct(x, y).eval();
      const ComplexVector gz = g * z;
      gw[k] = z.dot(gz).real();
      mean += dec.weights[k] * gw[k];

      ComplexVector mx = ComplexVector::Zero(dimA_);
      ComplexVector my = ComplexVector::Zero(dimB_);
      for (int i = 0; i < dimA_; ++i) {
        for (int j = 0; j < dimB_; ++j) {
          mx[i] += std::conj(y[j]) * gz[i * dimB_ + j];
          my[j] += std::conj(x[i]) * gz[i * dimB_ + j];
        }
      }
      const int base = k * stride();
      write_vector_grad(grad, base + 1, dimA_, x, 2.0 * dec.weights[k] * mx,
                        norm_of(p, base + 1, dimA_));
      write_vector_grad(grad, base + 1 + 2 * dimA_, dimB_, y, 2.0 * dec.weights[k] * my,
                        norm_of(p, base + 1 + 2 * dimA_, dimB_));
    }
    for (int k = 0; k < terms_; ++k) grad[k * stride()] = dec.weights[k] * (gw[k] - mean);
    return grad;
  }

 private:
  static double norm_of(const Eigen::VectorXd& p, int offset, int dim) {
    return p.segment(offset, 2 * dim).norm();
  }

  // d/du of a function of x = u/|u| given its gradient v with respect to x.
  static void write_vector_grad(Eigen::VectorXd& grad, int offset, int dim, const ComplexVector& x,
                                const ComplexVector& v, double norm_u) {
    const double radial = x.dot(v).real();
    for (int i = 0; i < dim; ++i) {
      const Complex gi = (v[i] - x[i] * radial) / norm_u;
      grad[offset + i] = gi.real();
      grad[offset + dim + i] = gi.imag();
    }
  }

  int dimA_;
  int dimB_;
  int terms_;
};

class ReeObjective {
 public:
  ReeObjective(const BipartiteDensity& rho, const ProductAnsatz& ansatz)
      : rho_(rho.mat()), rho_eigs_(hermitian_eigs(rho.mat())), ansatz_(ansatz) {}

  double value(const Eigen::VectorXd& p) const {
    return relative_entropy(rho_eigs_, ansatz_.decode(p).matrix());
  }

  Eigen::VectorXd analytic_gradient(const Eigen::VectorXd& p) const {
    const SeparableDecomposition dec = ansatz_.decode(p);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(dec.matrix());
    const ComplexMatrix& w = solver.eigenvectors();
    const RealVector mu = solver.eigenvalues().cwiseMax(1e-300);
    const ComplexMatrix rho_t = w.adjoint() * rho_ * w;
    // Divided differences of log give the Frechet derivative of log sigma.
    ComplexMatrix inner(mu.size(), mu.size());
    for (Eigen::Index i = 0; i < mu.size(); ++i) {
      for (Eigen::Index j = 0; j < mu.size(); ++j) {
        const double diff = mu[i] - mu[j];
        const double dd = std::abs(diff) <= 1e-12 * std::max(mu[i], mu[j])
                              ? 2.0 / (mu[i] + mu[j])
                              : (std::log(mu[i]) - std::log(mu[j])) / diff;
        inner(i, j) = rho_t(i, j) * dd;
      }
    }
    const ComplexMatrix g = -(w * inner * w.adjoint()) / std::numbers::ln2;
    return ansatz_.pull_back(p, dec, 0.5 * (g + g.adjoint()));
  }

  Eigen::VectorXd numeric_gradient(const Eigen::VectorXd& p, double h) const {
    Eigen::VectorXd grad(p.size());
    Eigen::VectorXd probe = p;
    for (Eigen::Index q = 0; q < p.size(); ++q) {
      probe[q] = p[q] + h;
      const double up = value(probe);
      probe[q] = p[q] - h;
      const double down = value(probe);
      probe[q] = p[q];
      grad[q] = (up - down) / (2.0 * h);
    }
    return grad;
  }

 private:
  ComplexMatrix rho_;
  EigenDecomposition rho_eigs_;
  const ProductAnsatz& ansatz_;
};

struct DescentOutcome {
  Eigen::VectorXd params;
  double value;
  int iterations;
  bool converged;
};

DescentOutcome descend(const ReeObjective& objective, Eigen::VectorXd p, const ReeOptions& opt) {
  double f = objective.value(p);
  double step = 0.1;
  std::deque<double> history{f};
  int it = 0;
  bool converged = false;
  for (; it < opt.iters; ++it) {
    if (!std::isfinite(f)) break;
    const Eigen::VectorXd grad = opt.gradient == GradientMode::Analytic
                                     ? objective.analytic_gradient(p)
                                     : objective.numeric_gradient(p, opt.fd_step);
    if (!grad.allFinite() || grad.norm() == 0.0) {
      converged = grad.allFinite();
      break;
    }
    bool accepted = false;
    while (step > 1e-14) {
      Eigen::VectorXd trial = p - step * grad;
      const double ft = objective.value(trial);
      if (ft < f) {
        p = std::move(trial);
        f = ft;
        step *= 1.5;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No descent direction at working precision: stationary.
      converged = true;
      ++it;
      break;
    }
    history.push_back(f);
    if (static_cast<int>(history.size()) > opt.patience) {
      if (history.front() - f < opt.stall_tolerance) {
        converged = true;
        ++it;
        break;
      }
      history.pop_front();
    }
  }
  return {std::move(p), f, it, converged};
}

}  // namespace

ReeResult ree_upper_bound(const BipartiteDensity& rho, const ReeOptions& options) {
  int terms = options.terms > 0 ? options.terms : default_ree_terms(rho.dimA(), rho.dimB());
  if (options.warm_start) {
    const auto& ws = *options.warm_start;
    if (ws.dimA != rho.dimA() || ws.dimB != rho.dimB() || ws.terms.empty() ||
        ws.terms.size() != ws.weights.size()) {
      throw InvalidInput("ree_upper_bound: warm start does not match the state");
    }
    terms = static_cast<int>(ws.terms.size());
  }
  if (options.restarts < 1 || options.iters < 0) {
    throw InvalidInput("ree_upper_bound: restarts must be >= 1 and iters >= 0");
  }

  const ProductAnsatz ansatz(rho.dimA(), rho.dimB(), terms);
  const ReeObjective objective(rho, ansatz);

  ReeResult best;
  for (int r = 0; r < options.restarts; ++r) {
    std::mt19937_64 rng(options.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r));
    Eigen::VectorXd start = (r == 0 && options.warm_start) ? ansatz.encode(*options.warm_start)
                                                           : ansatz.random_params(rng);
    DescentOutcome outcome = descend(objective, std::move(start), options);
    if (outcome.value < best.upper_bound) {
      best.sigma = ansatz.decode(outcome.params);
      best.upper_bound = outcome.value;
      best.iterations = outcome.iterations;
      best.converged = outcome.converged;
    }
  }
  if (best.sigma.terms.empty()) {
    // Every restart stayed at +infinity.
    std::mt19937_64 rng(options.seed);
    best.sigma = ansatz.decode(ansatz.random_params(rng));
    return best;
  }
  best.upper_bound = relative_entropy(rho, best.sigma.density());
  return best;
}

void write_ree_report(std::ostream& os, const ReeResult& result) {
  os << "ree_upper_bound " << fmt::format("{:.9g}", result.upper_bound) << '\n';
  os << "terms " << result.sigma.terms.size() << '\n';
  os << "iterations " << result.iterations << '\n';
  os << "converged " << (result.converged ? "true" : "false") << '\n';
  for (std::size_t k = 0; k < result.sigma.terms.size(); ++k) {
    const auto& t = result.sigma.terms[k];
    os << "TERM " << k << ' ' << fmt::format("{:.17g}", result.sigma.weights[k]) << '\n';
    write_pvec(os, Eigen::kroneckerProduct(t.alice, t.bob).eval(), result.sigma.dimA,
               result.sigma.dimB);
  }
}

}  // namespace entclone
