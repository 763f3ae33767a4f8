// Copyright 2026 The holomap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "holomap/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "holomap/error.hpp"

namespace holomap {

namespace {

constexpr double kZeroEigen = 1e-9;

// h(sigma) in bits; the pure value sigma = 1/2 contributes 0.
double h_bits(double sigma) {
  double a = sigma + 0.5, b = sigma - 0.5;
  double out = a * std::log2(a);
  if (b > 0.0) out -= b * std::log2(b);
  return out;
}

// (u + d) ln(u + d) - u ln u, accurate for small d.
double shift_term(double u, double d) {
  if (u <= 0.0) return d > 0.0 ? d * std::log(d) : 0.0;
  return (u + d) * std::log1p(d / u) + d * std::log(u);
}

// h(sqrt(s + t)) - h(sqrt(s)) without forming either term.
double h_gain(double s, double t) {
  const double X = std::sqrt(s);
  const double dx = t / (std::sqrt(std::max(s + t, 0.0)) + X);
  return (shift_term(X + 0.5, dx) - shift_term(X - 0.5, dx)) / std::numbers::ln2;
}

CovarianceState from_couplings(const CouplingMatrix &K, ZeroModePolicy policy,
                               std::optional<double> beta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K.entries);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::ConvergenceFailure, "eigendecomposition of K failed");
  const Eigen::VectorXd &lam = es.eigenvalues();
  const Eigen::Index V = lam.size();
  const bool massless = K.spec.m0 == 0.0;
  Eigen::VectorXd fphi(V), fpi(V);
  for (Eigen::Index i = 0; i < V; ++i) {
    double l = lam(i);
    if (l < -kZeroEigen)
      throw Error(ErrorCode::NegativeEigenvalue, "coupling matrix is not positive semidefinite");
    double d = std::sqrt(std::max(l, 0.0));
    const bool zero = massless && l < kZeroEigen;
    if (zero) {
      if (policy.kind == ZeroModeKind::None)
        throw Error(ErrorCode::SingularNoPolicy, "massless zero mode needs a zero-mode policy");
      if (policy.kind == ZeroModeKind::Deflated) {
        fphi(i) = 0.0;
        fpi(i) = 0.0;
        continue;
      }
    }
    if (policy.kind == ZeroModeKind::Regularized) d = std::max(d, policy.epsilon);
    if (!(d > 0.0))
      throw Error(ErrorCode::SingularNoPolicy, "zero frequency with a vanishing regulator");
    double c = beta ? 1.0 / std::tanh(*beta * d) : 1.0;
    fphi(i) = 0.5 * c / d;
    fpi(i) = 0.5 * c * d;
  }
  const Eigen::MatrixXd &U = es.eigenvectors();
  CovarianceState st;
  st.spec = K.spec;
  st.basis = K.basis;
  st.policy = policy;
  st.beta = beta;
  st.phi = U * fphi.asDiagonal() * U.transpose();
  st.pi = U * fpi.asDiagonal() * U.transpose();
  return st;
}

double log_det_spd(const Eigen::MatrixXd &A) {
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::NonPhysical, "covariance block is not positive definite");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

bool is_block_diagonal(const Eigen::MatrixXd &g) {
  const Eigen::Index N = g.rows() / 2;
  return g.topRightCorner(N, N).isZero(0.0) && g.bottomLeftCorner(N, N).isZero(0.0);
}

}  // namespace

Eigen::MatrixXd CovarianceState::gamma() const {
  const Eigen::Index V = phi.rows();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * V, 2 * V);
  g.topLeftCorner(V, V) = phi;
  g.bottomRightCorner(V, V) = pi;
  return g;
}

CovarianceState ground_covariance(const CouplingMatrix &K, ZeroModePolicy policy) {
  return from_couplings(K, policy, std::nullopt);
}

CovarianceState thermal_covariance(const CouplingMatrix &K, double beta, ZeroModePolicy policy) {
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  return from_couplings(K, policy, beta);
}

Eigen::MatrixXd reduced_covariance(const CovarianceState &state, const std::vector<int> &modes) {
  if (modes.empty()) throw Error(ErrorCode::InvalidArgument, "empty mode set");
  const int A = static_cast<int>(modes.size());
  for (int m : modes)
    if (m < 0 || m >= state.modes())
      throw Error(ErrorCode::IndexOutOfRange, "mode " + std::to_string(m) + " out of range");
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * A, 2 * A);
  for (int i = 0; i < A; ++i)
    for (int j = 0; j < A; ++j) {
      g(i, j) = state.phi(modes[i], modes[j]);
      g(A + i, A + j) = state.pi(modes[i], modes[j]);
    }
  return g;
}

Eigen::MatrixXd reduced_covariance(const CovarianceState &state,
                                   const std::vector<ModeIndex> &modes) {
  std::vector<int> flat;
  flat.reserve(modes.size());
  for (const auto &m : modes) {
    if (m.basis != state.basis)
      throw Error(ErrorCode::InvalidArgument, "mode basis does not match the state");
    flat.push_back(flat_index(state.spec, m));
  }
  return reduced_covariance(state, flat);
}

Eigen::MatrixXd symplectic_form(int modes) {
  Eigen::MatrixXd O = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  O.topRightCorner(modes, modes).setIdentity();
  O.bottomLeftCorner(modes, modes) = -Eigen::MatrixXd::Identity(modes, modes);
  return O;
}

std::vector<double> symplectic_spectrum(const Eigen::MatrixXd &gammaA) {
  if (gammaA.rows() != gammaA.cols() || gammaA.rows() % 2 != 0)
    throw Error(ErrorCode::DimensionMismatch, "covariance must be square of even size");
  const Eigen::Index N = gammaA.rows() / 2;
  std::vector<double> sigma;
  sigma.reserve(N);
  if (is_block_diagonal(gammaA)) {
    // sigma^2 are the eigenvalues of P^{1/2} Q P^{1/2}.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ep(gammaA.topLeftCorner(N, N));
    Eigen::VectorXd sq = ep.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::MatrixXd R = ep.eigenvectors() * sq.asDiagonal() * ep.eigenvectors().transpose();
    Eigen::MatrixXd S = R * gammaA.bottomRightCorner(N, N) * R;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()),
                                                      Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < N; ++i) sigma.push_back(std::sqrt(std::max(es.eigenvalues()(i), 0.0)));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(gammaA * symplectic_form(static_cast<int>(N)), false);
    std::vector<double> im;
    for (Eigen::Index i = 0; i < 2 * N; ++i) im.push_back(es.eigenvalues()(i).imag());
    std::sort(im.begin(), im.end());
    for (Eigen::Index i = 0; i < N; ++i) {
      double neg = -im[i], pos = im[2 * N - 1 - i];
      if (std::abs(neg - pos) > 1e-9 * std::max(1.0, pos))
        throw Error(ErrorCode::NonPhysical, "symplectic eigenvalues are not paired");
      sigma.push_back(0.5 * (neg + pos));
    }
  }
  std::sort(sigma.begin(), sigma.end());
  for (double &s : sigma) {
    if (s < 0.5 - 1e-6)
      throw Error(ErrorCode::NonPhysical,
                  "symplectic eigenvalue " + std::to_string(s) + " below 1/2");
    if (s < 0.5) s = 0.5;
  }
  return sigma;
}

double entropy_from_spectrum(const std::vector<double> &sigma) {
  double S = 0.0;
  for (double s : sigma) S += h_bits(s);
  return S;
}

double entropy_bits(const Eigen::MatrixXd &gammaA) {
  return entropy_from_spectrum(symplectic_spectrum(gammaA));
}

double two_mode_mutual_information(double P1, double Q1, double P2, double Q2, double x,
                                   double y) {
  // P Q = [[P1 Q1 + x y, b], [c, P2 Q2 + x y]], b = P1 y + x Q2, c = x Q1 + P2 y.
  double b = P1 * y + x * Q2;
  double c = x * Q1 + P2 * y;
  double delta = 0.5 * (P1 * Q1 - P2 * Q2);
  if (delta < 0.0) {
    std::swap(P1, P2);
    std::swap(Q1, Q2);
    std::swap(b, c);
    delta = -delta;
  }
  const double q = b * c;
  const double root = std::sqrt(std::max(delta * delta + q, 0.0));
  const double e = (root + delta) > 0.0 ? q / (root + delta) : 0.0;
  const double cc = x * y;
  double I = -(h_gain(P1 * Q1, cc + e) + h_gain(P2 * Q2, cc - e));
  if (I < 0.0 && I > -1e-9) I = 0.0;
  return I;
}

double mutual_information_generic(const Eigen::MatrixXd &gammaAB) {
  if (gammaAB.rows() != 4 || gammaAB.cols() != 4)
    throw Error(ErrorCode::DimensionMismatch, "two-mode covariance must be 4 x 4");
  Eigen::MatrixXd a(2, 2), b(2, 2);
  a << gammaAB(0, 0), gammaAB(0, 2), gammaAB(2, 0), gammaAB(2, 2);
  b << gammaAB(1, 1), gammaAB(1, 3), gammaAB(3, 1), gammaAB(3, 3);
  double I = entropy_bits(a) + entropy_bits(b) - entropy_bits(gammaAB);
  if (I < 0.0 && I > -1e-9) I = 0.0;
  return I;
}

double mutual_information(const CovarianceState &state, int a, int b) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "mutual information needs two modes");
  Eigen::MatrixXd g = reduced_covariance(state, std::vector<int>{a, b});
  return two_mode_mutual_information(g(0, 0), g(2, 2), g(1, 1), g(3, 3), g(0, 1), g(2, 3));
}

double mutual_information(const CovarianceState &state, const ModeIndex &a,
                          const ModeIndex &b) {
  return mutual_information(state, flat_index(state.spec, a), flat_index(state.spec, b));
}

double purity(const Eigen::MatrixXd &gammaA) {
  const double N = static_cast<double>(gammaA.rows()) / 2.0;
  double ld = log_det_spd(gammaA);
  return std::exp(-N * std::numbers::ln2 - 0.5 * ld);
}

double interval_log_det(const CovarianceState &state, int ell) {
  if (state.basis != Basis::Boundary)
    throw Error(ErrorCode::InvalidArgument, "interval determinants need a boundary state");
  if (ell < 1 || ell > state.modes())
    throw Error(ErrorCode::IndexOutOfRange, "interval length out of range");
  return log_det_spd(state.phi.topLeftCorner(ell, ell)) +
         log_det_spd(state.pi.topLeftCorner(ell, ell));
}

double central_charge(const CovarianceState &state, int l1, int l2) {
  if (l1 < 1 || l2 <= l1)
    throw Error(ErrorCode::InvalidArgument, "central charge needs l2 > l1 >= 1");
  const double d = interval_log_det(state, l2) - interval_log_det(state, l1);
  return 2.0 / std::log(static_cast<double>(l2) / l1) * (d + 2.0 * (l2 - l1) * std::numbers::ln2);
}

}  // namespace holomap
