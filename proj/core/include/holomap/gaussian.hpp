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


#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "holomap/lattice.hpp"

namespace holomap {

enum class ZeroModeKind { None, Deflated, Regularized };

// How the massless k = 0 mode enters K^{-1/2}. Deflated drops it (pseudo
// inverse); Regularized floors normal-mode frequencies at epsilon.
struct ZeroModePolicy {
  ZeroModeKind kind = ZeroModeKind::Deflated;
  double epsilon = 0.0;

  static ZeroModePolicy none() { return {ZeroModeKind::None, 0.0}; }
  static ZeroModePolicy deflated() { return {ZeroModeKind::Deflated, 0.0}; }
  static ZeroModePolicy regularized(double eps) { return {ZeroModeKind::Regularized, eps}; }
};

// Gaussian state with vanishing Phi-Pi cross blocks, stored as the two blocks.
struct CovarianceState {
  LatticeSpec spec;
  Basis basis = Basis::Boundary;
  Eigen::MatrixXd phi;
  Eigen::MatrixXd pi;
  ZeroModePolicy policy;
  std::optional<double> beta;

  int modes() const { return static_cast<int>(phi.rows()); }
  // Full 2V x 2V matrix in (Phi, Pi) ordering.
  Eigen::MatrixXd gamma() const;
};

CovarianceState ground_covariance(const CouplingMatrix &K, ZeroModePolicy policy);
CovarianceState thermal_covariance(const CouplingMatrix &K, double beta, ZeroModePolicy policy);

// 2|A| x 2|A| block, ordering (Phi_1..Phi_A, Pi_1..Pi_A).
Eigen::MatrixXd reduced_covariance(const CovarianceState &state, const std::vector<int> &modes);
Eigen::MatrixXd reduced_covariance(const CovarianceState &state,
                                   const std::vector<ModeIndex> &modes);

Eigen::MatrixXd symplectic_form(int modes);

// Positive symplectic eigenvalues, ascending.
std::vector<double> symplectic_spectrum(const Eigen::MatrixXd &gammaA);

double entropy_from_spectrum(const std::vector<double> &sigma);
double entropy_bits(const Eigen::MatrixXd &gammaA);

// Mutual information of two single modes whose joint covariance is block
// diagonal: self correlations (P1, Q1), (P2, Q2), cross correlations x (Phi)
// and y (Pi). Free of the cancellation in S(a) + S(b) - S(ab).
double two_mode_mutual_information(double P1, double Q1, double P2, double Q2, double x,
                                   double y);

double mutual_information(const CovarianceState &state, int a, int b);
double mutual_information(const CovarianceState &state, const ModeIndex &a, const ModeIndex &b);
// Generic S(a) + S(b) - S(ab) on a 4 x 4 covariance.
double mutual_information_generic(const Eigen::MatrixXd &gammaAB);

double purity(const Eigen::MatrixXd &gammaA);

// ln det of the reduced covariance of boundary sites 0..ell-1.
double interval_log_det(const CovarianceState &state, int ell);
double central_charge(const CovarianceState &state, int l1, int l2);

}  // namespace holomap
