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

#include <vector>

#include <Eigen/Dense>

#include "holomap/overlaps.hpp"
#include "holomap/wavelets.hpp"

namespace holomap {

struct LatticeSpec {
  WaveletFamily family;
  int L = 0;
  int n = 0;
  double m0 = 0.0;

  int K() const { return family.K; }
  int V() const { return L << n; }
  // Throws SizeTooSmall / InvalidArgument on violated constraints.
  void validate() const;

  static LatticeSpec make(int K, int L, int n, double m0 = 0.0);
};

enum class Basis { Boundary, Bulk };

// A mode of the boundary lattice or of the bulk. Bulk scale modes use r = 0.
struct ModeIndex {
  Basis basis = Basis::Boundary;
  WaveletKind kind = WaveletKind::Scale;
  int r = 0;
  int m = 0;

  static ModeIndex boundary(int m) { return {Basis::Boundary, WaveletKind::Scale, 0, m}; }
  static ModeIndex scale(int m) { return {Basis::Bulk, WaveletKind::Scale, 0, m}; }
  static ModeIndex wavelet(int r, int m) { return {Basis::Bulk, WaveletKind::Wavelet, r, m}; }
};

// Bulk ordering: scale block (L), then wavelet blocks r = 0..n-1 (L 2^r each).
int flat_index(const LatticeSpec &spec, const ModeIndex &mode);
ModeIndex mode_at(const LatticeSpec &spec, Basis basis, int flat);

struct CouplingMatrix {
  LatticeSpec spec;
  Basis basis = Basis::Boundary;
  Eigen::MatrixXd entries;
};

// Squared dispersion d_j^2 at momentum index j (k_j = 2 pi j / V).
double dispersion_squared(const LatticeSpec &spec, const std::vector<double> &dss, double k);

CouplingMatrix boundary_coupling(const LatticeSpec &spec);
CouplingMatrix boundary_coupling(const LatticeSpec &spec, const std::vector<double> &dss);

// d_j, j = 0..V-1, from the closed form.
std::vector<double> boundary_spectrum(const LatticeSpec &spec);
std::vector<double> boundary_spectrum(const LatticeSpec &spec, const std::vector<double> &dss);

// Rows: constant, cos(k_j m) for j = 1..V/2-1, alternating, sin(k_j m).
Eigen::MatrixXd boundary_fourier_matrix(int V);
// Momentum label of row i of the Fourier matrix.
int fourier_row_momentum(int V, int row);

// n-stage periodic analysis filter bank, O(V) per application.
class WaveletTransform {
 public:
  explicit WaveletTransform(const LatticeSpec &spec);

  // Boundary vector -> bulk coefficients (M_bk x).
  std::vector<double> forward(const std::vector<double> &x) const;
  // Bulk coefficients -> boundary vector (M_bk^T y).
  std::vector<double> inverse(const std::vector<double> &y) const;
  Eigen::MatrixXd matrix() const;

 private:
  LatticeSpec spec_;
};

Eigen::MatrixXd wavelet_transform_matrix(const LatticeSpec &spec);

CouplingMatrix bulk_coupling(const LatticeSpec &spec, const OverlapTables &tables);

// Boundary coefficients of a bulk basis function: c_{n,j,m} for scale modes,
// f_{n,r,j,m} (equivalently d_{n,r,j,m}) for wavelet modes. Exact: a row of M_bk.
std::vector<double> bulk_basis_row(const LatticeSpec &spec, const ModeIndex &mode);

// Sampled approximation f ~ 2^{(r-n)/2} w(2^{r-n}(m + mu) - j), mu = <x>_s.
std::vector<double> sampled_wavelet_row(const LatticeSpec &spec, int r, int j,
                                        const DyadicFunction &w);

}  // namespace holomap
