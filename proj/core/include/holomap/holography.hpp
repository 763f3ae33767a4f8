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
#include <utility>
#include <vector>

#include "holomap/gaussian.hpp"
#include "holomap/lattice.hpp"

namespace holomap {

enum class Field { Phi, Pi };
enum class CorrelatorMode { Exact, Sampled };
enum class TemporalMode { Exact, Asymptotic };

// Translation-invariant boundary two-point functions G(Delta), Delta = 0..V-1,
// evaluated from the closed-form spectrum by FFT. Usable far beyond the sizes
// where a dense covariance fits in memory.
struct BoundaryCorrelators {
  LatticeSpec spec;
  ZeroModePolicy policy;
  std::optional<double> beta;
  std::vector<double> phi;
  std::vector<double> pi;

  const std::vector<double> &of(Field f) const { return f == Field::Phi ? phi : pi; }
  // Dense boundary covariance built from the same data.
  CovarianceState to_state() const;
};

BoundaryCorrelators boundary_correlators(const LatticeSpec &spec, ZeroModePolicy policy,
                                         std::optional<double> beta = std::nullopt);

// Wavelet site (r, m), optionally at imaginary time tau. AdS3 coordinates are
// rho = L 2^r / 2pi, theta = 2 pi m / (L 2^r).
struct BulkPoint {
  int r = 0;
  int m = 0;
  double tau = 0.0;
};

double bulk_correlator(const BoundaryCorrelators &bc, Field field, const BulkPoint &p,
                       const BulkPoint &q, CorrelatorMode mode = CorrelatorMode::Exact,
                       int J = 12);

// C((r,0),(r,j)) for j = 0..jmax in O(V log V).
std::vector<double> same_scale_row(const BoundaryCorrelators &bc, Field field, int r, int jmax);

// Boundary correlator recovered from a dense bulk state through M_bk.
double boundary_corr_from_bulk(const CovarianceState &bulk, Field a, Field b, int m, int mp);

enum class AsymptoticKind { PhiPhi, PiPi, SelfPhi, SelfPi };

// Self-correlation exponents: C_PhiPhi(0) = 2^{n-r-a}, C_PiPi(0) = 2^{r-n+b}.
double self_exponent_a();
double self_exponent_b(int K);

double massless_asymptotics(const WaveletFamily &family, int n, int r, int j,
                            AsymptoticKind which);

struct MassiveAsymptotic {
  double value = 0.0;
  bool low_mass_warning = false;    // mtilde < 3
  bool resolution_warning = false;  // from the exp-average quadrature
};

MassiveAsymptotic massive_asymptotics(const WaveletFamily &family, int n, int r, int j,
                                      double m0, Field which, int J = 12);

// Massive boundary propagators on the infinite line, evaluated on a contour
// shifted by i kappa so exponentially small tails keep full relative accuracy.
class ContourPropagator {
 public:
  ContourPropagator(const LatticeSpec &spec, int N = 1 << 16);
  double operator()(Field field, long delta) const;
  long size() const { return static_cast<long>(phi_.size()); }

 private:
  double kappa_;
  std::vector<double> phi_, pi_;  // e^{kappa Delta} G(Delta)
};

// Exact massive same-scale correlator C((r,0),(r,j)) via ContourPropagator.
// The overlap sum cancels heavily, so results below about 1e-30 in magnitude
// are rounding noise.
double massive_bulk_correlator(const LatticeSpec &spec, const ContourPropagator &G, Field field,
                               int r, int j);

// G_tau(Delta) = (1/V) sum_k cos(k Delta) exp(-d_k tau).
std::vector<double> boundary_temporal_green(const LatticeSpec &spec, double tau);

// Imaginary-time correlator of wavelet site (r, j) with itself.
double temporal_correlator(const LatticeSpec &spec, int r, int j, double tau,
                           TemporalMode mode = TemporalMode::Exact);
constexpr double kTemporalPrefactor = 0.32;
// Mean of tau G_tau(0) over integer tau in [tau_lo, tau_hi].
double refit_temporal_prefactor(const LatticeSpec &spec, int tau_lo, int tau_hi);

double geodesic_distance(const LatticeSpec &spec, const BulkPoint &a, const BulkPoint &b,
                         double R);
double geodesic_same_scale_approx(int separation, double R);

struct CurvatureFit {
  double R = 0.0;
  double xiTheta = 0.0;
  double xiTau = 0.0;
  double S0 = 0.0;
  double slope = 0.0;     // free log-log slope, expected -4K
  double residual = 0.0;  // RMS of ln I about the fixed-slope line
};

CurvatureFit fit_curvature(const std::vector<std::pair<double, double>> &samples, double S0,
                           int K);

// xi_r from ln I((r,0),(r',0)) vs |r - r'|.
double fit_cross_scale_length(const std::vector<std::pair<double, double>> &samples, double R);

// Same-scale massless profile at scale r: self correlations, pair rows, MI.
struct SameScaleProfile {
  int r = 0;
  double P = 0.0, Q = 0.0;  // C_PhiPhi(0), C_PiPi(0)
  double S0 = 0.0;
  std::vector<int> j;
  std::vector<double> phi, pi, mi;
};

SameScaleProfile same_scale_profile(const BoundaryCorrelators &bc, int r, int jmax);
// Fit window j in (2K-1, min(40, L 2^r / 4)].
CurvatureFit curvature_from_profile(const SameScaleProfile &p, int K, int L);

}  // namespace holomap
