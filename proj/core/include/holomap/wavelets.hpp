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

namespace holomap {

// Daubechies-K filter pair. g is the quadrature mirror of h:
// g_n = (-1)^n h_{2K-1-n}.
struct WaveletFamily {
  int K = 0;
  std::vector<double> h;
  std::vector<double> g;

  int taps() const { return 2 * K; }
};

// Hardcoded for K in {3, 4, 5}.
WaveletFamily daubechies_filters(int K);

enum class WaveletKind { Scale, Wavelet };

// Samples of s(x) or w(x) at x = k 2^-J on the support [0, 2K-1].
struct DyadicFunction {
  WaveletKind kind = WaveletKind::Scale;
  int K = 0;
  int J = 0;
  std::vector<double> samples;

  double step() const;
  double support() const { return 2.0 * K - 1.0; }
  double x(std::size_t k) const { return static_cast<double>(k) * step(); }
  // Piecewise-linear interpolation, zero outside the support.
  double at(double x) const;
  // Riemann sum of samples times step.
  double integral() const;
};

DyadicFunction cascade_eval(const WaveletFamily &family, WaveletKind kind, int J);

// <x^b>_s from the closed recursion with <x^0>_s = 1.
double scale_moment(const WaveletFamily &family, int b);
// <x^a>_w from the filter sum over scale moments.
double wavelet_moment(const WaveletFamily &family, int a);
// D_K = <x^K>_w^2 * binomial(2K, K).
double d_constant(const WaveletFamily &family);

struct ExpAverage {
  double value = 0.0;
  // Set when the integrand varies faster than the grid (mtilde 2^-J > 0.1).
  bool resolution_warning = false;
};

// Integral of exp(sign * mtilde * x) w(x) dx by Riemann quadrature.
ExpAverage wavelet_exp_average(const WaveletFamily &family, double mtilde, int sign,
                               int J = 12);

// One periodic analysis stage on a ring of length ell: output m < ell/2 is
// sum_t h_t x[(2m+t) mod ell], output ell/2 + m uses g. Orthogonal.
Eigen::MatrixXd analysis_stage(const WaveletFamily &family, int ell);

// Fast versions of the same stage and its transpose.
void analyze_stage(const WaveletFamily &family, const double *in, int ell, double *coarse,
                   double *detail);
void synthesize_stage(const WaveletFamily &family, const double *coarse, const double *detail,
                      int ell, double *out);

}  // namespace holomap
