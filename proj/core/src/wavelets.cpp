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


#include "holomap/wavelets.hpp"

#include <cmath>

#include "holomap/error.hpp"

namespace holomap {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<double> scale_moments_upto(const WaveletFamily &f, int b_max) {
  std::vector<double> mom(b_max + 1, 0.0);
  mom[0] = 1.0;
  for (int b = 1; b <= b_max; ++b) {
    double acc = 0.0;
    for (int c = 0; c < b; ++c) {
      double filt = 0.0;
      for (int k = 1; k < f.taps(); ++k) filt += f.h[k] * std::pow(k, b - c);
      acc += binomial(b, c) * filt * mom[c];
    }
    mom[b] = acc / ((std::ldexp(1.0, b) - 1.0) * std::sqrt(2.0));
  }
  return mom;
}

}  // namespace

WaveletFamily daubechies_filters(int K) {
  WaveletFamily f;
  f.K = K;
  switch (K) {
    case 3: {
      const double s10 = std::sqrt(10.0);
      const double q = std::sqrt(5.0 + 2.0 * s10);
      const double d = 16.0 * std::sqrt(2.0);
      f.h = {(1 + s10 + q) / d,          (5 + s10 + 3 * q) / d, (10 - 2 * s10 + 2 * q) / d,
             (10 - 2 * s10 - 2 * q) / d, (5 + s10 - 3 * q) / d, (1 + s10 - q) / d};
      break;
    }
    case 4:
      f.h = {0.230377813308897,  0.714846570552916, 0.630880767929859, -0.027983769416860,
             -0.187034811719093, 0.030841381835561, 0.032883011666885, -0.010597401785069};
      break;
    case 5:
      f.h = {0.160102397974193,  0.603829269797190,  0.724308528437773,  0.138428145901321,
             -0.242294887066382, -0.032244869584638, 0.077571493840046,  -0.006241490212798,
             -0.012580751999082, 0.003335725285474};
      break;
    default:
      throw Error(ErrorCode::UnsupportedFamily,
                  "Daubechies filters are tabulated for K = 3, 4, 5 only; got K = " +
                      std::to_string(K));
  }
  const int N = f.taps();
  f.g.resize(N);
  for (int n = 0; n < N; ++n) f.g[n] = (n % 2 == 0 ? 1.0 : -1.0) * f.h[N - 1 - n];
  return f;
}

double DyadicFunction::step() const { return std::ldexp(1.0, -J); }

double DyadicFunction::at(double xv) const {
  if (xv <= 0.0 || xv >= support()) return 0.0;
  double u = xv / step();
  auto k = static_cast<std::size_t>(u);
  if (k + 1 >= samples.size()) return samples.back();
  double t = u - static_cast<double>(k);
  return (1.0 - t) * samples[k] + t * samples[k + 1];
}

double DyadicFunction::integral() const {
  double acc = 0.0;
  for (double v : samples) acc += v;
  return acc * step();
}

DyadicFunction cascade_eval(const WaveletFamily &family, WaveletKind kind, int J) {
  if (J < 1) throw Error(ErrorCode::InvalidArgument, "cascade resolution J must be >= 1");
  const int N = family.taps();
  const double r2 = std::sqrt(2.0);

  // s(k) = sqrt2 sum_t h_t s(2k - t) on the integers 0..2K-1.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (int k = 0; k < N; ++k)
    for (int t = 0; t < N; ++t)
      if (2 * k - t >= 0 && 2 * k - t < N) A(k, 2 * k - t) += r2 * family.h[t];
  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  int best = -1;
  double best_gap = 1e300;
  for (int i = 0; i < N; ++i) {
    double gap = std::abs(es.eigenvalues()[i] - std::complex<double>(1.0, 0.0));
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best_gap > 1e-8)
    throw Error(ErrorCode::ConvergenceFailure, "no eigenvalue 1 in the integer-grid system");
  std::vector<double> vals(N);
  double sum = 0.0;
  for (int k = 0; k < N; ++k) {
    vals[k] = es.eigenvectors()(k, best).real();
    sum += vals[k];
  }
  for (double &v : vals) v /= sum;

  for (int lev = 1; lev <= J; ++lev) {
    const std::size_t M = static_cast<std::size_t>(N - 1) * (std::size_t{1} << lev) + 1;
    const long half = 1L << (lev - 1);
    std::vector<double> next(M, 0.0);
    for (std::size_t p = 0; p < M; ++p) {
      if (p % 2 == 0) {
        next[p] = vals[p / 2];
        continue;
      }
      double acc = 0.0;
      for (int t = 0; t < N; ++t) {
        long q = static_cast<long>(p) - t * half;
        if (q >= 0 && q < static_cast<long>(vals.size())) acc += family.h[t] * vals[q];
      }
      next[p] = r2 * acc;
    }
    vals.swap(next);
  }

  DyadicFunction out;
  out.kind = kind;
  out.K = family.K;
  out.J = J;
  if (kind == WaveletKind::Scale) {
    out.samples = std::move(vals);
    return out;
  }
  // w(p 2^-J) = sqrt2 sum_t g_t s((2p - t 2^J) 2^-J).
  const long full = 1L << J;
  out.samples.assign(vals.size(), 0.0);
  for (std::size_t p = 0; p < vals.size(); ++p) {
    double acc = 0.0;
    for (int t = 0; t < N; ++t) {
      long q = 2 * static_cast<long>(p) - t * full;
      if (q >= 0 && q < static_cast<long>(vals.size())) acc += family.g[t] * vals[q];
    }
    out.samples[p] = r2 * acc;
  }
  return out;
}

double scale_moment(const WaveletFamily &family, int b) {
  if (b < 0) throw Error(ErrorCode::InvalidArgument, "moment order must be >= 0");
  return scale_moments_upto(family, b)[b];
}

double wavelet_moment(const WaveletFamily &family, int a) {
  if (a < 0) throw Error(ErrorCode::InvalidArgument, "moment order must be >= 0");
  auto mom = scale_moments_upto(family, a);
  double acc = 0.0;
  for (int j = 0; j < family.taps(); ++j) {
    double inner = 0.0;
    for (int b = 0; b <= a; ++b) inner += binomial(a, b) * std::pow(j, a - b) * mom[b];
    acc += family.g[j] * inner;
  }
  return acc / (std::sqrt(2.0) * std::ldexp(1.0, a));
}

double d_constant(const WaveletFamily &family) {
  double m = wavelet_moment(family, family.K);
  return m * m * binomial(2 * family.K, family.K);
}

ExpAverage wavelet_exp_average(const WaveletFamily &family, double mtilde, int sign, int J) {
  if (!(mtilde > 0.0)) throw Error(ErrorCode::InvalidArgument, "mtilde must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  DyadicFunction w = cascade_eval(family, WaveletKind::Wavelet, J);
  ExpAverage out;
  out.resolution_warning = mtilde * w.step() > 0.1;
  double acc = 0.0;
  for (std::size_t k = 0; k < w.samples.size(); ++k)
    acc += std::exp(sign * mtilde * w.x(k)) * w.samples[k];
  out.value = acc * w.step();
  return out;
}

Eigen::MatrixXd analysis_stage(const WaveletFamily &family, int ell) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ell, ell);
  const int half = ell / 2;
  for (int m = 0; m < half; ++m)
    for (int t = 0; t < family.taps(); ++t) {
      int c = (2 * m + t) % ell;
      A(m, c) += family.h[t];
      A(half + m, c) += family.g[t];
    }
  return A;
}

void analyze_stage(const WaveletFamily &family, const double *in, int ell, double *coarse,
                   double *detail) {
  const int half = ell / 2;
  for (int m = 0; m < half; ++m) {
    double c = 0.0, d = 0.0;
    for (int t = 0; t < family.taps(); ++t) {
      double v = in[(2 * m + t) % ell];
      c += family.h[t] * v;
      d += family.g[t] * v;
    }
    coarse[m] = c;
    if (detail != nullptr) detail[m] = d;
  }
}

void synthesize_stage(const WaveletFamily &family, const double *coarse, const double *detail,
                      int ell, double *out) {
  const int half = ell / 2;
  for (int i = 0; i < ell; ++i) out[i] = 0.0;
  for (int m = 0; m < half; ++m) {
    double c = coarse != nullptr ? coarse[m] : 0.0;
    double d = detail != nullptr ? detail[m] : 0.0;
    if (c == 0.0 && d == 0.0) continue;
    for (int t = 0; t < family.taps(); ++t) out[(2 * m + t) % ell] += family.h[t] * c + family.g[t] * d;
  }
}

}  // namespace holomap
