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


#include "holomap/holography.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "holomap/error.hpp"
#include "holomap/parallel.hpp"

namespace holomap {

namespace {

using cvec = std::vector<std::complex<double>>;

cvec fft_fwd(const std::vector<double> &x) {
  Eigen::FFT<double> fft;
  cvec out;
  fft.fwd(out, x);
  return out;
}

std::vector<double> fft_inv_real(const cvec &X) {
  Eigen::FFT<double> fft;
  cvec out;
  fft.inv(out, X);
  std::vector<double> re(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) re[i] = out[i].real();
  return re;
}

// (1/V) sum_j spectrum_j cos(2 pi j Delta / V) for a spectrum even in j.
std::vector<double> cosine_sum(const std::vector<double> &spectrum) {
  cvec X(spectrum.begin(), spectrum.end());
  return fft_inv_real(X);
}

// u(m) = sum_m' G(m - m') f(m') on the ring, G even.
std::vector<double> ring_convolve(const std::vector<double> &G, const std::vector<double> &f) {
  cvec A = fft_fwd(G), B = fft_fwd(f);
  for (std::size_t i = 0; i < A.size(); ++i) A[i] *= B[i];
  return fft_inv_real(A);
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void check_scale(const LatticeSpec &spec, int r) {
  if (r < 0 || r >= spec.n) throw Error(ErrorCode::ScaleOutOfRange, "r must lie in [0, n)");
}

std::vector<double> wavelet_row(const LatticeSpec &spec, const BulkPoint &p, CorrelatorMode mode,
                                const DyadicFunction *w) {
  check_scale(spec, p.r);
  const int ring = spec.L << p.r;
  const int m = ((p.m % ring) + ring) % ring;
  if (mode == CorrelatorMode::Exact) return bulk_basis_row(spec, ModeIndex::wavelet(p.r, m));
  return sampled_wavelet_row(spec, p.r, m, *w);
}

}  // namespace

BoundaryCorrelators boundary_correlators(const LatticeSpec &spec, ZeroModePolicy policy,
                                         std::optional<double> beta) {
  if (beta && !(*beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "beta must be positive");
  const std::vector<double> d = boundary_spectrum(spec);
  const int V = spec.V();
  std::vector<double> sphi(V), spi(V);
  for (int j = 0; j < V; ++j) {
    double dj = d[j];
    if (dj == 0.0) {
      if (policy.kind == ZeroModeKind::None)
        throw Error(ErrorCode::SingularNoPolicy, "massless zero mode needs a zero-mode policy");
      if (policy.kind == ZeroModeKind::Deflated) {
        sphi[j] = spi[j] = 0.0;
        continue;
      }
    }
    if (policy.kind == ZeroModeKind::Regularized) dj = std::max(dj, policy.epsilon);
    if (!(dj > 0.0))
      throw Error(ErrorCode::SingularNoPolicy, "zero frequency with a vanishing regulator");
    const double c = beta ? 1.0 / std::tanh(*beta * dj) : 1.0;
    sphi[j] = 0.5 * c / dj;
    spi[j] = 0.5 * c * dj;
  }
  BoundaryCorrelators bc;
  bc.spec = spec;
  bc.policy = policy;
  bc.beta = beta;
  bc.phi = cosine_sum(sphi);
  bc.pi = cosine_sum(spi);
  return bc;
}

CovarianceState BoundaryCorrelators::to_state() const {
  const int V = spec.V();
  CovarianceState st;
  st.spec = spec;
  st.basis = Basis::Boundary;
  st.policy = policy;
  st.beta = beta;
  st.phi.resize(V, V);
  st.pi.resize(V, V);
  for (int a = 0; a < V; ++a)
    for (int b = 0; b < V; ++b) {
      const int dlt = ((b - a) % V + V) % V;
      st.phi(a, b) = phi[dlt];
      st.pi(a, b) = pi[dlt];
    }
  return st;
}

double bulk_correlator(const BoundaryCorrelators &bc, Field field, const BulkPoint &p,
                       const BulkPoint &q, CorrelatorMode mode, int J) {
  std::optional<DyadicFunction> w;
  if (mode == CorrelatorMode::Sampled)
    w = cascade_eval(bc.spec.family, WaveletKind::Wavelet, J);
  auto fp = wavelet_row(bc.spec, p, mode, w ? &*w : nullptr);
  auto fq = wavelet_row(bc.spec, q, mode, w ? &*w : nullptr);
  return dot(fp, ring_convolve(bc.of(field), fq));
}

std::vector<double> same_scale_row(const BoundaryCorrelators &bc, Field field, int r, int jmax) {
  check_scale(bc.spec, r);
  const int ring = bc.spec.L << r;
  if (jmax < 0 || jmax >= ring) throw Error(ErrorCode::IndexOutOfRange, "jmax out of range");
  auto f = bulk_basis_row(bc.spec, ModeIndex::wavelet(r, 0));
  auto u = ring_convolve(bc.of(field), f);
  // c(Delta) = sum_x f(x) u(x + Delta).
  cvec F = fft_fwd(f), U = fft_fwd(u);
  for (std::size_t i = 0; i < F.size(); ++i) F[i] = std::conj(F[i]) * U[i];
  auto c = fft_inv_real(F);
  const int step = 1 << (bc.spec.n - r);
  std::vector<double> out(jmax + 1);
  for (int j = 0; j <= jmax; ++j) out[j] = c[static_cast<std::size_t>(j) * step];
  return out;
}

double boundary_corr_from_bulk(const CovarianceState &bulk, Field a, Field b, int m, int mp) {
  if (bulk.basis != Basis::Bulk)
    throw Error(ErrorCode::InvalidArgument, "boundary_corr_from_bulk needs a bulk state");
  const int V = bulk.modes();
  if (m < 0 || m >= V || mp < 0 || mp >= V)
    throw Error(ErrorCode::IndexOutOfRange, "boundary position out of range");
  if (a != b) return 0.0;
  WaveletTransform T(bulk.spec);
  std::vector<double> e(V, 0.0);
  e[m] = 1.0;
  auto cm = T.forward(e);
  e[m] = 0.0;
  e[mp] = 1.0;
  auto cmp = T.forward(e);
  const Eigen::MatrixXd &G = a == Field::Phi ? bulk.phi : bulk.pi;
  Eigen::Map<const Eigen::VectorXd> x(cm.data(), V), y(cmp.data(), V);
  return x.dot(G * y);
}

double self_exponent_a() { return 3.18; }

double self_exponent_b(int K) { return 0.75 / (K * K) + 0.16 / K + 1.24; }

double massless_asymptotics(const WaveletFamily &family, int n, int r, int j,
                            AsymptoticKind which) {
  const int K = family.K;
  if (r < 0 || r >= n) throw Error(ErrorCode::ScaleOutOfRange, "r must lie in [0, n)");
  switch (which) {
    case AsymptoticKind::SelfPhi:
      return std::exp2(n - r - self_exponent_a());
    case AsymptoticKind::SelfPi:
      return std::exp2(r - n + self_exponent_b(K));
    default:
      break;
  }
  if (j <= 2 * K - 1)
    throw Error(ErrorCode::OutOfValidity, "pair asymptotics need j > 2K - 1");
  const double D = d_constant(family);
  const double sgn = (K % 2 == 0) ? 1.0 : -1.0;  // (-1)^K
  const double pi = std::numbers::pi;
  if (which == AsymptoticKind::PhiPhi)
    return sgn * std::exp2(n - r) * D / (4.0 * pi * K * std::pow(j, 2 * K));
  return -sgn * std::exp2(r - n) * (2 * K + 1) * D / (2.0 * pi * std::pow(j, 2 * K + 2));
}

MassiveAsymptotic massive_asymptotics(const WaveletFamily &family, int n, int r, int j,
                                      double m0, Field which, int J) {
  if (r < 0 || r >= n) throw Error(ErrorCode::ScaleOutOfRange, "r must lie in [0, n)");
  if (!(m0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "massive asymptotics need m0 > 0");
  if (j <= 2 * family.K - 1)
    throw Error(ErrorCode::OutOfValidity, "massive asymptotics need j > 2K - 1");
  const double mt = m0 * std::exp2(n - r);
  auto minus = wavelet_exp_average(family, mt, -1, J);
  auto plus = wavelet_exp_average(family, mt, +1, J);
  const double P = minus.value * plus.value;
  const double pi = std::numbers::pi;
  MassiveAsymptotic out;
  out.low_mass_warning = mt < 3.0;
  out.resolution_warning = minus.resolution_warning || plus.resolution_warning;
  const double decay = std::exp(-j * mt);
  if (which == Field::Phi)
    out.value = std::exp2(n - r) * decay / std::sqrt(8.0 * pi * mt * j) * P;
  else
    out.value = -std::exp2(r - n) * decay * std::sqrt(mt / (8.0 * pi * j * j * j)) * P;
  return out;
}

ContourPropagator::ContourPropagator(const LatticeSpec &spec, int N) {
  spec.validate();
  if (!(spec.m0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "contour propagator needs m0 > 0");
  if (N < 16) throw Error(ErrorCode::InvalidArgument, "contour grid too small");
  kappa_ = 0.5 * spec.m0;
  const auto dss = dss_row(spec.family);
  cvec xphi(N), xpi(N);
  for (int j = 0; j < N; ++j) {
    const std::complex<double> z(2.0 * std::numbers::pi * j / N, kappa_);
    std::complex<double> d2 = spec.m0 * spec.m0 - dss[0];
    for (std::size_t m = 0; m < dss.size(); ++m)
      d2 += 2.0 * dss[m] * std::cos(z * static_cast<double>(m));
    const std::complex<double> d = std::sqrt(d2);
    xphi[j] = 0.5 / d;
    xpi[j] = 0.5 * d;
  }
  phi_ = fft_inv_real(xphi);
  pi_ = fft_inv_real(xpi);
}

double ContourPropagator::operator()(Field field, long delta) const {
  delta = std::labs(delta);
  if (delta >= size() / 2)
    throw Error(ErrorCode::IndexOutOfRange, "separation beyond the contour grid");
  const auto &v = field == Field::Phi ? phi_ : pi_;
  return std::exp(-kappa_ * static_cast<double>(delta)) * v[delta];
}

double massive_bulk_correlator(const LatticeSpec &spec, const ContourPropagator &G, Field field,
                               int r, int j) {
  check_scale(spec, r);
  const auto f = bulk_basis_row(spec, ModeIndex::wavelet(r, 0));
  const long V = spec.V();
  std::vector<long> pos;
  std::vector<double> val;
  for (long m = 0; m < V; ++m)
    if (f[m] != 0.0) {
      pos.push_back(m < V / 2 ? m : m - V);
      val.push_back(f[m]);
    }
  const long shift = static_cast<long>(j) << (spec.n - r);
  double acc = 0.0;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    double inner = 0.0;
    for (std::size_t b = 0; b < pos.size(); ++b) inner += val[b] * G(field, shift + pos[b] - pos[a]);
    acc += val[a] * inner;
  }
  return acc;
}

std::vector<double> boundary_temporal_green(const LatticeSpec &spec, double tau) {
  if (!(tau >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be >= 0");
  auto d = boundary_spectrum(spec);
  for (double &v : d) v = std::exp(-v * tau);
  return cosine_sum(d);
}

double temporal_correlator(const LatticeSpec &spec, int r, int j, double tau, TemporalMode mode) {
  check_scale(spec, r);
  if (!(tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
  const int K = spec.K();
  if (mode == TemporalMode::Asymptotic) {
    const double threshold = std::exp2(spec.n - r) * (2 * K - 1);
    if (tau <= threshold)
      throw Error(ErrorCode::OutOfValidity, "asymptotic temporal form needs tau > 2^{n-r}(2K-1)");
    return kTemporalPrefactor * d_constant(spec.family) *
           std::exp2((spec.n - r) * (2 * K + 1)) / std::pow(tau, 2 * K + 1);
  }
  const int ring = spec.L << r;
  auto f = bulk_basis_row(spec, ModeIndex::wavelet(r, ((j % ring) + ring) % ring));
  return dot(f, ring_convolve(boundary_temporal_green(spec, tau), f));
}

double refit_temporal_prefactor(const LatticeSpec &spec, int tau_lo, int tau_hi) {
  if (tau_lo < 1 || tau_hi < tau_lo)
    throw Error(ErrorCode::InvalidArgument, "need 1 <= tau_lo <= tau_hi");
  const auto d = boundary_spectrum(spec);
  const int count = tau_hi - tau_lo + 1;
  std::vector<double> vals(count);
  // G_tau(0) needs no FFT: it is the mean of exp(-d tau).
  parallel_for(count, [&](int i) {
    const double tau = tau_lo + i;
    double acc = 0.0;
    for (double dj : d) acc += std::exp(-dj * tau);
    vals[i] = tau * acc / static_cast<double>(d.size());
  });
  double mean = 0.0;
  for (double v : vals) mean += v;
  return mean / count;
}

double geodesic_distance(const LatticeSpec &spec, const BulkPoint &a, const BulkPoint &b,
                         double R) {
  if (!(R > 0.0)) throw Error(ErrorCode::InvalidArgument, "R must be positive");
  check_scale(spec, a.r);
  check_scale(spec, b.r);
  const double ring_a = static_cast<double>(spec.L << a.r);
  const double ring_b = static_cast<double>(spec.L << b.r);
  const double theta_a = 2.0 * std::numbers::pi * a.m / ring_a;
  const double theta_b = 2.0 * std::numbers::pi * b.m / ring_b;
  const bool same_time = a.tau == b.tau;
  if (same_time && a.r == b.r && a.m == b.m) return 0.0;
  if (same_time && a.r == b.r) {
    const double rho = ring_a / (2.0 * std::numbers::pi);
    const double s = std::sin(0.5 * (theta_a - theta_b));
    return R * std::acosh(1.0 + 2.0 * rho * rho / (R * R) * s * s);
  }
  if (same_time && std::abs(theta_a - theta_b) < 1e-12)
    return R * std::abs(a.r - b.r) * std::numbers::ln2;
  if (a.r == b.r && a.m == b.m) {
    const double t = std::abs(a.tau - b.tau) * std::exp2(a.r - spec.n);
    return 2.0 * R * std::log(t / R);
  }
  throw Error(ErrorCode::UnsupportedPair, "no geodesic formula for this pair of bulk points");
}

double geodesic_same_scale_approx(int separation, double R) {
  if (!(R > 0.0)) throw Error(ErrorCode::InvalidArgument, "R must be positive");
  return 2.0 * R * std::log(std::abs(separation) / R);
}

CurvatureFit fit_curvature(const std::vector<std::pair<double, double>> &samples, double S0,
                           int K) {
  std::vector<double> lx, ly;
  for (const auto &[j, I] : samples)
    if (j > 2 * K - 1 && I > 0.0) {
      lx.push_back(std::log(j));
      ly.push_back(std::log(I));
    }
  if (lx.size() < 5)
    throw Error(ErrorCode::InsufficientSamples, "curvature fit needs at least 5 samples");
  if (!(S0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "S0 must be positive");
  const double N = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= N;
  my /= N;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  CurvatureFit fit;
  fit.slope = sxy / sxx;
  const double target = -4.0 * K;
  if (std::abs(fit.slope - target) > 0.1 * std::abs(target))
    throw Error(ErrorCode::SlopeMismatch,
                "log-log slope " + std::to_string(fit.slope) + " is not within 10% of -4K");
  // With the slope pinned at -4K: ln I = alpha - 4K ln j, alpha = ln S0 + 4K ln R.
  const double alpha = my - target * mx;
  fit.S0 = S0;
  fit.R = std::exp((alpha - std::log(S0)) / (4.0 * K));
  fit.xiTheta = fit.R / (2.0 * K);
  fit.xiTau = 2.0 * fit.R / (2.0 * K + 1.0);
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (alpha + target * lx[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / N);
  return fit;
}

double fit_cross_scale_length(const std::vector<std::pair<double, double>> &samples, double R) {
  std::vector<double> x, y;
  for (const auto &[dr, I] : samples)
    if (I > 0.0) {
      x.push_back(dr);
      y.push_back(std::log(I));
    }
  if (x.size() < 2) throw Error(ErrorCode::InsufficientSamples, "cross-scale fit needs 2 samples");
  const double N = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= N;
  my /= N;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  if (!(slope < 0.0)) throw Error(ErrorCode::SlopeMismatch, "cross-scale MI does not decay");
  return -R * std::numbers::ln2 / slope;
}

SameScaleProfile same_scale_profile(const BoundaryCorrelators &bc, int r, int jmax) {
  SameScaleProfile p;
  p.r = r;
  auto phi = same_scale_row(bc, Field::Phi, r, jmax);
  auto pi = same_scale_row(bc, Field::Pi, r, jmax);
  p.P = phi[0];
  p.Q = pi[0];
  p.S0 = entropy_from_spectrum({std::sqrt(p.P * p.Q)});
  for (int j = 1; j <= jmax; ++j) {
    p.j.push_back(j);
    p.phi.push_back(phi[j]);
    p.pi.push_back(pi[j]);
    p.mi.push_back(two_mode_mutual_information(p.P, p.Q, p.P, p.Q, phi[j], pi[j]));
  }
  return p;
}

CurvatureFit curvature_from_profile(const SameScaleProfile &p, int K, int L) {
  const int hi = std::min(40, (L << p.r) / 4);
  std::vector<std::pair<double, double>> samples;
  for (std::size_t i = 0; i < p.j.size(); ++i)
    if (p.j[i] > 2 * K - 1 && p.j[i] <= hi) samples.emplace_back(p.j[i], p.mi[i]);
  return fit_curvature(samples, p.S0, K);
}

}  // namespace holomap
