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


#include "holomap/lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "holomap/error.hpp"

namespace holomap {

void LatticeSpec::validate() const {
  if (family.K < 1 || family.h.size() != static_cast<std::size_t>(2 * family.K))
    throw Error(ErrorCode::InvalidArgument, "lattice spec has no wavelet family");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (L < 2 * (2 * family.K - 1))
    throw Error(ErrorCode::SizeTooSmall, "L must be at least 2(2K-1) = " +
                                             std::to_string(2 * (2 * family.K - 1)));
  if (n > 24) throw Error(ErrorCode::InvalidArgument, "n above 24 is not supported");
  if (!(m0 >= 0.0) || !std::isfinite(m0))
    throw Error(ErrorCode::InvalidArgument, "m0 must be finite and >= 0");
}

LatticeSpec LatticeSpec::make(int K, int L, int n, double m0) {
  LatticeSpec s;
  s.family = daubechies_filters(K);
  s.L = L;
  s.n = n;
  s.m0 = m0;
  s.validate();
  return s;
}

int flat_index(const LatticeSpec &spec, const ModeIndex &mode) {
  if (mode.basis == Basis::Boundary) {
    if (mode.m < 0 || mode.m >= spec.V())
      throw Error(ErrorCode::IndexOutOfRange, "boundary position out of range");
    return mode.m;
  }
  if (mode.kind == WaveletKind::Scale) {
    if (mode.m < 0 || mode.m >= spec.L)
      throw Error(ErrorCode::IndexOutOfRange, "scale position out of range");
    return mode.m;
  }
  if (mode.r < 0 || mode.r >= spec.n)
    throw Error(ErrorCode::ScaleOutOfRange, "wavelet scale must lie in [0, n)");
  if (mode.m < 0 || mode.m >= (spec.L << mode.r))
    throw Error(ErrorCode::IndexOutOfRange, "wavelet position out of range");
  return (spec.L << mode.r) + mode.m;
}

ModeIndex mode_at(const LatticeSpec &spec, Basis basis, int flat) {
  if (flat < 0 || flat >= spec.V()) throw Error(ErrorCode::IndexOutOfRange, "flat index");
  if (basis == Basis::Boundary) return ModeIndex::boundary(flat);
  if (flat < spec.L) return ModeIndex::scale(flat);
  int r = 0;
  while ((spec.L << (r + 1)) <= flat) ++r;
  return ModeIndex::wavelet(r, flat - (spec.L << r));
}

double dispersion_squared(const LatticeSpec &spec, const std::vector<double> &dss, double k) {
  double d2 = spec.m0 * spec.m0 - dss[0];
  for (std::size_t m = 0; m < dss.size(); ++m) d2 += 2.0 * dss[m] * std::cos(k * m);
  return d2;
}

CouplingMatrix boundary_coupling(const LatticeSpec &spec, const std::vector<double> &dss) {
  spec.validate();
  CouplingMatrix out;
  out.spec = spec;
  out.basis = Basis::Boundary;
  out.entries = dss_circulant(dss, spec.V());
  out.entries.diagonal().array() += spec.m0 * spec.m0;
  return out;
}

CouplingMatrix boundary_coupling(const LatticeSpec &spec) {
  return boundary_coupling(spec, dss_row(spec.family));
}

std::vector<double> boundary_spectrum(const LatticeSpec &spec, const std::vector<double> &dss) {
  spec.validate();
  const int V = spec.V();
  double scale = 0.0;
  for (double v : dss) scale += 2.0 * std::abs(v);
  const double clip = 100.0 * std::numeric_limits<double>::epsilon() * scale;
  std::vector<double> d(V);
  for (int j = 0; j < V; ++j) {
    double d2 = dispersion_squared(spec, dss, 2.0 * std::numbers::pi * j / V);
    if (d2 < -1e-9)
      throw Error(ErrorCode::NegativeEigenvalue,
                  "negative squared frequency at j = " + std::to_string(j));
    d[j] = std::abs(d2) <= clip ? 0.0 : std::sqrt(std::max(d2, 0.0));
  }
  return d;
}

std::vector<double> boundary_spectrum(const LatticeSpec &spec) {
  return boundary_spectrum(spec, dss_row(spec.family));
}

Eigen::MatrixXd boundary_fourier_matrix(int V) {
  if (V <= 0 || V % 2 != 0) throw Error(ErrorCode::OddSize, "V must be even and positive");
  Eigen::MatrixXd M(V, V);
  const double a = 1.0 / std::sqrt(static_cast<double>(V));
  const double b = std::sqrt(2.0 / V);
  const int half = V / 2;
  for (int m = 0; m < V; ++m) {
    M(0, m) = a;
    M(half, m) = (m % 2 == 0) ? a : -a;
    for (int j = 1; j < half; ++j) {
      // Reduce the phase index exactly before the trig call.
      const long ph = (static_cast<long>(j) * m) % V;
      const double k = 2.0 * std::numbers::pi * static_cast<double>(ph) / V;
      M(j, m) = b * std::cos(k);
      M(half + j, m) = b * std::sin(k);
    }
  }
  return M;
}

int fourier_row_momentum(int V, int row) {
  const int half = V / 2;
  if (row <= half) return row;
  return row - half;
}

WaveletTransform::WaveletTransform(const LatticeSpec &spec) : spec_(spec) { spec_.validate(); }

std::vector<double> WaveletTransform::forward(const std::vector<double> &x) const {
  const int V = spec_.V();
  if (static_cast<int>(x.size()) != V)
    throw Error(ErrorCode::DimensionMismatch, "forward transform expects V entries");
  std::vector<double> out(V, 0.0), cur = x, coarse;
  for (int ell = V; ell > spec_.L; ell /= 2) {
    coarse.assign(ell / 2, 0.0);
    analyze_stage(spec_.family, cur.data(), ell, coarse.data(), out.data() + ell / 2);
    cur.swap(coarse);
  }
  std::copy(cur.begin(), cur.end(), out.begin());
  return out;
}

std::vector<double> WaveletTransform::inverse(const std::vector<double> &y) const {
  const int V = spec_.V();
  if (static_cast<int>(y.size()) != V)
    throw Error(ErrorCode::DimensionMismatch, "inverse transform expects V entries");
  std::vector<double> cur(y.begin(), y.begin() + spec_.L), next;
  for (int ell = 2 * spec_.L; ell <= V; ell *= 2) {
    next.assign(ell, 0.0);
    synthesize_stage(spec_.family, cur.data(), y.data() + ell / 2, ell, next.data());
    cur.swap(next);
  }
  return cur;
}

Eigen::MatrixXd WaveletTransform::matrix() const {
  const int V = spec_.V();
  Eigen::MatrixXd M(V, V);
  std::vector<double> e(V, 0.0);
  for (int i = 0; i < V; ++i) {
    e[i] = 1.0;
    auto col = forward(e);
    for (int r = 0; r < V; ++r) M(r, i) = col[r];
    e[i] = 0.0;
  }
  return M;
}

Eigen::MatrixXd wavelet_transform_matrix(const LatticeSpec &spec) {
  return WaveletTransform(spec).matrix();
}

CouplingMatrix bulk_coupling(const LatticeSpec &spec, const OverlapTables &tables) {
  spec.validate();
  if (tables.K != spec.K() || tables.L != spec.L || tables.n != spec.n)
    throw Error(ErrorCode::DimensionMismatch, "overlap tables built for a different lattice");
  const int V = spec.V();
  const int L = spec.L;
  const double s = std::ldexp(1.0, -2 * spec.n);
  CouplingMatrix out;
  out.spec = spec;
  out.basis = Basis::Bulk;
  Eigen::MatrixXd &Kb = out.entries;
  Kb = Eigen::MatrixXd::Zero(V, V);
  Kb.topLeftCorner(L, L) = s * dss_circulant(tables.dss, L);
  for (int l = 0; l < spec.n; ++l) {
    const int off = L << l;
    const int size = L << l;
    Eigen::MatrixXd sw = 0.5 * s * tables.dsw.at(l);
    Kb.block(0, off, L, size) = sw;
    Kb.block(off, 0, size, L) = sw.transpose();
    for (int j = 0; j <= l; ++j) {
      const int offj = L << j;
      Eigen::MatrixXd ww = s * tables.dww.at({l, j});
      Kb.block(off, offj, size, L << j) = ww;
      if (j != l) Kb.block(offj, off, L << j, size) = ww.transpose();
    }
  }
  Kb.diagonal().array() += spec.m0 * spec.m0;
  return out;
}

std::vector<double> bulk_basis_row(const LatticeSpec &spec, const ModeIndex &mode) {
  if (mode.basis != Basis::Bulk)
    throw Error(ErrorCode::InvalidArgument, "bulk_basis_row needs a bulk mode");
  std::vector<double> e(spec.V(), 0.0);
  e[flat_index(spec, mode)] = 1.0;
  return WaveletTransform(spec).inverse(e);
}

std::vector<double> sampled_wavelet_row(const LatticeSpec &spec, int r, int j,
                                        const DyadicFunction &w) {
  if (r < 0 || r >= spec.n) throw Error(ErrorCode::ScaleOutOfRange, "r must lie in [0, n)");
  const int V = spec.V();
  const double mu = scale_moment(spec.family, 1);
  const double ring = static_cast<double>(spec.L << r);
  const double shrink = std::ldexp(1.0, r - spec.n);
  const double amp = std::sqrt(shrink);
  std::vector<double> f(V);
  for (int m = 0; m < V; ++m) {
    double u = std::fmod(shrink * (m + mu) - j, ring);
    if (u < 0) u += ring;
    f[m] = amp * w.at(u);
  }
  return f;
}

}  // namespace holomap
