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


#include "holomap/overlaps.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "holomap/error.hpp"

namespace holomap {

namespace {

double tap(const std::vector<double> &h, int i) {
  return (i >= 0 && i < static_cast<int>(h.size())) ? h[i] : 0.0;
}

// Least squares with a rank check; throws RankDeficiency when the stacked
// system does not pin down a unique solution.
Eigen::VectorXd solve_stacked(const Eigen::MatrixXd &A, const Eigen::VectorXd &b,
                              const char *what) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto &sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) < 1e-10 * sv(0))
    throw Error(ErrorCode::RankDeficiency, std::string(what) + " system is rank deficient");
  return svd.solve(b);
}

void check_size(const WaveletFamily &family, int L, int n) {
  if (L < 2 * (2 * family.K - 1))
    throw Error(ErrorCode::SizeTooSmall, "L must be at least 2(2K-1) = " +
                                             std::to_string(2 * (2 * family.K - 1)));
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
}

// Rows of the coarse half of the stage on ring L 2^(k+1): L 2^k x L 2^(k+1).
Eigen::MatrixXd coarse_rows(const WaveletFamily &f, int L, int k) {
  int ell = L << (k + 1);
  return analysis_stage(f, ell).topRows(ell / 2);
}

Eigen::MatrixXd detail_rows(const WaveletFamily &f, int L, int k) {
  int ell = L << (k + 1);
  return analysis_stage(f, ell).bottomRows(ell / 2);
}

// Level-(from) functions expressed in the level-(to+1) scale basis, to >= from:
// multiply by the coarse stages H_{from} ... H_{to}.
Eigen::MatrixXd lift(const WaveletFamily &f, int L, Eigen::MatrixXd rows, int from, int to) {
  for (int k = from; k <= to; ++k) rows = rows * coarse_rows(f, L, k);
  return rows;
}

}  // namespace

double GammaCoeffs::operator()(int n) const {
  if (std::abs(n) > max_offset()) return 0.0;
  return values[n + max_offset()];
}

double TripleOverlaps::operator()(int r, int s) const {
  const int N = max_offset();
  if (std::abs(r) > N || std::abs(s) > N) return 0.0;
  return values(r + N, s + N);
}

GammaCoeffs solve_gamma(const WaveletFamily &family) {
  const int N = 2 * family.K - 2;
  const int M = 2 * N + 1;
  const auto &h = family.h;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M + 1, M);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(M + 1);
  // Gamma_{0,j} = 2 sum_m sum_n h_m h_{n+m-2j} Gamma_{0,n}, stacked as (A - I) x = 0.
  for (int a = 0; a < M; ++a) {
    const int j = a - N;
    A(a, a) -= 1.0;
    for (int m = 0; m < family.taps(); ++m)
      for (int c = 0; c < M; ++c) A(a, c) += 2.0 * h[m] * tap(h, (c - N) + m - 2 * j);
  }
  for (int c = 0; c < M; ++c) A(M, c) = c - N;
  b(M) = 1.0;
  Eigen::VectorXd x = solve_stacked(A, b, "Gamma");
  if ((A * x - b).cwiseAbs().maxCoeff() > 1e-10)
    throw Error(ErrorCode::RankDeficiency, "Gamma system residual above 1e-10");
  GammaCoeffs out;
  out.K = family.K;
  out.values.assign(x.data(), x.data() + M);
  return out;
}

TripleOverlaps solve_triple(const WaveletFamily &family, const GammaCoeffs &gamma) {
  const int N = 2 * family.K - 2;
  const int M = 2 * N + 1;
  const int P = M * M;
  const auto &h = family.h;
  const double c4 = 4.0 * std::sqrt(2.0);
  auto v = [&](int r, int s) { return (r + N) * M + (s + N); };

  std::vector<Eigen::VectorXd> eqs;
  std::vector<double> rhs;
  eqs.reserve(P + 2 * M + M * (M - 1) / 2);

  // D_{0,r,s} = 4 sqrt2 sum_n sum_{k,j} h_n h_{k+n-2r} h_{j+n-2s} D_{0,k,j}.
  for (int r = -N; r <= N; ++r)
    for (int s = -N; s <= N; ++s) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(P);
      row(v(r, s)) -= 1.0;
      for (int n = 0; n < family.taps(); ++n)
        for (int k = -N; k <= N; ++k) {
          const double a = tap(h, k + n - 2 * r);
          if (a == 0.0) continue;
          for (int j = -N; j <= N; ++j) row(v(k, j)) += c4 * h[n] * a * tap(h, j + n - 2 * s);
        }
      eqs.push_back(std::move(row));
      rhs.push_back(0.0);
    }
  // sum_k D_{0,j,k} = 0.
  for (int j = -N; j <= N; ++j) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(P);
    for (int k = -N; k <= N; ++k) row(v(j, k)) = 1.0;
    eqs.push_back(std::move(row));
    rhs.push_back(0.0);
  }
  // sum_j j D_{0,j,k} = Gamma_{0,k}.
  for (int k = -N; k <= N; ++k) {
    Eigen::VectorXd row = Eigen::VectorXd::Zero(P);
    for (int j = -N; j <= N; ++j) row(v(j, k)) = j;
    eqs.push_back(std::move(row));
    rhs.push_back(gamma(k));
  }
  // Symmetry in the last two indices.
  for (int r = -N; r <= N; ++r)
    for (int s = r + 1; s <= N; ++s) {
      Eigen::VectorXd row = Eigen::VectorXd::Zero(P);
      row(v(r, s)) = 1.0;
      row(v(s, r)) = -1.0;
      eqs.push_back(std::move(row));
      rhs.push_back(0.0);
    }

  Eigen::MatrixXd A(static_cast<Eigen::Index>(eqs.size()), P);
  Eigen::VectorXd b(static_cast<Eigen::Index>(eqs.size()));
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    A.row(static_cast<Eigen::Index>(i)) = eqs[i].transpose();
    b(static_cast<Eigen::Index>(i)) = rhs[i];
  }
  Eigen::VectorXd x = solve_stacked(A, b, "triple overlap");
  if ((A * x - b).cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorCode::RankDeficiency, "triple overlap residual above 1e-9");

  TripleOverlaps out;
  out.K = family.K;
  out.values.resize(M, M);
  for (int r = 0; r < M; ++r)
    for (int s = 0; s < M; ++s) out.values(r, s) = x(r * M + s);
  return out;
}

std::vector<double> dss_row(const TripleOverlaps &triple) {
  const int N = triple.max_offset();
  std::vector<double> row(N + 1, 0.0);
  // D^[ss]0_{0,m} = sum_n D_{n,0,m} = sum_n D_{0,-n,m-n}.
  for (int m = 0; m <= N; ++m)
    for (int n = -2 * N; n <= 2 * N; ++n) row[m] += triple(-n, m - n);
  return row;
}

std::vector<double> dss_row(const WaveletFamily &family) {
  return dss_row(solve_triple(family, solve_gamma(family)));
}

Eigen::MatrixXd dss_circulant(const std::vector<double> &row, int ell) {
  const int N = static_cast<int>(row.size()) - 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(ell, ell);
  for (int a = 0; a < ell; ++a)
    for (int m = -N; m <= N; ++m) C(a, ((a + m) % ell + ell) % ell) += row[std::abs(m)];
  return C;
}

Eigen::MatrixXd dsw_matrix(const WaveletFamily &family, const std::vector<double> &dss, int L,
                           int n, int l) {
  check_size(family, L, n);
  if (l < 0 || l >= n) throw Error(ErrorCode::IndexOutOfRange, "scale l must lie in [0, n)");
  const int ring = L << (l + 1);
  Eigen::MatrixXd S = lift(family, L, coarse_rows(family, L, 0), 1, l);
  Eigen::MatrixXd W = detail_rows(family, L, l);
  Eigen::MatrixXd C = dss_circulant(dss, ring);
  return 2.0 * std::ldexp(1.0, 2 * (l + 1)) * (S * C * W.transpose());
}

Eigen::MatrixXd dww_matrix(const WaveletFamily &family, const std::vector<double> &dss, int L,
                           int n, int l, int j) {
  check_size(family, L, n);
  if (l < 0 || l >= n || j < 0 || j > l)
    throw Error(ErrorCode::IndexOutOfRange, "need 0 <= j <= l < n");
  const int ring = L << (l + 1);
  Eigen::MatrixXd Wl = detail_rows(family, L, l);
  Eigen::MatrixXd Wj = lift(family, L, detail_rows(family, L, j), j + 1, l);
  Eigen::MatrixXd C = dss_circulant(dss, ring);
  return std::ldexp(1.0, 2 * (l + 1)) * (Wl * C * Wj.transpose());
}

OverlapTables compute_overlap_tables(const WaveletFamily &family, int L, int n) {
  check_size(family, L, n);
  OverlapTables t;
  t.K = family.K;
  t.L = L;
  t.n = n;
  t.dss = dss_row(family);
  for (int l = 0; l < n; ++l) {
    t.dsw.push_back(dsw_matrix(family, t.dss, L, n, l));
    for (int j = 0; j <= l; ++j) t.dww[{l, j}] = dww_matrix(family, t.dss, L, n, l, j);
  }
  return t;
}

}  // namespace holomap
