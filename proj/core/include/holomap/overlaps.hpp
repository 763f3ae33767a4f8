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

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "holomap/wavelets.hpp"

namespace holomap {

// Gamma_{0,n} = integral of s(x) s'(x - n) for |n| <= 2K-2.
struct GammaCoeffs {
  int K = 0;
  std::vector<double> values;  // index n + 2K - 2

  int max_offset() const { return 2 * K - 2; }
  double operator()(int n) const;
};

// D_{0,r,s} for r, s in [-(2K-2), 2K-2].
struct TripleOverlaps {
  int K = 0;
  Eigen::MatrixXd values;  // (r + 2K - 2, s + 2K - 2)

  int max_offset() const { return 2 * K - 2; }
  double operator()(int r, int s) const;
};

GammaCoeffs solve_gamma(const WaveletFamily &family);
TripleOverlaps solve_triple(const WaveletFamily &family, const GammaCoeffs &gamma);

// D^[ss]0_{0,m} for m = 0..2K-2; negative offsets follow by symmetry.
std::vector<double> dss_row(const WaveletFamily &family);
std::vector<double> dss_row(const TripleOverlaps &triple);

// Dense circulant on a ring of length ell with entry (a, a+m) = row[|m|].
Eigen::MatrixXd dss_circulant(const std::vector<double> &row, int ell);

// D^[sw]l,0: L x L 2^l, scale-0 modes against scale-l wavelets, including the
// conventional factor 2. Exactly periodized on the coarse ring of length L.
Eigen::MatrixXd dsw_matrix(const WaveletFamily &family, const std::vector<double> &dss, int L,
                           int n, int l);
// D^[ww]l,j: L 2^l x L 2^j for 0 <= j <= l < n.
Eigen::MatrixXd dww_matrix(const WaveletFamily &family, const std::vector<double> &dss, int L,
                           int n, int l, int j);

struct OverlapTables {
  int K = 0, L = 0, n = 0;
  std::vector<double> dss;
  std::vector<Eigen::MatrixXd> dsw;                    // indexed by l
  std::map<std::pair<int, int>, Eigen::MatrixXd> dww;  // keyed by (l, j), j <= l
};

OverlapTables compute_overlap_tables(const WaveletFamily &family, int L, int n);

}  // namespace holomap
