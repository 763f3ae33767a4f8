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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "holomap/error.hpp"
#include "holomap/wavelets.hpp"
#include "oracle.hpp"

namespace holomap {
namespace {

double riemann(const DyadicFunction &f, int p) {
  double acc = 0.0;
  for (std::size_t k = 0; k < f.samples.size(); ++k) acc += std::pow(f.x(k), p) * f.samples[k];
  return acc * f.step();
}

class FamilyTest : public ::testing::TestWithParam<int> {};

TEST_P(FamilyTest, FilterInvariants) {
  const auto f = daubechies_filters(GetParam());
  const int N = f.taps();
  ASSERT_EQ(static_cast<int>(f.h.size()), N);
  ASSERT_EQ(static_cast<int>(f.g.size()), N);
  double sh = 0.0, sg = 0.0;
  for (int i = 0; i < N; ++i) {
    EXPECT_EQ(f.g[i], (i % 2 ? -1.0 : 1.0) * f.h[N - 1 - i]);
    sh += f.h[i];
    sg += f.g[i];
  }
  EXPECT_NEAR(sh, std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(sg, 0.0, 1e-12);
  for (int m = 0; m < f.K; ++m) {
    double acc = 0.0;
    for (int i = 0; i + 2 * m < N; ++i) acc += f.h[i] * f.h[i + 2 * m];
    EXPECT_NEAR(acc, m == 0 ? 1.0 : 0.0, 1e-10) << "m=" << m;
  }
}

TEST_P(FamilyTest, CascadeNormalizationAndVanishingMoments) {
  const auto f = daubechies_filters(GetParam());
  const auto s = cascade_eval(f, WaveletKind::Scale, 10);
  const auto w = cascade_eval(f, WaveletKind::Wavelet, 10);
  EXPECT_EQ(s.samples.size(), static_cast<std::size_t>((2 * f.K - 1) * 1024 + 1));
  EXPECT_EQ(w.samples.size(), s.samples.size());
  EXPECT_NEAR(s.integral(), 1.0, 1e-6);
  for (int p = 0; p < f.K; ++p) EXPECT_NEAR(riemann(w, p), 0.0, 1e-6) << p;
}

TEST_P(FamilyTest, CascadeRefinementIsCauchy) {
  const auto f = daubechies_filters(GetParam());
  double prev = 1e300;
  auto coarse = cascade_eval(f, WaveletKind::Scale, 6);
  for (int J = 7; J <= 11; ++J) {
    const auto fine = cascade_eval(f, WaveletKind::Scale, J);
    double diff = 0.0;
    for (std::size_t k = 0; k < fine.samples.size(); ++k)
      diff = std::max(diff, std::abs(fine.samples[k] - coarse.at(fine.x(k))));
    EXPECT_LT(diff, prev) << "J=" << J;
    prev = diff;
    coarse = fine;
  }
}

TEST_P(FamilyTest, MomentRecursionMatchesQuadrature) {
  const auto f = daubechies_filters(GetParam());
  for (int a = 0; a <= 6; ++a) {
    const double rec = wavelet_moment(f, a);
    EXPECT_NEAR(rec, oracle::wavelet_moment(f, a), 1e-5 * std::max(1.0, std::abs(rec))) << a;
    if (a < f.K) EXPECT_NEAR(rec, 0.0, 1e-12);
  }
  const auto s = cascade_eval(f, WaveletKind::Scale, 12);
  EXPECT_NEAR(scale_moment(f, 0), 1.0, 1e-15);
  EXPECT_NEAR(scale_moment(f, 1), riemann(s, 1), 1e-6);
  EXPECT_NEAR(scale_moment(f, 2), riemann(s, 2), 1e-5);
}

INSTANTIATE_TEST_SUITE_P(K, FamilyTest, ::testing::Values(3, 4, 5));

TEST(Wavelets, TableOneValues) {
  const double s10 = std::sqrt(10.0), a = std::sqrt(5.0 + 2.0 * s10);
  EXPECT_NEAR(daubechies_filters(3).h[0], (1.0 + s10 + a) / (16.0 * std::numbers::sqrt2), 1e-15);
  EXPECT_NEAR(daubechies_filters(3).h[0], 0.332670552950083, 1e-14);
  EXPECT_DOUBLE_EQ(daubechies_filters(4).h[7], -0.010597401785069);
}

TEST(Wavelets, UnsupportedFamily) {
  for (int K : {0, 1, 2, 6}) {
    try {
      daubechies_filters(K);
      FAIL() << K;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedFamily);
    }
  }
}

TEST(Wavelets, ThirdMomentAtDefaultResolution) {
  const auto f = daubechies_filters(3);
  double v[3];
  for (int i = 0; i < 3; ++i) v[i] = riemann(cascade_eval(f, WaveletKind::Wavelet, 10 + i), 3);
  EXPECT_NEAR(oracle::aitken(v[0], v[1], v[2]), -3.0 * std::sqrt(2.5) / 16.0, 1e-4);
  EXPECT_NEAR(wavelet_moment(f, 3), -3.0 * std::sqrt(2.5) / 16.0, 1e-14);
}

TEST(Wavelets, DConstant) {
  EXPECT_NEAR(d_constant(daubechies_filters(3)), 225.0 / 128.0, 1e-12);
  EXPECT_NEAR(d_constant(daubechies_filters(4)), 21.53, 0.005 * 21.53);
}

TEST(Wavelets, ExpAverage) {
  const auto f = daubechies_filters(3);
  EXPECT_NEAR(wavelet_exp_average(f, 1e-7, +1).value, 0.0, 1e-6);
  EXPECT_NEAR(wavelet_exp_average(f, 1e-7, -1).value, 0.0, 1e-6);
  const double lo = wavelet_exp_average(f, 2.0, +1).value;
  const double hi = wavelet_exp_average(f, 2.0, +1, 16).value;
  EXPECT_NEAR(lo, hi, 1e-5 * std::abs(hi));
  EXPECT_FALSE(wavelet_exp_average(f, 2.0, +1).resolution_warning);
  EXPECT_TRUE(wavelet_exp_average(f, 500.0, +1).resolution_warning);
  // Product fit e^{4.71 m - 20.38} holds in log space once m is large.
  for (double m : {15.0, 20.0, 40.0}) {
    const double P = wavelet_exp_average(f, m, +1).value * wavelet_exp_average(f, m, -1).value;
    EXPECT_NEAR(std::log(std::abs(P)), 4.71 * m - 20.38, 0.1 * (4.71 * m - 20.38)) << m;
  }
}

TEST(Wavelets, AnalysisStageIsOrthogonalAndFastPathAgrees) {
  const auto f = daubechies_filters(4);
  const int ell = 28;
  const auto A = analysis_stage(f, ell);
  EXPECT_LT((A * A.transpose() - Eigen::MatrixXd::Identity(ell, ell)).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(ell, -1.0, 2.0).array().sin();
  std::vector<double> c(ell / 2), d(ell / 2), back(ell);
  analyze_stage(f, x.data(), ell, c.data(), d.data());
  const Eigen::VectorXd y = A * x;
  for (int m = 0; m < ell / 2; ++m) {
    EXPECT_NEAR(c[m], y(m), 1e-13);
    EXPECT_NEAR(d[m], y(ell / 2 + m), 1e-13);
  }
  synthesize_stage(f, c.data(), d.data(), ell, back.data());
  for (int i = 0; i < ell; ++i) EXPECT_NEAR(back[i], x(i), 1e-13);
}

}  // namespace
}  // namespace holomap
