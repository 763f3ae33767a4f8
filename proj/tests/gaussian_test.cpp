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


#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "holomap/error.hpp"
#include "holomap/gaussian.hpp"
#include "holomap/holography.hpp"
#include "holomap/lattice.hpp"

namespace holomap {
namespace {

ErrorCode code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

double max_abs(const Eigen::MatrixXd &M) { return M.cwiseAbs().maxCoeff(); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

class BulkStates : public ::testing::Test {
 protected:
  LatticeSpec spec = LatticeSpec::make(3, 10, 3);
  OverlapTables tables = compute_overlap_tables(spec.family, spec.L, spec.n);
  CouplingMatrix bulk(double m0) {
    auto s = spec;
    s.m0 = m0;
    return bulk_coupling(s, tables);
  }
};

TEST(Ground, MassivePureState) {
  const auto state = ground_covariance(boundary_coupling(LatticeSpec::make(3, 10, 2, 1.0)),
                                       ZeroModePolicy::none());
  for (double s : symplectic_spectrum(state.gamma())) EXPECT_NEAR(s, 0.5, 1e-9);
  EXPECT_NEAR(entropy_bits(state.gamma()), 0.0, 1e-6);
  EXPECT_NEAR(purity(state.gamma()), 1.0, 1e-6);
}

TEST(Ground, SingularWithoutPolicy) {
  const auto K = boundary_coupling(LatticeSpec::make(3, 10, 2));
  EXPECT_EQ(code_of([&] { ground_covariance(K, ZeroModePolicy::none()); }),
            ErrorCode::SingularNoPolicy);
  EXPECT_EQ(code_of([&] { thermal_covariance(K, 1.0, ZeroModePolicy::none()); }),
            ErrorCode::SingularNoPolicy);
  EXPECT_EQ(code_of([&] { thermal_covariance(K, 0.0, ZeroModePolicy::deflated()); }),
            ErrorCode::InvalidArgument);
}

TEST_F(BulkStates, DeflatedMatchesRegularizedOnWaveletSector) {
  const auto a = ground_covariance(bulk(0.0), ZeroModePolicy::deflated());
  const auto b = ground_covariance(bulk(0.0), ZeroModePolicy::regularized(1e-8));
  const int L = spec.L, W = spec.V() - L;
  EXPECT_LT(max_abs(a.phi.bottomRightCorner(W, W) - b.phi.bottomRightCorner(W, W)), 1e-8);
  EXPECT_LT(max_abs(a.pi.bottomRightCorner(W, W) - b.pi.bottomRightCorner(W, W)), 1e-8);
}

TEST_F(BulkStates, DeepBulkSelfCorrelation) {
  const auto st = ground_covariance(bulk(0.0), ZeroModePolicy::deflated());
  const int r = 0, i = flat_index(spec, ModeIndex::wavelet(r, 0));
  EXPECT_NEAR(st.phi(i, i), std::pow(2.0, spec.n - r - self_exponent_a()),
              0.05 * std::pow(2.0, spec.n - r - self_exponent_a()));
}

TEST_F(BulkStates, ThermalLimitAndNormalModes) {
  const double d1 = boundary_spectrum(spec)[1];
  const auto g = ground_covariance(bulk(0.0), ZeroModePolicy::deflated());
  const auto t = thermal_covariance(bulk(0.0), 1e4 / d1, ZeroModePolicy::deflated());
  EXPECT_LT(std::max(max_abs(g.phi - t.phi), max_abs(g.pi - t.pi)), 1e-8);

  auto s1 = spec;
  s1.m0 = 1.0;
  const double beta = 0.5;
  const auto th = thermal_covariance(boundary_coupling(s1), beta, ZeroModePolicy::deflated());
  const auto M = boundary_fourier_matrix(s1.V());
  const Eigen::MatrixXd P = M * th.phi * M.transpose(), Q = M * th.pi * M.transpose();
  const auto d = boundary_spectrum(s1);
  for (int i = 0; i < s1.V(); ++i) {
    const double di = d[fourier_row_momentum(s1.V(), i)];
    const double c = 1.0 / std::tanh(beta * di);
    EXPECT_NEAR(std::sqrt(P(i, i) * Q(i, i)), 0.5 * c, 1e-9);
  }
  EXPECT_GT(entropy_bits(th.gamma()), 0.0);
}

TEST_F(BulkStates, BasisInvariance) {
  auto s1 = spec;
  s1.m0 = 0.7;
  const auto bd = thermal_covariance(boundary_coupling(s1), 2.0, ZeroModePolicy::deflated());
  const auto bk = thermal_covariance(bulk(0.7), 2.0, ZeroModePolicy::deflated());
  EXPECT_NEAR(purity(bd.gamma()), purity(bk.gamma()), 1e-8);
  EXPECT_NEAR(entropy_bits(bd.gamma()), entropy_bits(bk.gamma()), 1e-7);
}

TEST_F(BulkStates, EntropyMonotoneInTemperature) {
  const auto K = bulk(0.5);
  const std::vector<int> A = {3, 11, 12, 40, 41, 77};
  double prev = 1e300;
  for (double beta : {0.1, 0.3, 1.0, 3.0, 10.0, 30.0}) {
    const double S = entropy_bits(reduced_covariance(thermal_covariance(K, beta, ZeroModePolicy::deflated()), A));
    EXPECT_LE(S, prev + 1e-12) << beta;
    prev = S;
  }
}

TEST_F(BulkStates, RandomSubsystemsProperty) {
  std::mt19937_64 rng(1234);
  const auto st = ground_covariance(bulk(0.3), ZeroModePolicy::deflated());
  std::uniform_int_distribution<int> pick(0, spec.V() - 1), size(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> A;
    const int k = size(rng);
    while (static_cast<int>(A.size()) < k) {
      const int m = pick(rng);
      if (std::find(A.begin(), A.end(), m) == A.end()) A.push_back(m);
    }
    const auto gA = reduced_covariance(st, A);
    const auto sig = symplectic_spectrum(gA);
    ASSERT_EQ(static_cast<int>(sig.size()), k);
    EXPECT_GE(sig.front(), 0.5 - 1e-6);
    EXPECT_GE(gA.determinant(), std::pow(4.0, -k) * (1.0 - 1e-8));
    const double p = purity(gA);
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0 + 1e-9);
  }
}

TEST_F(BulkStates, ReducedCovariance) {
  auto s1 = spec;
  s1.m0 = 1.0;
  const auto st = ground_covariance(boundary_coupling(s1), ZeroModePolicy::none());
  EXPECT_EQ(max_abs(reduced_covariance(st, range(0, s1.V())) - st.gamma()), 0.0);
  const auto one = reduced_covariance(st, std::vector<int>{5});
  ASSERT_EQ(one.rows(), 2);
  EXPECT_EQ(one(0, 1), 0.0);
  EXPECT_GE(one(0, 0) * one(1, 1), 0.25);
  EXPECT_EQ(code_of([&] { reduced_covariance(st, std::vector<int>{80}); }),
            ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { reduced_covariance(st, std::vector<int>{}); }),
            ErrorCode::InvalidArgument);
  const auto bk = ground_covariance(bulk(1.0), ZeroModePolicy::none());
  const auto byMode = reduced_covariance(bk, std::vector<ModeIndex>{ModeIndex::wavelet(2, 7)});
  const auto byFlat = reduced_covariance(bk, std::vector<int>{flat_index(spec, ModeIndex::wavelet(2, 7))});
  EXPECT_EQ(max_abs(byMode - byFlat), 0.0);
}

TEST(Symplectic, FormAndClosedForms) {
  const auto Om = symplectic_form(3);
  EXPECT_LT(max_abs(Om * Om + Eigen::MatrixXd::Identity(6, 6)), 1e-15);
  EXPECT_LT(max_abs(Om.transpose() + Om), 1e-15);

  EXPECT_NEAR(symplectic_spectrum(0.5 * Eigen::MatrixXd::Identity(2, 2))[0], 0.5, 1e-15);
  const double beta = 0.8, d = 1.7, c = 1.0 / std::tanh(beta * d);
  Eigen::MatrixXd th(2, 2);
  th << c / (2 * d), 0, 0, c * d / 2;
  EXPECT_NEAR(symplectic_spectrum(th)[0], c / 2, 1e-12);
  EXPECT_NEAR(purity(th), 1.0 / c, 1e-12);
  EXPECT_NEAR(entropy_bits(1.5 * Eigen::MatrixXd::Identity(2, 2)), 2.0, 1e-12);
  EXPECT_NEAR(purity(0.5 * Eigen::MatrixXd::Identity(4, 4)), 1.0, 1e-12);
  EXPECT_EQ(code_of([] { symplectic_spectrum(0.1 * Eigen::MatrixXd::Identity(2, 2)); }),
            ErrorCode::NonPhysical);
}

TEST(Symplectic, TwoModeBlockDiagonalClosedForm) {
  // sigma^2 are the eigenvalues of P Q for block-diagonal two-mode states.
  Eigen::Matrix2d P, Q;
  P << 0.9, 0.2, 0.2, 0.7;
  Q << 0.6, -0.1, -0.1, 0.8;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
  g.topLeftCorner(2, 2) = P;
  g.bottomRightCorner(2, 2) = Q;
  const Eigen::Matrix2d PQ = P * Q;
  const double tr = PQ.trace(), det = PQ.determinant();
  const double disc = std::sqrt(tr * tr / 4 - det);
  const auto sig = symplectic_spectrum(g);
  EXPECT_NEAR(sig[0], std::sqrt(tr / 2 - disc), 1e-12);
  EXPECT_NEAR(sig[1], std::sqrt(tr / 2 + disc), 1e-12);
  // Generic and cancellation-free MI agree where both are accurate.
  EXPECT_NEAR(two_mode_mutual_information(0.9, 0.6, 0.7, 0.8, 0.2, -0.1),
              mutual_information_generic(g), 1e-12);
  EXPECT_NEAR(two_mode_mutual_information(0.9, 0.6, 0.7, 0.8, 0.0, 0.0), 0.0, 1e-15);
}

TEST(MutualInformation, ProductStateAndTinyCorrelations) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(4, 4);
  g.diagonal() << 0.6, 1.1, 0.5, 0.4;
  EXPECT_NEAR(mutual_information_generic(g), 0.0, 1e-9);
  double prev = 1e300;
  for (double x : {1e-3, 1e-5, 1e-7, 1e-9}) {
    const double I = two_mode_mutual_information(0.9, 0.6, 0.7, 0.8, x, -x);
    EXPECT_GT(I, 0.0);
    EXPECT_LT(I, prev);
    prev = I;
  }
}

TEST_F(BulkStates, MutualInformationNonNegative) {
  const auto st = ground_covariance(bulk(0.0), ZeroModePolicy::deflated());
  for (int a = 10; a < spec.V(); a += 7)
    for (int b = a + 1; b < spec.V(); b += 5) EXPECT_GE(mutual_information(st, a, b), 0.0);
  EXPECT_EQ(code_of([&] { mutual_information(st, 3, 3); }), ErrorCode::InvalidArgument);
  EXPECT_NEAR(mutual_information(st, ModeIndex::wavelet(1, 0), ModeIndex::wavelet(1, 4)),
              mutual_information(st, flat_index(spec, ModeIndex::wavelet(1, 0)),
                                 flat_index(spec, ModeIndex::wavelet(1, 4))),
              0.0);
}

TEST(CentralCharge, RegularizedDenseAndStability) {
  const auto spec = LatticeSpec::make(3, 10, 7);
  const double d1 = boundary_spectrum(spec)[1];
  std::vector<double> cs;
  for (double f : {1e-4, 1e-6, 1e-8}) {
    const auto st = boundary_correlators(spec, ZeroModePolicy::regularized(d1 * f)).to_state();
    cs.push_back(central_charge(st, 3, 6));
  }
  EXPECT_NEAR(cs[1], 0.997, 0.01);
  EXPECT_NEAR(cs[1], 1.0, 0.02);
  EXPECT_LT(std::abs(cs[0] - cs[2]), 1e-3);
  const auto st = boundary_correlators(spec, ZeroModePolicy::regularized(d1 * 1e-6)).to_state();
  EXPECT_EQ(code_of([&] { central_charge(st, 3, 3); }), ErrorCode::InvalidArgument);
  // Purity decays with the interval as a power with exponent near c/4.
  const double p3 = std::exp(-0.5 * interval_log_det(st, 3)) / 8.0;
  const double p6 = std::exp(-0.5 * interval_log_det(st, 6)) / 64.0;
  const double c = -4.0 * std::log(p6 / p3) / std::log(2.0);
  EXPECT_NEAR(c, cs[1], 1e-9);
}

}  // namespace
}  // namespace holomap
