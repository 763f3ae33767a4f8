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
#include <functional>
#include <numbers>

#include <gtest/gtest.h>
#include <json.hpp>

#include "holomap/circuit.hpp"
#include "holomap/error.hpp"
#include "holomap/gaussian.hpp"
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

Eigen::MatrixXd rotation(double phi) {
  Eigen::MatrixXd R(2, 2);
  R << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return R;
}

TEST(Squeezing, Parameters) {
  const auto one = squeezing_params(LatticeSpec::make(3, 10, 3, 1.0));
  EXPECT_FALSE(one.zero_mode_excluded);
  ASSERT_EQ(one.modes.size(), 80u);
  EXPECT_NEAR(one.alpha[0], 0.0, 1e-15);  // d_0 = m0 = 1
  for (double a : squeezing_params(LatticeSpec::make(3, 10, 3, 5.0)).alpha) EXPECT_LT(a, 0.0);

  for (int n = 3; n <= 5; ++n) {
    const auto p = squeezing_params(LatticeSpec::make(3, 10, n));
    EXPECT_TRUE(p.zero_mode_excluded);
    EXPECT_EQ(p.modes.size(), static_cast<std::size_t>((10 << n) - 1));
    EXPECT_EQ(p.modes.front(), 1);
    const double amax = 0.25 * std::log((10 << n) / (2.0 * std::numbers::pi));
    EXPECT_NEAR(p.max_db, squeeze_db(amax), 1e-4) << n;
  }
  EXPECT_NEAR(squeezing_params(LatticeSpec::make(3, 10, 4)).max_db, 7.03, 0.01);
  EXPECT_NEAR(squeeze_db(1.0), 20.0 / std::numbers::ln10, 1e-14);
}

TEST(Givens, TrivialCases) {
  EXPECT_TRUE(givens_decompose(Eigen::MatrixXd::Identity(5, 5)).rotations.empty());
  const double phi = 0.7;
  const auto g = givens_decompose(rotation(phi));
  ASSERT_EQ(g.rotations.size(), 1u);
  EXPECT_EQ(g.rotations[0].a, 0);
  EXPECT_EQ(g.rotations[0].b, 1);
  EXPECT_NEAR(g.rotations[0].theta, phi, 1e-15);
  EXPECT_EQ(g.signs, (std::vector<double>{1.0, 1.0}));
  EXPECT_LT(max_abs(g.compose() - rotation(phi)), 1e-15);
}

TEST(Givens, RecomposesWaveletTransform) {
  const auto M = wavelet_transform_matrix(LatticeSpec::make(3, 10, 2));
  const auto g = givens_decompose(M);
  const auto V = static_cast<std::size_t>(M.rows());
  EXPECT_LE(g.rotations.size(), V * (V - 1) / 2);
  EXPECT_LT(max_abs(g.compose() - M), 1e-8);
  // Reflections survive as sign flips.
  Eigen::MatrixXd F = M;
  F.row(3) *= -1.0;
  EXPECT_LT(max_abs(givens_decompose(F).compose() - F), 1e-8);
}

TEST(Givens, RejectsNonOrthogonal) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(3, 3);
  A(0, 1) = 1e-6;
  EXPECT_EQ(code_of([&] { givens_decompose(A); }), ErrorCode::NotOrthogonal);
  EXPECT_EQ(code_of([] { givens_decompose(Eigen::MatrixXd::Ones(2, 3)); }), ErrorCode::NotOrthogonal);
}

TEST(Emit, GroundProgramShape) {
  const auto spec = LatticeSpec::make(3, 10, 3);
  const auto p = emit_program(spec, Target::Bulk, StateKind::Ground, std::nullopt, false);
  EXPECT_EQ(p.modes, 80);
  EXPECT_TRUE(p.zero_mode_excluded);
  ASSERT_EQ(p.gates.size(), 80u);  // 79 squeezers and one interferometer
  for (std::size_t i = 0; i + 1 < p.gates.size(); ++i) EXPECT_EQ(p.gates[i].type, GateType::Squeeze);
  const Gate &u = p.gates.back();
  ASSERT_EQ(u.type, GateType::Interferometer);
  EXPECT_FALSE(u.givens.has_value());
  EXPECT_LT(max_abs(u.matrix * u.matrix.transpose() - Eigen::MatrixXd::Identity(80, 80)), 1e-10);
}

TEST(Emit, ThermalTemperatures) {
  const auto spec = LatticeSpec::make(3, 10, 3, 1.0);
  const double beta = 0.5;
  const auto p = emit_program(spec, Target::Boundary, StateKind::Thermal, beta, false);
  const auto d = boundary_spectrum(spec);
  int inits = 0;
  for (const Gate &g : p.gates)
    if (g.type == GateType::ThermalInit) {
      ++inits;
      EXPECT_NEAR(g.value, 1.0 / (beta * d[fourier_row_momentum(80, g.mode)]), 1e-14);
    }
  EXPECT_EQ(inits, 80);
  EXPECT_EQ(p.gates.front().type, GateType::ThermalInit);
  EXPECT_EQ(code_of([&] { emit_program(spec, Target::Boundary, StateKind::Thermal, std::nullopt, false); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { emit_program(spec, Target::Boundary, StateKind::Thermal, -1.0, false); }),
            ErrorCode::InvalidArgument);
}

TEST(Simulate, MassiveGroundAndSymplecticFactor) {
  const auto spec = LatticeSpec::make(4, 14, 2, 0.5);
  const auto tables = compute_overlap_tables(spec.family, spec.L, spec.n);
  for (Target t : {Target::Boundary, Target::Bulk}) {
    const auto p = emit_program(spec, t, StateKind::Ground, std::nullopt, false);
    const auto K = t == Target::Boundary ? boundary_coupling(spec) : bulk_coupling(spec, tables);
    const auto ref = ground_covariance(K, ZeroModePolicy::none());
    const auto sim = simulate(p);
    EXPECT_LT(std::max(max_abs(sim.qq - ref.phi), max_abs(sim.pp - ref.pi)), 1e-8);
    const auto Y = program_symplectic(p);
    EXPECT_LT(max_abs(0.5 * Y * Y.transpose() - ref.gamma()), 1e-8);
    const auto Om = symplectic_form(spec.V());
    EXPECT_LT(max_abs(Y * Om * Y.transpose() - Om), 1e-9);
  }
}

TEST(Json, RoundTrip) {
  const auto spec = LatticeSpec::make(3, 10, 2, 1.0);
  const auto p = emit_program(spec, Target::Bulk, StateKind::Thermal, 0.5, true);
  const std::string text = to_json(p);
  const auto j = nlohmann::json::parse(text);
  for (const char *key : {"version", "modes", "target", "state_kind", "beta", "gates", "metadata"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["target"], "bulk");
  EXPECT_EQ(j["state_kind"], "thermal");
  EXPECT_TRUE(j["metadata"].contains("max_squeeze_db"));
  EXPECT_TRUE(j["metadata"].contains("zero_mode_excluded"));
  EXPECT_EQ(j["gates"][0]["type"], "thermal_init");

  const auto q = program_from_json(text);
  ASSERT_EQ(q.gates.size(), p.gates.size());
  for (std::size_t i = 0; i < p.gates.size(); ++i) {
    EXPECT_EQ(q.gates[i].type, p.gates[i].type);
    EXPECT_EQ(q.gates[i].mode, p.gates[i].mode);
    EXPECT_EQ(q.gates[i].value, p.gates[i].value);  // full precision survives
  }
  EXPECT_EQ(max_abs(q.gates.back().matrix - p.gates.back().matrix), 0.0);
  EXPECT_EQ(to_json(q), text);

  // A program carrying only the Givens list is recomposed on the fly.
  auto jj = j;
  jj["gates"].back().erase("matrix");
  const auto r = program_from_json(jj.dump());
  const auto a = simulate(p), b = simulate(r);
  EXPECT_LT(std::max(max_abs(a.qq - b.qq), max_abs(a.pp - b.pp)), 1e-10);
}

TEST(Json, Errors) {
  EXPECT_EQ(code_of([] { program_from_json("{not json"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { program_from_json(R"({"version":1})"); }), ErrorCode::InvalidArgument);
  const auto p = emit_program(LatticeSpec::make(3, 10, 1), Target::Boundary, StateKind::Ground,
                              std::nullopt, false);
  auto j = nlohmann::json::parse(to_json(p));
  j["gates"][0]["type"] = "beamsplitter";
  EXPECT_EQ(code_of([&] { program_from_json(j.dump()); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace holomap
