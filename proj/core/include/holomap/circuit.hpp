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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holomap/lattice.hpp"

namespace holomap {

enum class Target { Boundary, Bulk };
enum class StateKind { Ground, Thermal };

const char *to_string(Target t);
const char *to_string(StateKind k);

// Rotation in the (a, b) plane: [a][a] = cos, [a][b] = -sin, [b][a] = sin,
// [b][b] = cos.
struct GivensRotation {
  int a = 0;
  int b = 0;
  double theta = 0.0;
};

// M = G_1 G_2 ... G_N diag(signs).
struct GivensDecomposition {
  int dim = 0;
  std::vector<GivensRotation> rotations;
  std::vector<double> signs;

  Eigen::MatrixXd compose() const;
};

GivensDecomposition givens_decompose(const Eigen::MatrixXd &M);

enum class GateType { ThermalInit, Interferometer, Squeeze };

struct Gate {
  GateType type = GateType::Squeeze;
  int mode = -1;
  double value = 0.0;  // temperature for ThermalInit, alpha for Squeeze
  Eigen::MatrixXd matrix;
  std::optional<GivensDecomposition> givens;

  static Gate thermal_init(int mode, double temperature);
  static Gate squeeze(int mode, double alpha);
  static Gate interferometer(Eigen::MatrixXd U, bool with_givens);
};

// alpha_j = -1/4 ln d_j per normal mode (rows of the Fourier matrix); the
// massless zero mode is left out.
struct SqueezingParams {
  std::vector<int> modes;
  std::vector<double> alpha;
  bool zero_mode_excluded = false;
  double max_db = 0.0;
};

SqueezingParams squeezing_params(const LatticeSpec &spec);
double squeeze_db(double alpha);

// Gates are stored in application order: gates.front() acts first.
struct CircuitProgram {
  int version = 1;
  int modes = 0;
  Target target = Target::Boundary;
  StateKind state_kind = StateKind::Ground;
  std::optional<double> beta;
  std::vector<Gate> gates;
  double max_squeeze_db = 0.0;
  bool zero_mode_excluded = false;
  int K = 0, L = 0, n = 0;
  double m0 = 0.0;
};

CircuitProgram emit_program(const LatticeSpec &spec, Target target, StateKind kind,
                            std::optional<double> beta = std::nullopt, bool with_givens = false);

// Verification oracle: covariance update rules for the three gate kinds,
// starting from the vacuum (1/2) I.
struct SimulatedCovariance {
  Eigen::MatrixXd qq;
  Eigen::MatrixXd pp;
};

SimulatedCovariance simulate(const CircuitProgram &program);

// Total symplectic matrix Y of the non-thermal gates, (q, p) ordering.
Eigen::MatrixXd program_symplectic(const CircuitProgram &program);

std::string to_json(const CircuitProgram &program, int indent = 2);
CircuitProgram program_from_json(const std::string &text);

}  // namespace holomap
