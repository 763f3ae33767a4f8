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


#include "holomap/circuit.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "holomap/error.hpp"

namespace holomap {

namespace {

using nlohmann::json;

void rotate_rows(Eigen::MatrixXd &M, int a, int b, double c, double s) {
  Eigen::RowVectorXd ra = M.row(a), rb = M.row(b);
  M.row(a) = c * ra - s * rb;
  M.row(b) = s * ra + c * rb;
}

json matrix_to_json(const Eigen::MatrixXd &M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json &rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto &row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::DimensionMismatch, "interferometer matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) M(i, j) = row.at(static_cast<std::size_t>(j)).get<double>();
  }
  return M;
}

Eigen::MatrixXd interferometer_of(const Gate &g) {
  if (g.matrix.size() > 0) return g.matrix;
  if (g.givens) return g.givens->compose();
  throw Error(ErrorCode::InvalidArgument, "interferometer gate without matrix or givens list");
}

}  // namespace

const char *to_string(Target t) { return t == Target::Boundary ? "boundary" : "bulk"; }

const char *to_string(StateKind k) { return k == StateKind::Ground ? "ground" : "thermal"; }

Eigen::MatrixXd GivensDecomposition::compose() const {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) M(i, i) = signs[i];
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it)
    rotate_rows(M, it->a, it->b, std::cos(it->theta), std::sin(it->theta));
  return M;
}

GivensDecomposition givens_decompose(const Eigen::MatrixXd &M) {
  const auto n = static_cast<int>(M.rows());
  if (M.cols() != n) throw Error(ErrorCode::NotOrthogonal, "matrix is not square");
  if ((M * M.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-8)
    throw Error(ErrorCode::NotOrthogonal, "matrix is not orthogonal within 1e-8");
  GivensDecomposition out;
  out.dim = n;
  Eigen::MatrixXd Q = M;
  // Zero the subdiagonal column by column with adjacent-plane rotations,
  // applying G^T from the left: Q_final = G_N^T ... G_1^T M.
  for (int c = 0; c + 1 < n; ++c)
    for (int r = n - 1; r > c; --r) {
      if (std::abs(Q(r, c)) < 1e-15) continue;
      const double theta = std::atan2(Q(r, c), Q(r - 1, c));
      rotate_rows(Q, r - 1, r, std::cos(theta), -std::sin(theta));
      Q(r, c) = 0.0;
      out.rotations.push_back({r - 1, r, theta});
    }
  out.signs.resize(n);
  for (int i = 0; i < n; ++i) out.signs[i] = Q(i, i) < 0.0 ? -1.0 : 1.0;
  return out;
}

Gate Gate::thermal_init(int mode, double temperature) {
  Gate g;
  g.type = GateType::ThermalInit;
  g.mode = mode;
  g.value = temperature;
  return g;
}

Gate Gate::squeeze(int mode, double alpha) {
  Gate g;
  g.type = GateType::Squeeze;
  g.mode = mode;
  g.value = alpha;
  return g;
}

Gate Gate::interferometer(Eigen::MatrixXd U, bool with_givens) {
  Gate g;
  g.type = GateType::Interferometer;
  if (with_givens) g.givens = givens_decompose(U);
  g.matrix = std::move(U);
  return g;
}

double squeeze_db(double alpha) { return 20.0 * alpha * std::log10(std::numbers::e); }

SqueezingParams squeezing_params(const LatticeSpec &spec) {
  const auto d = boundary_spectrum(spec);
  const int V = spec.V();
  SqueezingParams p;
  double amax = 0.0;
  for (int i = 0; i < V; ++i) {
    const double di = d[fourier_row_momentum(V, i)];
    if (di == 0.0) {
      p.zero_mode_excluded = true;
      continue;
    }
    const double a = -0.25 * std::log(di);
    p.modes.push_back(i);
    p.alpha.push_back(a);
    amax = std::max(amax, std::abs(a));
  }
  p.max_db = squeeze_db(amax);
  return p;
}

CircuitProgram emit_program(const LatticeSpec &spec, Target target, StateKind kind,
                            std::optional<double> beta, bool with_givens) {
  spec.validate();
  if (kind == StateKind::Thermal && !(beta && *beta > 0.0))
    throw Error(ErrorCode::InvalidArgument, "thermal programs need beta > 0");
  const int V = spec.V();
  const auto d = boundary_spectrum(spec);
  const SqueezingParams sq = squeezing_params(spec);

  CircuitProgram prog;
  prog.modes = V;
  prog.target = target;
  prog.state_kind = kind;
  if (kind == StateKind::Thermal) prog.beta = beta;
  prog.max_squeeze_db = sq.max_db;
  prog.zero_mode_excluded = sq.zero_mode_excluded;
  prog.K = spec.K();
  prog.L = spec.L;
  prog.n = spec.n;
  prog.m0 = spec.m0;

  if (kind == StateKind::Thermal)
    for (int i : sq.modes)
      prog.gates.push_back(Gate::thermal_init(i, 1.0 / (*beta * d[fourier_row_momentum(V, i)])));
  for (std::size_t k = 0; k < sq.modes.size(); ++k)
    prog.gates.push_back(Gate::squeeze(sq.modes[k], sq.alpha[k]));

  // Normal modes are the rows of M_bd; the interferometer maps them onto the
  // boundary sites, or on through M_bk onto the bulk modes.
  Eigen::MatrixXd U = boundary_fourier_matrix(V).transpose();
  if (target == Target::Bulk) U = wavelet_transform_matrix(spec) * U;
  prog.gates.push_back(Gate::interferometer(std::move(U), with_givens));
  return prog;
}

SimulatedCovariance simulate(const CircuitProgram &program) {
  const int V = program.modes;
  SimulatedCovariance s;
  s.qq = 0.5 * Eigen::MatrixXd::Identity(V, V);
  s.pp = 0.5 * Eigen::MatrixXd::Identity(V, V);
  for (const Gate &g : program.gates) {
    switch (g.type) {
      case GateType::ThermalInit: {
        if (g.mode < 0 || g.mode >= V) throw Error(ErrorCode::IndexOutOfRange, "gate mode");
        const double v = 0.5 / std::tanh(1.0 / g.value);
        s.qq(g.mode, g.mode) = v;
        s.pp(g.mode, g.mode) = v;
        break;
      }
      case GateType::Squeeze: {
        if (g.mode < 0 || g.mode >= V) throw Error(ErrorCode::IndexOutOfRange, "gate mode");
        const double up = std::exp(2.0 * g.value);
        s.qq.row(g.mode) *= up;
        s.qq.col(g.mode) *= up;
        s.pp.row(g.mode) /= up;
        s.pp.col(g.mode) /= up;
        break;
      }
      case GateType::Interferometer: {
        const Eigen::MatrixXd U = interferometer_of(g);
        if (U.rows() != V) throw Error(ErrorCode::DimensionMismatch, "interferometer size");
        s.qq = U * s.qq * U.transpose();
        s.pp = U * s.pp * U.transpose();
        break;
      }
    }
  }
  return s;
}

Eigen::MatrixXd program_symplectic(const CircuitProgram &program) {
  const int V = program.modes;
  Eigen::MatrixXd Y = Eigen::MatrixXd::Identity(2 * V, 2 * V);
  for (const Gate &g : program.gates) {
    if (g.type == GateType::Squeeze) {
      const double up = std::exp(2.0 * g.value);
      Y.row(g.mode) *= up;
      Y.row(V + g.mode) /= up;
    } else if (g.type == GateType::Interferometer) {
      const Eigen::MatrixXd U = interferometer_of(g);
      Y.topRows(V) = (U * Y.topRows(V)).eval();
      Y.bottomRows(V) = (U * Y.bottomRows(V)).eval();
    }
  }
  return Y;
}

std::string to_json(const CircuitProgram &p, int indent) {
  json j;
  j["version"] = p.version;
  j["modes"] = p.modes;
  j["target"] = to_string(p.target);
  j["state_kind"] = to_string(p.state_kind);
  if (p.beta) j["beta"] = *p.beta;
  json gates = json::array();
  for (const Gate &g : p.gates) {
    json o;
    switch (g.type) {
      case GateType::ThermalInit:
        o = {{"type", "thermal_init"}, {"mode", g.mode}, {"temperature", g.value}};
        break;
      case GateType::Squeeze:
        o = {{"type", "squeeze"}, {"mode", g.mode}, {"alpha", g.value}};
        break;
      case GateType::Interferometer:
        o["type"] = "interferometer";
        if (g.matrix.size() > 0) o["matrix"] = matrix_to_json(g.matrix);
        if (g.givens) {
          json rot = json::array();
          for (const auto &r : g.givens->rotations) rot.push_back({r.a, r.b, r.theta});
          o["givens"] = {{"rotations", rot}, {"signs", g.givens->signs}};
        }
        break;
    }
    gates.push_back(std::move(o));
  }
  j["gates"] = std::move(gates);
  j["metadata"] = {{"max_squeeze_db", p.max_squeeze_db},
                   {"zero_mode_excluded", p.zero_mode_excluded},
                   {"gate_order", "application"},
                   {"K", p.K},
                   {"L", p.L},
                   {"n", p.n},
                   {"m0", p.m0}};
  return j.dump(indent);
}

CircuitProgram program_from_json(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::InvalidArgument, std::string("circuit JSON: ") + e.what());
  }
  try {
    CircuitProgram p;
    p.version = j.at("version").get<int>();
    p.modes = j.at("modes").get<int>();
    const auto target = j.at("target").get<std::string>();
    if (target != "boundary" && target != "bulk")
      throw Error(ErrorCode::InvalidArgument, "unknown target " + target);
    p.target = target == "boundary" ? Target::Boundary : Target::Bulk;
    const auto kind = j.at("state_kind").get<std::string>();
    if (kind != "ground" && kind != "thermal")
      throw Error(ErrorCode::InvalidArgument, "unknown state_kind " + kind);
    p.state_kind = kind == "ground" ? StateKind::Ground : StateKind::Thermal;
    if (j.contains("beta")) p.beta = j["beta"].get<double>();
    for (const auto &o : j.at("gates")) {
      const auto type = o.at("type").get<std::string>();
      if (type == "thermal_init") {
        p.gates.push_back(Gate::thermal_init(o.at("mode").get<int>(), o.at("temperature").get<double>()));
      } else if (type == "squeeze") {
        p.gates.push_back(Gate::squeeze(o.at("mode").get<int>(), o.at("alpha").get<double>()));
      } else if (type == "interferometer") {
        Gate g;
        g.type = GateType::Interferometer;
        if (o.contains("matrix")) g.matrix = matrix_from_json(o["matrix"]);
        if (o.contains("givens")) {
          GivensDecomposition gd;
          gd.dim = p.modes;
          for (const auto &r : o["givens"].at("rotations"))
            gd.rotations.push_back({r.at(0).get<int>(), r.at(1).get<int>(), r.at(2).get<double>()});
          gd.signs = o["givens"].at("signs").get<std::vector<double>>();
          if (static_cast<int>(gd.signs.size()) != p.modes)
            throw Error(ErrorCode::DimensionMismatch, "givens signs size");
          g.givens = std::move(gd);
        }
        p.gates.push_back(std::move(g));
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown gate type " + type);
      }
    }
    const auto &meta = j.at("metadata");
    p.max_squeeze_db = meta.at("max_squeeze_db").get<double>();
    p.zero_mode_excluded = meta.at("zero_mode_excluded").get<bool>();
    p.K = meta.value("K", 0);
    p.L = meta.value("L", 0);
    p.n = meta.value("n", 0);
    p.m0 = meta.value("m0", 0.0);
    return p;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::InvalidArgument, std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace holomap
