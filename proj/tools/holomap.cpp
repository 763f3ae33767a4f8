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


// holomap command-line tool. Every analysis is a subcommand writing CSV or
// JSON to stdout or --out. Exit codes: 0 success, 1 bad input, 2 numerical
// failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holomap/circuit.hpp"
#include "holomap/error.hpp"
#include "holomap/gaussian.hpp"
#include "holomap/holography.hpp"
#include "holomap/lattice.hpp"
#include "holomap/overlaps.hpp"
#include "holomap/wavelets.hpp"

namespace {

using namespace holomap;
using nlohmann::json;

struct RunConfig {
  int K = 3;
  int L = 10;
  int n = 3;
  double m0 = 0.0;
  std::optional<double> beta;
  std::string policy = "deflated";
  double epsilon = 0.0;
  int J = 12;
  std::string out;
  std::string format = "csv";

  LatticeSpec spec() const { return LatticeSpec::make(K, L, n, m0); }
};

// --- tabular output ------------------------------------------------------

using Cell = std::variant<std::monostate, long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_cell(const Cell &c) {
  if (std::holds_alternative<long>(c)) return std::to_string(std::get<long>(c));
  if (std::holds_alternative<double>(c)) return fmt_double(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

json json_cell(const Cell &c) {
  if (std::holds_alternative<long>(c)) return std::get<long>(c);
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

class Sink {
 public:
  explicit Sink(const RunConfig &cfg, const std::string &stem) {
    if (cfg.out.empty()) return;
    std::filesystem::path p = cfg.out;
    if (std::filesystem::is_directory(p)) p /= stem + "." + cfg.format;
    file_.open(p);
    if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open " + p.string());
  }
  std::ostream &os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const RunConfig &cfg, const std::string &stem, const Table &t,
          const json &meta = json::object()) {
  Sink sink(cfg, stem);
  auto &os = sink.os();
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto &r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) o[t.columns[i]] = json_cell(r[i]);
      rows.push_back(std::move(o));
    }
    json doc = meta;
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto &r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << "\n";
  }
}

json spec_json(const RunConfig &cfg) {
  json j = {{"K", cfg.K}, {"L", cfg.L}, {"n", cfg.n}, {"m0", cfg.m0}};
  if (cfg.beta) j["beta"] = *cfg.beta;
  return j;
}

// --- shared helpers ----------------------------------------------------

ZeroModePolicy policy_of(const RunConfig &cfg, const LatticeSpec &spec) {
  if (cfg.policy == "none") return ZeroModePolicy::none();
  if (cfg.policy == "deflated") return ZeroModePolicy::deflated();
  if (cfg.policy == "regularized") {
    if (cfg.epsilon > 0.0) return ZeroModePolicy::regularized(cfg.epsilon);
    auto s0 = spec;
    s0.m0 = 0.0;
    return ZeroModePolicy::regularized(boundary_spectrum(s0)[1] * 1e-6);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown policy " + cfg.policy);
}

int default_scale(const RunConfig &cfg, std::optional<int> r) { return r ? *r : cfg.n - 1; }

int default_jmax(const RunConfig &cfg, int r, std::optional<int> jmax) {
  if (jmax) return *jmax;
  return std::max(1, std::min(40, (cfg.L << r) / 4));
}

Eigen::MatrixXd toeplitz(const std::vector<double> &g, int ell) {
  Eigen::MatrixXd M(ell, ell);
  for (int a = 0; a < ell; ++a)
    for (int b = 0; b < ell; ++b) M(a, b) = g[std::abs(a - b)];
  return M;
}

// --- subcommands -------------------------------------------------------

void run_overlaps(const RunConfig &cfg) {
  const auto spec = cfg.spec();
  const auto tables = compute_overlap_tables(spec.family, spec.L, spec.n);
  Table t{{"class", "l", "j", "a", "b", "value"}, {}};
  for (std::size_t m = 0; m < tables.dss.size(); ++m)
    t.add({std::string("ss"), 0L, 0L, 0L, long(m), tables.dss[m]});
  for (std::size_t l = 0; l < tables.dsw.size(); ++l) {
    const auto &D = tables.dsw[l];
    for (Eigen::Index a = 0; a < D.rows(); ++a)
      for (Eigen::Index b = 0; b < D.cols(); ++b)
        if (D(a, b) != 0.0) t.add({std::string("sw"), long(l), 0L, long(a), long(b), D(a, b)});
  }
  for (const auto &[key, D] : tables.dww)
    for (Eigen::Index a = 0; a < D.rows(); ++a)
      for (Eigen::Index b = 0; b < D.cols(); ++b)
        if (D(a, b) != 0.0)
          t.add({std::string("ww"), long(key.first), long(key.second), long(a), long(b), D(a, b)});
  emit(cfg, "overlaps", t, {{"spec", spec_json(cfg)}});
}

void run_spectrum(const RunConfig &cfg) {
  const auto spec = cfg.spec();
  const auto d = boundary_spectrum(spec);
  Table t{{"j", "k", "d"}, {}};
  for (int j = 0; j < spec.V(); ++j)
    t.add({long(j), 2.0 * std::numbers::pi * j / spec.V(), d[j]});
  emit(cfg, "spectrum", t, {{"spec", spec_json(cfg)}});
}

struct CorrelationOpts {
  std::optional<int> r, jmax;
  bool boundary = false, temporal = false, sampled = false;
  double tau_step = 1.0;
};

void run_correlations(const RunConfig &cfg, const CorrelationOpts &o) {
  const auto spec = cfg.spec();
  const int r = default_scale(cfg, o.r);
  const auto meta = json{{"spec", spec_json(cfg)}, {"r", r}};
  if (o.temporal) {
    Table t{{"tau", "exact", "asymptotic"}, {}};
    const double threshold = std::exp2(spec.n - r) * (2 * spec.K() - 1);
    const double hi = static_cast<double>(spec.L << std::max(spec.n - 2, 0));
    for (double tau = o.tau_step; tau <= hi + 1e-9; tau += o.tau_step) {
      Cell asym;
      if (tau > threshold) asym = temporal_correlator(spec, r, 0, tau, TemporalMode::Asymptotic);
      t.add({tau, temporal_correlator(spec, r, 0, tau), asym});
    }
    emit(cfg, "correlations", t, meta);
    return;
  }
  const auto bc = boundary_correlators(spec, policy_of(cfg, spec), cfg.beta);
  if (o.boundary) {
    const int jmax = o.jmax ? *o.jmax : spec.V() / 2;
    if (jmax < 0 || jmax >= spec.V()) throw Error(ErrorCode::IndexOutOfRange, "jmax out of range");
    Table t{{"delta", "phi", "pi"}, {}};
    for (int d = 0; d <= jmax; ++d) t.add({long(d), bc.phi[d], bc.pi[d]});
    emit(cfg, "correlations", t, meta);
    return;
  }
  const int jmax = default_jmax(cfg, r, o.jmax);
  Table t{{"j", "phi", "pi", "phi_asymptotic", "pi_asymptotic"}, {}};
  std::vector<double> phi, pi;
  if (o.sampled) {
    for (int j = 0; j <= jmax; ++j) {
      phi.push_back(bulk_correlator(bc, Field::Phi, {r, 0}, {r, j}, CorrelatorMode::Sampled, cfg.J));
      pi.push_back(bulk_correlator(bc, Field::Pi, {r, 0}, {r, j}, CorrelatorMode::Sampled, cfg.J));
    }
  } else {
    phi = same_scale_row(bc, Field::Phi, r, jmax);
    pi = same_scale_row(bc, Field::Pi, r, jmax);
  }
  std::optional<ContourPropagator> G;
  if (spec.m0 > 0.0 && !cfg.beta && !o.sampled) G.emplace(spec);
  for (int j = 0; j <= jmax; ++j) {
    Cell ap, aq;
    if (j > 2 * spec.K() - 1) {
      if (spec.m0 == 0.0) {
        ap = massless_asymptotics(spec.family, spec.n, r, j, AsymptoticKind::PhiPhi);
        aq = massless_asymptotics(spec.family, spec.n, r, j, AsymptoticKind::PiPi);
      } else {
        ap = massive_asymptotics(spec.family, spec.n, r, j, spec.m0, Field::Phi, cfg.J).value;
        aq = massive_asymptotics(spec.family, spec.n, r, j, spec.m0, Field::Pi, cfg.J).value;
      }
    }
    const double p = G ? massive_bulk_correlator(spec, *G, Field::Phi, r, j) : phi[j];
    const double q = G ? massive_bulk_correlator(spec, *G, Field::Pi, r, j) : pi[j];
    t.add({long(j), p, q, ap, aq});
  }
  emit(cfg, "correlations", t, meta);
}

void run_mutual_info(const RunConfig &cfg, std::optional<int> r_opt, std::optional<int> jmax_opt,
                     bool cross) {
  const auto spec = cfg.spec();
  const auto bc = boundary_correlators(spec, policy_of(cfg, spec), cfg.beta);
  const int r = default_scale(cfg, r_opt);
  if (cross) {
    auto self = [&](int s) {
      return std::pair{bulk_correlator(bc, Field::Phi, {s, 0}, {s, 0}),
                       bulk_correlator(bc, Field::Pi, {s, 0}, {s, 0})};
    };
    const auto [P, Q] = self(r);
    Table t{{"r", "r_prime", "dr", "mi_bits"}, {}};
    for (int rp = 0; rp < r; ++rp) {
      const auto [P2, Q2] = self(rp);
      const double x = bulk_correlator(bc, Field::Phi, {r, 0}, {rp, 0});
      const double y = bulk_correlator(bc, Field::Pi, {r, 0}, {rp, 0});
      t.add({long(r), long(rp), long(r - rp), two_mode_mutual_information(P, Q, P2, Q2, x, y)});
    }
    emit(cfg, "mutual-info", t, {{"spec", spec_json(cfg)}});
    return;
  }
  const auto prof = same_scale_profile(bc, r, default_jmax(cfg, r, jmax_opt));
  Table t{{"j", "mi_bits", "phi", "pi"}, {}};
  for (std::size_t i = 0; i < prof.j.size(); ++i)
    t.add({long(prof.j[i]), prof.mi[i], prof.phi[i], prof.pi[i]});
  emit(cfg, "mutual-info", t, {{"spec", spec_json(cfg)}, {"r", r}, {"S0_bits", prof.S0}});
}

void run_entropy(const RunConfig &cfg, int lmax) {
  const auto spec = cfg.spec();
  const auto bc = boundary_correlators(spec, policy_of(cfg, spec), cfg.beta);
  Table t{{"kind", "index", "entropy_bits"}, {}};
  for (int r = 0; r < spec.n; ++r) {
    const double P = bulk_correlator(bc, Field::Phi, {r, 0}, {r, 0});
    const double Q = bulk_correlator(bc, Field::Pi, {r, 0}, {r, 0});
    t.add({std::string("wavelet_site"), long(r), entropy_from_spectrum({std::sqrt(P * Q)})});
  }
  for (int ell = 1; ell <= std::min(lmax, spec.V() - 1); ++ell) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2 * ell, 2 * ell);
    g.topLeftCorner(ell, ell) = toeplitz(bc.phi, ell);
    g.bottomRightCorner(ell, ell) = toeplitz(bc.pi, ell);
    t.add({std::string("boundary_interval"), long(ell), entropy_bits(g)});
  }
  emit(cfg, "entropy", t, {{"spec", spec_json(cfg)}});
}

void run_central_charge(RunConfig cfg, int l1, int l2, bool policy_given, bool dense) {
  // Intervals overlap the zero mode, so the default here is the regularized
  // policy with a floor of d_1 * 1e-6.
  if (!policy_given) cfg.policy = "regularized";
  const auto spec = cfg.spec();
  const auto policy = policy_of(cfg, spec);
  const auto state = dense ? (cfg.beta ? thermal_covariance(boundary_coupling(spec), *cfg.beta, policy)
                                       : ground_covariance(boundary_coupling(spec), policy))
                           : boundary_correlators(spec, policy, cfg.beta).to_state();
  const double c = central_charge(state, l1, l2);
  Table t{{"l1", "l2", "c", "policy", "epsilon"}, {}};
  t.add({long(l1), long(l2), c, cfg.policy, policy.epsilon});
  emit(cfg, "central-charge", t, {{"spec", spec_json(cfg)}});
}

void run_curvature_fit(const RunConfig &cfg, std::optional<int> r_opt) {
  const auto spec = cfg.spec();
  const auto bc = boundary_correlators(spec, policy_of(cfg, spec), cfg.beta);
  const int r = default_scale(cfg, r_opt);
  const int hi = std::min(40, (spec.L << r) / 4);
  const auto prof = same_scale_profile(bc, r, std::max(hi, 1));
  const auto fit = curvature_from_profile(prof, spec.K(), spec.L);
  const json record = {{"R", fit.R},         {"xiTheta", fit.xiTheta}, {"xiTau", fit.xiTau},
                       {"S0", fit.S0},       {"slope", fit.slope},     {"residual", fit.residual},
                       {"r", r},             {"spec", spec_json(cfg)}};
  Table t{{"j", "mi_bits", "fit"}, {}};
  for (std::size_t i = 0; i < prof.j.size(); ++i) {
    const int j = prof.j[i];
    Cell model;
    if (j > 2 * spec.K() - 1 && j <= hi)
      model = fit.S0 * std::exp(-geodesic_same_scale_approx(j, fit.R) / fit.xiTheta);
    t.add({long(j), prof.mi[i], model});
  }
  if (cfg.format == "json") {
    Sink sink(cfg, "curvature-fit");
    json doc = record;
    json rows = json::array();
    for (const auto &row : t.rows)
      rows.push_back({{"j", json_cell(row[0])}, {"mi_bits", json_cell(row[1])}, {"fit", json_cell(row[2])}});
    doc["samples"] = std::move(rows);
    sink.os() << doc.dump(2) << "\n";
    return;
  }
  emit(cfg, "curvature-fit", t);
  std::cerr << record.dump() << "\n";
}

void run_circuit(const RunConfig &cfg, const std::string &target, const std::string &state,
                 bool givens) {
  if (target != "boundary" && target != "bulk")
    throw Error(ErrorCode::InvalidArgument, "target must be boundary or bulk");
  if (state != "ground" && state != "thermal")
    throw Error(ErrorCode::InvalidArgument, "state must be ground or thermal");
  const auto prog = emit_program(cfg.spec(), target == "bulk" ? Target::Bulk : Target::Boundary,
                                 state == "thermal" ? StateKind::Thermal : StateKind::Ground,
                                 cfg.beta, givens);
  RunConfig c = cfg;
  c.format = "json";
  Sink sink(c, "circuit");
  sink.os() << to_json(prog) << "\n";
}

// Target covariance for a program and its deviation from the simulation.
double program_error(const CircuitProgram &prog) {
  const auto spec = LatticeSpec::make(prog.K, prog.L, prog.n, prog.m0);
  if (spec.V() != prog.modes) throw Error(ErrorCode::DimensionMismatch, "metadata does not match modes");
  const auto K = prog.target == Target::Bulk
                     ? bulk_coupling(spec, compute_overlap_tables(spec.family, spec.L, spec.n))
                     : boundary_coupling(spec);
  const auto ref = prog.state_kind == StateKind::Thermal
                       ? thermal_covariance(K, prog.beta.value_or(0.0), ZeroModePolicy::deflated())
                       : ground_covariance(K, ZeroModePolicy::deflated());
  auto sim = simulate(prog);
  if (prog.zero_mode_excluded) {
    // The unsqueezed zero mode leaves vacuum 1/2 along its image.
    Eigen::VectorXd v = Eigen::VectorXd::Constant(spec.V(), 1.0 / std::sqrt(double(spec.V())));
    if (prog.target == Target::Bulk) v = wavelet_transform_matrix(spec) * v;
    sim.qq -= 0.5 * v * v.transpose();
    sim.pp -= 0.5 * v * v.transpose();
  }
  return std::max((sim.qq - ref.phi).cwiseAbs().maxCoeff(), (sim.pp - ref.pi).cwiseAbs().maxCoeff());
}

struct Check {
  std::string name;
  double value;
  double tolerance;
  bool ok;
};

std::vector<Check> verify_checks(const RunConfig &cfg) {
  std::vector<Check> out;
  auto below = [&](const std::string &name, double v, double tol) {
    out.push_back({name, v, tol, std::abs(v) <= tol});
  };
  const auto spec = cfg.spec();
  const auto &f = spec.family;
  const int V = spec.V();
  double orth = 0.0;
  for (int m = 0; m < spec.K(); ++m) {
    double acc = 0.0;
    for (int i = 0; i + 2 * m < f.taps(); ++i) acc += f.h[i] * f.h[i + 2 * m];
    orth = std::max(orth, std::abs(acc - (m == 0 ? 1.0 : 0.0)));
  }
  below("filter_orthonormality", orth, 1e-10);
  const auto tables = compute_overlap_tables(f, spec.L, spec.n);
  double m2 = 0.0, sum = tables.dss[0];
  for (std::size_t m = 1; m < tables.dss.size(); ++m) {
    m2 += double(m * m) * tables.dss[m];
    sum += 2.0 * tables.dss[m];
  }
  below("dss_second_moment_plus_one", m2 + 1.0, 1e-9);
  below("dss_row_sum", sum, 1e-9);
  const auto Kbd = boundary_coupling(spec);
  const auto Kbk = bulk_coupling(spec, tables);
  const auto M = wavelet_transform_matrix(spec);
  const auto I = Eigen::MatrixXd::Identity(V, V);
  below("wavelet_transform_orthogonality", (M * M.transpose() - I).cwiseAbs().maxCoeff(), 1e-10);
  const auto F = boundary_fourier_matrix(V);
  below("fourier_orthogonality", (F * F.transpose() - I).cwiseAbs().maxCoeff(), 1e-10);
  below("ehm_identity", (Kbk.entries - M * Kbd.entries * M.transpose()).cwiseAbs().maxCoeff(), 1e-8);
  const Eigen::VectorXd e1 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Kbk.entries).eigenvalues();
  const Eigen::VectorXd e2 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Kbd.entries).eigenvalues();
  below("spectrum_equality", (e1 - e2).cwiseAbs().maxCoeff(), 1e-8);
  const auto d = boundary_spectrum(spec);
  std::vector<double> d2(d.size());
  std::transform(d.begin(), d.end(), d2.begin(), [](double x) { return x * x; });
  std::sort(d2.begin(), d2.end());
  double closed = 0.0;
  for (int i = 0; i < V; ++i) closed = std::max(closed, std::abs(e2(i) - d2[i]));
  below("closed_form_spectrum", closed, 1e-10);
  if (spec.m0 == 0.0) below("massless_d0", d[0], 1e-9);
  const auto ground = ground_covariance(Kbk, ZeroModePolicy::deflated());
  std::vector<int> sector;
  for (int i = spec.m0 == 0.0 ? spec.L : 0; i < V; ++i) sector.push_back(i);
  const auto sig = symplectic_spectrum(reduced_covariance(ground, sector));
  out.push_back({"uncertainty_min_sigma", sig.front(), 0.5 - 1e-6, sig.front() >= 0.5 - 1e-6});
  if (spec.m0 > 0.0) below("ground_state_entropy", entropy_bits(ground.gamma()), 1e-6);
  for (Target t : {Target::Boundary, Target::Bulk}) {
    const auto prog = emit_program(spec, t, StateKind::Ground, std::nullopt, false);
    below(std::string("circuit_round_trip_") + to_string(t), program_error(prog), 1e-8);
    if (cfg.beta) {
      if (spec.m0 == 0.0) continue;
      const auto th = emit_program(spec, t, StateKind::Thermal, cfg.beta, false);
      below(std::string("thermal_circuit_round_trip_") + to_string(t), program_error(th), 1e-8);
    }
  }
  return out;
}

int run_verify(const RunConfig &cfg, const std::string &simulate_path) {
  std::vector<Check> checks;
  if (!simulate_path.empty()) {
    std::ifstream in(simulate_path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + simulate_path);
    std::stringstream ss;
    ss << in.rdbuf();
    const double err = program_error(program_from_json(ss.str()));
    checks.push_back({"simulated_covariance", err, 1e-8, err <= 1e-8});
  } else {
    checks = verify_checks(cfg);
  }
  Table t{{"check", "status", "value", "tolerance"}, {}};
  bool all = true;
  for (const auto &c : checks) {
    all = all && c.ok;
    t.add({c.name, std::string(c.ok ? "PASS" : "FAIL"), c.value, c.tolerance});
  }
  emit(cfg, "verify", t);
  return all ? 0 : 2;
}

void run_transform(const RunConfig &cfg) {
  const auto M = wavelet_transform_matrix(cfg.spec());
  Sink sink(cfg, "transform");
  auto &os = sink.os();
  if (cfg.format == "json") {
    json entries = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i)
      for (Eigen::Index j = 0; j < M.cols(); ++j)
        if (M(i, j) != 0.0) entries.push_back({i, j, M(i, j)});
    json doc = {{"rows", M.rows()}, {"cols", M.cols()}, {"spec", spec_json(cfg)},
                {"entries", std::move(entries)}};
    os << doc.dump() << "\n";
    return;
  }
  for (Eigen::Index j = 0; j < M.cols(); ++j) os << (j ? "," : "") << "c" << j;
  os << "\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) os << (j ? "," : "") << fmt_double(M(i, j));
    os << "\n";
  }
}

// CLI11 wants long options to start with "--"; accept the documented -m0.
std::vector<std::string> normalize_args(int argc, char **argv) {
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) {
    std::string a = argv[i];
    if (a == "-m0" || a.rfind("-m0=", 0) == 0) a = "-" + a;
    args.push_back(std::move(a));
  }
  return args;  // reversed, as CLI11::App::parse(std::vector) expects
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"holomap: exact holographic mapping of a free boson into a Daubechies wavelet basis"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults (flags take precedence)");

  RunConfig cfg;
  double beta = 0.0;
  app.add_option("-K", cfg.K, "Daubechies order (3, 4 or 5)")->capture_default_str();
  app.add_option("-L", cfg.L, "coarsest-scale sites")->capture_default_str();
  app.add_option("-n", cfg.n, "number of scales (UV cutoff)")->capture_default_str();
  app.add_option("--m0", cfg.m0, "bare mass (also accepted as -m0)")->capture_default_str();
  auto *beta_opt = app.add_option("--beta", beta, "inverse temperature (thermal state)");
  auto *policy_opt = app.add_option("--policy", cfg.policy, "zero-mode policy")
                         ->check(CLI::IsMember({"deflated", "regularized", "none"}))
                         ->capture_default_str();
  app.add_option("--epsilon", cfg.epsilon, "frequency floor for the regularized policy (0: d_1*1e-6)");
  app.add_option("-J", cfg.J, "dyadic resolution for sampled quadratures")->capture_default_str();
  app.add_option("--out", cfg.out, "output file or directory (default stdout)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto *overlaps = app.add_subcommand("overlaps", "derivative overlap tables D^[ss], D^[sw], D^[ww]");
  auto *spectrum = app.add_subcommand("spectrum", "boundary normal-mode frequencies d_j");

  CorrelationOpts co;
  auto *corr = app.add_subcommand("correlations", "bulk or boundary two-point functions");
  corr->add_option("--r", co.r, "bulk scale (default n-1)");
  corr->add_option("--jmax", co.jmax, "largest separation");
  corr->add_flag("--boundary", co.boundary, "boundary G(delta) instead of bulk rows");
  corr->add_flag("--temporal", co.temporal, "imaginary-time self correlator at scale r");
  corr->add_flag("--sampled", co.sampled, "use the sampled-wavelet overlap approximation");
  corr->add_option("--tau-step", co.tau_step, "tau spacing for --temporal")->capture_default_str();

  std::optional<int> mi_r, mi_jmax;
  bool mi_cross = false;
  auto *mi = app.add_subcommand("mutual-info", "same-scale or cross-scale bulk mutual information");
  mi->add_option("--r", mi_r, "bulk scale (default n-1)");
  mi->add_option("--jmax", mi_jmax, "largest separation");
  mi->add_flag("--cross", mi_cross, "pairs (r,0),(r',0) for all r' < r");

  int lmax = 10;
  auto *ent = app.add_subcommand("entropy", "wavelet-site and boundary-interval entropies");
  ent->add_option("--lmax", lmax, "largest boundary interval")->capture_default_str();

  int l1 = 3, l2 = 6;
  bool dense = false;
  auto *cc = app.add_subcommand("central-charge", "central charge from two boundary intervals");
  cc->add_option("--l1", l1)->capture_default_str();
  cc->add_option("--l2", l2)->capture_default_str();
  cc->add_flag("--dense", dense, "diagonalize K_bd instead of using the FFT spectrum");

  std::optional<int> fit_r;
  auto *fit = app.add_subcommand("curvature-fit", "radius of curvature from same-scale MI");
  fit->add_option("--r", fit_r, "bulk scale (default n-1)");

  std::string target = "boundary", state = "ground";
  bool givens = false;
  auto *circ = app.add_subcommand("circuit", "Gaussian circuit program as JSON");
  circ->add_option("--target", target)->check(CLI::IsMember({"boundary", "bulk"}))->capture_default_str();
  circ->add_option("--state", state)->check(CLI::IsMember({"ground", "thermal"}))->capture_default_str();
  circ->add_flag("--givens", givens, "also emit interferometers as Givens rotations");

  std::string simulate_path;
  auto *ver = app.add_subcommand("verify", "run the invariant checks and print a pass/fail table");
  ver->add_option("--simulate", simulate_path, "simulate a circuit JSON file against its target");

  bool dump = false;
  auto *tr = app.add_subcommand("transform", "wavelet transform matrix M_bk");
  tr->add_flag("--dump", dump, "write the matrix (dense CSV or sparse JSON triplets)");

  try {
    app.parse(normalize_args(argc, argv));
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }
  if (beta_opt->count() > 0) cfg.beta = beta;

  try {
    if (*overlaps) run_overlaps(cfg);
    if (*spectrum) run_spectrum(cfg);
    if (*corr) run_correlations(cfg, co);
    if (*mi) run_mutual_info(cfg, mi_r, mi_jmax, mi_cross);
    if (*ent) run_entropy(cfg, lmax);
    if (*cc) run_central_charge(cfg, l1, l2, policy_opt->count() > 0, dense);
    if (*fit) run_curvature_fit(cfg, fit_r);
    if (*circ) run_circuit(cfg, target, state, givens);
    if (*ver) return run_verify(cfg, simulate_path);
    if (*tr) {
      if (!dump) throw Error(ErrorCode::InvalidArgument, "transform needs --dump");
      run_transform(cfg);
    }
  } catch (const Error &e) {
    std::cerr << "holomap: " << e.what() << "\n";
    return is_validation_error(e.code()) ? 1 : 2;
  } catch (const std::exception &e) {
    std::cerr << "holomap: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
