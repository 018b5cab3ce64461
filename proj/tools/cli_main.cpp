// Command-line reproduction harness: runs the library's experiments and
// emits machine-readable JSON reports (CSV sidecar for sweeps).
//
// Subcommands: activate, paths, nogo, classify, sweep.
// Exit codes: 0 report passed, 1 report failed, 2 usage/input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qswitch/capacity.hpp"
#include "qswitch/correctability.hpp"
#include "qswitch/ebcert.hpp"
#include "qswitch/json_io.hpp"
#include "qswitch/paths.hpp"
#include "qswitch/sampling.hpp"
#include "qswitch/switch.hpp"
#include "qswitch/tolerances.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qswitch;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ToleranceProfile {
  std::string name = "default";
  double value_match = tol::capacity_value;       // closed-form and I_c checks
  double kl_residual = tol::kl_residual;          // KL / recovery distances
  double decomposition = tol::decomposition;      // block residuals
  double ppt_margin = tol::ppt_eigenvalue;        // PT eigenvalue floor

  ordered_json json() const {
    return ordered_json{{"profile", name},
                        {"value_match", value_match},
                        {"kl_residual", kl_residual},
                        {"decomposition", decomposition},
                        {"ppt_margin", ppt_margin}};
  }
};

ToleranceProfile profile_from_name(const std::string& name) {
  ToleranceProfile p;
  if (name == "default") return p;
  if (name == "strict") {
    p.name = "strict";
    p.value_match /= 10;
    p.kl_residual /= 10;
    p.decomposition /= 10;
    return p;
  }
  throw UsageError("unknown tolerance profile: " + name +
                   " (expected 'default' or 'strict')");
}

struct ReportOptions {
  std::uint64_t seed = 12345;
  std::string profile = "default";
  std::string out_path;      // empty: stdout
  bool stable_output = false;  // zero the runtime field for byte-stable reports
};

void add_common_flags(CLI::App* cmd, ReportOptions* opts, bool with_out = true) {
  cmd->add_option("--seed", opts->seed, "Seed for all randomized parts");
  cmd->add_option("--tolerance-profile", opts->profile,
                  "Tolerance profile: default | strict");
  if (with_out)
    cmd->add_option("--out", opts->out_path, "Write the JSON report to this path");
  cmd->add_flag("--stable-output", opts->stable_output,
                "Report runtime_ms as 0 so reruns are byte-identical");
}

int emit_report(const ReportOptions& opts, const std::string& experiment,
                ordered_json inputs, ordered_json results,
                const ToleranceProfile& profile, bool pass,
                std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  ordered_json report{{"experiment", experiment},
                      {"inputs", std::move(inputs)},
                      {"results", std::move(results)},
                      {"tolerances", profile.json()},
                      {"pass", pass},
                      {"seed", opts.seed},
                      {"runtime_ms", opts.stable_output ? 0 : elapsed}};
  const std::string text = report.dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write report to " + opts.out_path);
    out << text;
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Flag parsing helpers

// Probability entries accept decimals ("0.5") and integer ratios ("1/3");
// an all-rational vector keeps exact weight arithmetic downstream.
PauliVector parse_pauli_vector(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(tok);
  if (parts.size() != 4)
    throw UsageError("--p expects four comma-separated probabilities");
  bool all_rational = true;
  std::array<Fraction, 4> fracs{};
  std::array<double, 4> vals{};
  for (int i = 0; i < 4; ++i) {
    const std::string& s = parts[static_cast<size_t>(i)];
    const auto slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        fracs[static_cast<size_t>(i)] = Fraction(std::stoll(s.substr(0, slash)),
                                                 std::stoll(s.substr(slash + 1)));
        vals[static_cast<size_t>(i)] = fracs[static_cast<size_t>(i)].value();
      } else {
        vals[static_cast<size_t>(i)] = std::stod(s);
        double integral = 0.0;
        if (std::modf(vals[static_cast<size_t>(i)], &integral) == 0.0)
          fracs[static_cast<size_t>(i)] =
              Fraction::from_int(static_cast<std::int64_t>(integral));
        else
          all_rational = false;
      }
    } catch (const std::exception&) {
      throw UsageError("cannot parse probability entry '" + s + "'");
    }
  }
  try {
    if (all_rational) return PauliVector::from_fractions(fracs);
    return PauliVector(vals);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid probability vector: ") + e.what());
  }
}

ControlState parse_omega(const std::string& text) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector v(2);
  if (text == "+") {
    v << s, s;
  } else if (text == "-") {
    v << s, -s;
  } else if (text == "0") {
    v << 1, 0;
  } else if (text == "1") {
    v << 0, 1;
  } else if (text == "i") {
    v << s, Complex(0, s);
  } else if (text == "mixed") {
    return ControlState::maximally_mixed();
  } else if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read control state file " + text.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return ControlState(density_from_json(buf.str()));
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid control state JSON: ") + e.what());
    }
  } else {
    throw UsageError("unknown control state '" + text +
                     "' (use +, -, 0, 1, i, mixed, or @file.json)");
  }
  return ControlState::from_ket(v);
}

Channel parse_channel_arg(const std::string& text) {
  try {
    if (text == "exy") return pauli_channel(PauliVector({0, 0.5, 0.5, 0}));
    if (text == "exyz")
      return pauli_channel(PauliVector::from_fractions(
          {Fraction(0, 1), Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)}));
    if (text == "depol")
      return pauli_channel(PauliVector({0.25, 0.25, 0.25, 0.25}));
    if (text == "hxy") {  // Hadamard-conjugated exy
      const double s = 1.0 / std::sqrt(2.0);
      Matrix h(2, 2);
      h << s, s, s, -s;
      const Channel xy = pauli_channel(PauliVector({0, 0.5, 0.5, 0}));
      std::vector<Matrix> kraus;
      for (const Matrix& k : xy.kraus()) kraus.push_back(h * k * h.adjoint());
      return Channel(2, 2, kraus);
    }
    std::string body = text;
    if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("cannot read channel file " + text.substr(1));
      std::stringstream buf;
      buf << in.rdbuf();
      body = buf.str();
    }
    const Channel ch = channel_from_json(body);
    if (!ch.validate().passed)
      throw UsageError("channel JSON is not trace preserving");
    return ch;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid channel: ") + e.what());
  }
}

ordered_json estimate_json(const CapacityEstimate& est) {
  ordered_json j{{"value", est.value}};
  switch (est.direction) {
    case Direction::Exact: j["direction"] = "exact"; break;
    case Direction::LowerBound: j["direction"] = "lower_bound"; break;
    case Direction::UpperBound: j["direction"] = "upper_bound"; break;
    case Direction::HeuristicLower: j["direction"] = "heuristic_lower"; break;
  }
  j["method"] = est.method;
  if (est.unclamped) j["unclamped"] = *est.unclamped;
  if (est.exact_value)
    j["exact"] = std::to_string(est.exact_value->num()) + "/" +
                 std::to_string(est.exact_value->den());
  if (!est.note.empty()) j["note"] = est.note;
  if (est.restarts > 0) {
    j["optimizer"] = ordered_json{{"restarts", est.restarts},
                                  {"evaluations", est.evaluations},
                                  {"best_restart", est.best_restart},
                                  {"seed", est.seed}};
  }
  return j;
}

std::string pauli_to_string(const PauliVector& p) {
  std::ostringstream os;
  os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// activate

int cmd_activate(const ReportOptions& opts, const std::string& p_text,
                 const std::string& omega_text) {
  const auto started = std::chrono::steady_clock::now();
  const ToleranceProfile profile = profile_from_name(opts.profile);
  const PauliVector p = parse_pauli_vector(p_text);
  const ControlState omega = parse_omega(omega_text);
  const Channel channel = pauli_channel(p);

  OptimizerConfig cfg;
  cfg.seed = opts.seed;
  cfg.restarts = 8;
  cfg.max_iters = 80;

  ordered_json results;
  bool pass = true;

  const EBVerdict eb = is_entanglement_breaking(channel);
  results["entanglement_breaking"] =
      ordered_json{{"status", eb.status == EBStatus::EntanglementBreaking
                                  ? "entanglement_breaking"
                                  : (eb.status == EBStatus::NotEB ? "not_eb"
                                                                  : "undetermined")},
                   {"min_pt_eigenvalue", eb.min_pt_eigenvalue}};

  const auto dec = pauli_switch_decomposition(p, omega);
  ordered_json dec_json{{"q_plus", dec.q_plus}, {"q_minus", dec.q_minus}};
  if (dec.c_plus) dec_json["c_plus"] = pauli_to_string(*dec.c_plus);
  if (dec.c_minus) dec_json["c_minus"] = pauli_to_string(*dec.c_minus);
  // Consistency: the reassembled decomposition must match the direct switch.
  const SwitchedChannel sw = switch_channel(channel, channel, omega);
  const double reassembly = choi_distance(decomposition_channel(dec), sw.base);
  dec_json["reassembly_choi_distance"] = reassembly;
  pass = pass && reassembly <= profile.kl_residual;
  results["decomposition"] = std::move(dec_json);

  const KLReport kl = kl_check(std::span<const Matrix>(sw.base.kraus()));
  results["knill_laflamme"] =
      ordered_json{{"satisfied", kl.satisfied}, {"residual", kl.residual}};

  double recovery_distance = -1.0;
  if (kl.satisfied) {
    const auto support = omega.support();
    if (support.size() == 1) {
      try {
        const Channel rec = synthesize_recovery(channel, support[0].second);
        recovery_distance =
            choi_distance(compose_serial(rec, sw.base), Channel::identity(2));
        pass = pass && recovery_distance <= profile.kl_residual;
      } catch (const std::invalid_argument&) {
        // KL satisfied but outside the classified family; leave unreported.
      }
    }
  }
  results["recovery_choi_distance"] = recovery_distance;

  const CapacityEstimate ic_before = one_shot_coherent_info(channel, cfg);
  const CapacityEstimate ic_after = one_shot_coherent_info(sw.base, cfg);
  const CapacityEstimate closed = switched_pauli_coherent_info(p);
  results["coherent_info_before"] = estimate_json(ic_before);
  results["coherent_info_after"] = estimate_json(ic_after);
  const bool plus_control =
      max_abs(omega.density().mat() - ControlState::plus().density().mat()) <= 1e-12;
  if (plus_control) {
    results["coherent_info_closed_form"] = estimate_json(closed);
    pass = pass && std::abs(ic_after.value - closed.value) <= 2e-4;
    results["two_way_lower_bound"] =
        estimate_json(two_way_assisted_lower_bound(p, omega));
  }

  // EB channels must carry no one-shot coherent information.
  if (eb.status == EBStatus::EntanglementBreaking)
    pass = pass && ic_before.value <= profile.value_match;

  // When the channel is switch-correctable the composition must be perfect.
  if (kl.satisfied && recovery_distance >= 0.0)
    pass = pass && ic_after.value >= 1.0 - profile.value_match;

  ordered_json inputs{{"p", pauli_to_string(p)}, {"omega", omega_text}};
  return emit_report(opts, "activate", std::move(inputs), std::move(results),
                     profile, pass, started);
}

// ---------------------------------------------------------------------------
// paths

int cmd_paths(const ReportOptions& opts, const std::string& preset,
              const std::string& config_path) {
  const auto started = std::chrono::steady_clock::now();
  const ToleranceProfile profile = profile_from_name(opts.profile);

  PathConfig cfg;
  std::string label;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot read path config " + config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      cfg = path_config_from_json(buf.str());
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid path config: ") + e.what());
    }
    label = config_path;
  } else {
    const Channel xy = pauli_channel(PauliVector({0, 0.5, 0.5, 0}));
    if (preset == "xy2") {
      cfg.channels = {xy, xy};
    } else if (preset == "xy3") {
      cfg.channels = {xy, xy, xy};
    } else if (preset == "unitary") {
      cfg.channels = {Channel::identity(2), Channel::identity(2)};
    } else {
      throw UsageError("unknown preset '" + preset +
                       "' (use xy2, xy3, unitary, or --config)");
    }
    const int n = static_cast<int>(cfg.channels.size());
    cfg.phi = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    label = preset;
  }

  const Channel sup = path_superposition(cfg);
  const int rank = kraus_rank(sup);
  const bool bound = packing_bound_correctable(sup);

  ordered_json results{{"path_count", cfg.path_count()},
                       {"dim", cfg.dim()},
                       {"kraus_rank", rank},
                       {"packing_bound_correctable", bound},
                       {"validation_deviation", sup.validate().max_deviation}};
  bool pass = sup.validate().passed;

  bool all_noisy = true;
  for (const Channel& c : cfg.channels) all_noisy = all_noisy && kraus_rank(c) >= 2;
  bool phis_nonzero = cfg.phi.cwiseAbs().minCoeff() > 1e-12;
  if (all_noisy && phis_nonzero) {
    const auto witness = independence_witness(cfg);
    const int wrank = gram_rank(std::span<const Matrix>(witness));
    results["witness_rank"] = wrank;
    // All channels noisy: the witness span must exceed the packing budget.
    pass = pass && wrank == cfg.path_count() + 1 && !bound;
  } else {
    results["witness_rank"] = nullptr;
    results["witness_note"] = "not all channels noisy; no-decoding argument void";
  }

  ordered_json inputs{{"preset", label}};
  return emit_report(opts, "paths", std::move(inputs), std::move(results), profile,
                     pass, started);
}

// ---------------------------------------------------------------------------
// nogo

int cmd_nogo(const ReportOptions& opts, int trials, std::vector<int> dims) {
  const auto started = std::chrono::steady_clock::now();
  const ToleranceProfile profile = profile_from_name(opts.profile);
  if (trials < 1) throw UsageError("--trials must be positive");
  if (dims.empty()) dims = {2, 3, 4};
  for (int d : dims)
    if (d < 2) throw UsageError("--d entries must be at least 2");

  OptimizerConfig cfg;
  cfg.seed = opts.seed;
  cfg.restarts = 2;
  cfg.max_iters = 10;
  cfg.step_tol = 1e-4;

  Rng rng(opts.seed);
  int certified = 0;
  double worst_recon = 0.0, worst_tc = 0.0, worst_pt = 0.0, worst_ic = 0.0;
  bool pass = true;
  for (int t = 0; t < trials; ++t) {
    const int d = dims[static_cast<size_t>(t) % dims.size()];
    const ErasurePair pair = random_erasure_pair(d, rng);
    const EBCertificate cert = certify_entanglement_breaking(pair);
    worst_recon = std::max(worst_recon, cert.reconstruction_residual);
    worst_tc = std::max(worst_tc, cert.transpose_identity_residual);
    worst_pt = std::min(worst_pt, cert.min_pt_eig);
    const SwitchedChannel sw = switch_channel(erasure_channel(pair.phi, d),
                                              erasure_channel(pair.psi, d),
                                              pair.omega);
    const CapacityEstimate ic = one_shot_coherent_info(sw.base, cfg);
    worst_ic = std::max(worst_ic, ic.value);
    const bool ok = cert.ppt_ok &&
                    cert.reconstruction_residual <= profile.decomposition &&
                    cert.transpose_identity_residual <= profile.decomposition &&
                    ic.value <= profile.value_match;
    certified += ok ? 1 : 0;
    pass = pass && ok;
  }

  ordered_json results{{"trials", trials},
                       {"certified", certified},
                       {"max_reconstruction_residual", worst_recon},
                       {"max_transpose_identity_residual", worst_tc},
                       {"min_pt_eigenvalue", worst_pt},
                       {"max_coherent_info", worst_ic}};
  ordered_json inputs{{"trials", trials}, {"d", dims}};
  return emit_report(opts, "nogo", std::move(inputs), std::move(results), profile,
                     pass, started);
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const ReportOptions& opts, const std::string& channel_text) {
  const auto started = std::chrono::steady_clock::now();
  const ToleranceProfile profile = profile_from_name(opts.profile);
  const Channel ch = parse_channel_arg(channel_text);
  if (ch.dim_in() != 2 || ch.dim_out() != 2)
    throw UsageError("classify expects a qubit channel");

  const ActivationVerdict verdict = verify_maximal_activation(ch);
  ordered_json cls;
  bool pass = true;
  switch (verdict.classification.kind) {
    case QubitKind::Unitary: {
      cls["kind"] = "unitary";
      break;
    }
    case QubitKind::SelfAdjointPair: {
      cls["kind"] = "self_adjoint_pair";
      cls["q"] = verdict.classification.q;
      cls["m1"] = {verdict.classification.m1(0), verdict.classification.m1(1),
                   verdict.classification.m1(2)};
      cls["m2"] = {verdict.classification.m2(0), verdict.classification.m2(1),
                   verdict.classification.m2(2)};
      ordered_json u = ordered_json::array();
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          u.push_back({verdict.classification.basis_unitary(r, c).real(),
                       verdict.classification.basis_unitary(r, c).imag()});
      cls["basis_unitary"] = std::move(u);
      cls["reconstruction_residual"] = verdict.classification.reconstruction_residual;
      pass = pass &&
             verdict.classification.reconstruction_residual <= profile.kl_residual;
      break;
    }
    case QubitKind::None: {
      cls["kind"] = "none";
      break;
    }
  }

  ordered_json results{{"classification", std::move(cls)},
                       {"hashing_lower_bound", verdict.hashing_lower}};
  switch (verdict.kind) {
    case ActivationKind::MaximalActivation:
      results["activation"] = "maximal_activation";
      break;
    case ActivationKind::PositiveCapacity:
      results["activation"] = "positive_capacity";
      break;
    case ActivationKind::NoActivation:
      results["activation"] = "no_activation";
      break;
  }
  results["entanglement_breaking"] =
      verdict.eb.status == EBStatus::EntanglementBreaking;

  ordered_json inputs{{"channel", channel_text}};
  return emit_report(opts, "classify", std::move(inputs), std::move(results),
                     profile, pass, started);
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const ReportOptions& opts, int grid, const std::string& csv_path) {
  const auto started = std::chrono::steady_clock::now();
  const ToleranceProfile profile = profile_from_name(opts.profile);
  if (grid < 1) throw UsageError("--grid must be at least 1");
  if (csv_path.empty()) throw UsageError("sweep requires --out for the CSV sidecar");

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw UsageError("cannot write CSV to " + csv_path);
  csv << "p0,p1,p2,p3,q_plus,q_minus,eb,kl_switched,ic_formula,ic_clamped,"
         "q2way_lower\n";

  const ControlState plus = ControlState::plus();
  Vector gamma(2);
  gamma << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);

  char line[512];
  int rows = 0;
  // Lattice over the probability simplex: all (i,j,k,l) with i+j+k+l = grid.
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; i + j <= grid; ++j)
      for (int k = 0; i + j + k <= grid; ++k) {
        const int l = grid - i - j - k;
        const PauliVector p = PauliVector::from_fractions(
            {Fraction(i, grid), Fraction(j, grid), Fraction(k, grid),
             Fraction(l, grid)});
        const Channel ch = pauli_channel(p);
        const auto dec = pauli_switch_decomposition(p, plus);
        const bool eb =
            is_entanglement_breaking(ch).status == EBStatus::EntanglementBreaking;
        const bool kl = switched_kl_check(ch, gamma).satisfied;
        const CapacityEstimate ic = switched_pauli_coherent_info(p);
        const CapacityEstimate q2 = two_way_assisted_lower_bound(p, plus);
        std::snprintf(line, sizeof line,
                      "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%d,%d,%.12g,%.12g,%.12g\n",
                      p[0], p[1], p[2], p[3], dec.q_plus, dec.q_minus, eb ? 1 : 0,
                      kl ? 1 : 0, *ic.unclamped, ic.value, q2.value);
        csv << line;
        ++rows;
      }
  csv.close();

  const int expected = (grid + 1) * (grid + 2) * (grid + 3) / 6;
  const bool pass = rows == expected;
  ordered_json results{{"rows", rows}, {"expected_rows", expected}, {"csv", csv_path}};
  ordered_json inputs{{"grid", grid}};
  return emit_report(opts, "sweep", std::move(inputs), std::move(results), profile,
                     pass, started);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-switch channel algebra: activation experiments"};
  app.require_subcommand(1);

  ReportOptions activate_opts, paths_opts, nogo_opts, classify_opts, sweep_opts;

  auto* activate = app.add_subcommand(
      "activate", "Switch a Pauli channel with itself and test activation");
  std::string p_text = "0,1/2,1/2,0";
  std::string omega_text = "+";
  add_common_flags(activate, &activate_opts);
  activate->add_option("--p", p_text, "Pauli probabilities p0,p1,p2,p3");
  activate->add_option("--omega", omega_text, "Control state (+,-,0,1,i,mixed,@file)");

  auto* paths = app.add_subcommand(
      "paths", "Superpose noisy channels over alternative paths");
  std::string preset = "xy2";
  std::string config_path;
  add_common_flags(paths, &paths_opts);
  paths->add_option("--preset", preset, "Built-in configuration (xy2, xy3, unitary)");
  paths->add_option("--config", config_path, "Path-configuration JSON file");

  auto* nogo = app.add_subcommand(
      "nogo", "Certify switched erasure pairs as entanglement breaking");
  int trials = 100;
  std::vector<int> dims;
  add_common_flags(nogo, &nogo_opts);
  nogo->add_option("--trials", trials, "Number of random pairs");
  nogo->add_option("--d", dims, "System dimensions to cycle through");

  auto* classify = app.add_subcommand("classify", "Classify a qubit channel");
  std::string channel_text = "exy";
  add_common_flags(classify, &classify_opts);
  classify->add_option("--channel", channel_text,
                       "Channel: exy, exyz, depol, hxy, @file.json, or inline JSON");

  auto* sweep = app.add_subcommand(
      "sweep", "Sweep the Pauli simplex lattice and write a CSV");
  int grid = 4;
  std::string csv_path;
  add_common_flags(sweep, &sweep_opts, /*with_out=*/false);
  sweep->add_option("--grid", grid, "Lattice subdivisions per axis");
  sweep->add_option("--out", csv_path, "CSV sidecar path (JSON report on stdout)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or help text
    return code == 0 ? 0 : 2;
  }

  try {
    if (activate->parsed())
      return cmd_activate(activate_opts, p_text, omega_text);
    if (paths->parsed()) return cmd_paths(paths_opts, preset, config_path);
    if (nogo->parsed()) return cmd_nogo(nogo_opts, trials, dims);
    if (classify->parsed()) return cmd_classify(classify_opts, channel_text);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, grid, csv_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
