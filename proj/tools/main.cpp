// Copyright 2026 The dobsim Authors.
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

// Command line front end: verification, discretization, frequency-domain
// exports, design-region scans and scenario simulation. All outputs are
// plain CSV/text with a version + config-hash header line.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dobsim/cdob.hpp"
#include "dobsim/config.hpp"
#include "dobsim/dob.hpp"
#include "dobsim/pd_design.hpp"
#include "dobsim/reference_design.hpp"
#include "dobsim/scenario.hpp"
#include "dobsim/serialization.hpp"
#include "dobsim/state_space.hpp"
#include "dobsim/vehicle.hpp"
#include "dobsim/version.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitInternal = 70;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(text)));
  return buf;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Relative output paths land in DOBSIM_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("DOBSIM_OUT_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / p;
  }
  return p;
}

std::ofstream open_output(const std::string& name, const std::string& config_hash) {
  const auto path = resolve_output(name);
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path.string());
  out << "# dobsim " << dobsim::version << " config=" << config_hash << "\n";
  return out;
}

struct ScenarioArgs {
  std::string config_path;
  std::vector<std::string> overrides;

  // Returns the scenario plus the canonical text that feeds the output hash.
  std::pair<dobsim::Scenario, std::string> load() const {
    std::ifstream in(config_path);
    if (!in) throw dobsim::ConfigError(0, "cannot read config file: " + config_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string canonical = buf.str();
    dobsim::Scenario sc = dobsim::parse_scenario_text(canonical);
    for (const auto& item : overrides) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw CLI::ValidationError("--set", "expected section.key=value");
      }
      try {
        dobsim::apply_override(sc, item.substr(0, eq), item.substr(eq + 1));
      } catch (const dobsim::ConfigError& e) {
        throw CLI::ValidationError("--set", e.what());
      }
      canonical += "\n@set " + item;
    }
    return {sc, canonical};
  }
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "Scenario file")->required();
  cmd->add_option("--set", args.overrides,
                  "Override a scenario value (section.key=value), repeatable");
}

void write_trace_csv(std::ofstream& out, const dobsim::SimulationTrace& trace) {
  out << "t,rho_ref,f_wind,r_ref,y,y_s,u";
  const bool dob = trace.compensation == dobsim::Compensation::dob;
  const bool cdob = trace.compensation == dobsim::Compensation::cdob;
  out << (cdob ? ",y_delayed" : ",y_meas");
  if (dob) out << ",u1,dhat_channel";
  if (cdob) out << ",y_comp,dhat";
  out << "\n";
  for (std::size_t k = 0; k < trace.t.size(); ++k) {
    out << fmt(trace.t[k]) << ',' << fmt(trace.rho_ref[k]) << ','
        << fmt(trace.f_wind[k]) << ",0," << fmt(trace.y[k]) << ','
        << fmt(trace.y_s[k]) << ',' << fmt(trace.u[k]) << ','
        << fmt(trace.y_meas[k]);
    if (dob) out << ',' << fmt(trace.u1[k]) << ',' << fmt(trace.dhat[k]);
    if (cdob) out << ',' << fmt(trace.y_comp[k]) << ',' << fmt(trace.dhat[k]);
    out << "\n";
  }
}

void print_trace_summary(const dobsim::SimulationTrace& trace) {
  std::cout << "samples:   " << trace.t.size() << "\n"
            << "rms_y:     " << fmt(trace.rms_y) << " m\n"
            << "max_abs_y: " << fmt(trace.max_abs_y) << " m\n"
            << "verdict:   " << dobsim::to_string(trace.verdict) << "\n";
}

int cmd_verify(bool list_only, double perturb_gn_num) {
  if (list_only) {
    for (const auto& name : dobsim::reference_check_names()) {
      std::cout << name << "\n";
    }
    return 0;
  }
  const auto results = dobsim::run_reference_checks({perturb_gn_num});
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed &= r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail
              << "\n";
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  return all_passed ? 0 : kExitVerificationFailure;
}

int cmd_discretize(const std::string& system, const std::string& tf_text, double ts,
                   const std::string& output) {
  dobsim::TransferFunction g = [&] {
    if (!tf_text.empty()) return dobsim::tf_from_text(tf_text);
    if (system == "gn") return dobsim::nominal_plant_s();
    if (system == "qdob") return dobsim::q_dob_s();
    if (system == "qcdob") return dobsim::q_cdob_s();
    throw CLI::ValidationError("--system", "expected gn, qdob or qcdob");
  }();
  const auto gz = dobsim::zoh_discretize(g, ts);
  const std::string line = dobsim::to_text(gz);
  if (!output.empty()) {
    auto out = open_output(output, hash_hex(dobsim::to_text(g) + fmt(ts)));
    out << line << "\n";
  }
  std::cout << line << "\n";
  return 0;
}

int cmd_bode(const std::string& system, double wmin, double wmax, int points,
             double kd, double kp, const std::string& output) {
  const double ts = 0.01;
  const auto gn_z = dobsim::nominal_plant_z(ts);
  const dobsim::PDGains gains{kd, kp};
  const auto c = dobsim::pd_controller(gains, ts);
  const auto loop = series(c, gn_z);
  const dobsim::WeightSpec weights{};

  enum class Kind { tf_continuous, tf_discrete, sens, comp_sens, mixed } kind;
  std::optional<dobsim::TransferFunction> tf;
  if (system == "Gn_s") {
    kind = Kind::tf_continuous;
    tf = dobsim::nominal_plant_s();
  } else if (system == "Ws") {
    kind = Kind::tf_continuous;
    tf = dobsim::sensitivity_weight(weights);
  } else if (system == "Wt") {
    kind = Kind::tf_continuous;
    tf = dobsim::comp_sensitivity_weight(weights);
  } else if (system == "Gn_z") {
    kind = Kind::tf_discrete;
    tf = gn_z;
  } else if (system == "L") {
    kind = Kind::tf_discrete;
    tf = loop;
  } else if (system == "S") {
    kind = Kind::sens;
  } else if (system == "T") {
    kind = Kind::comp_sens;
  } else if (system == "mixed") {
    kind = Kind::mixed;
  } else {
    throw CLI::ValidationError("--system",
                               "expected Gn_s, Gn_z, L, S, T, Ws, Wt or mixed");
  }

  const double hi = std::min(wmax, std::numbers::pi / ts * 0.9999);
  if (!(wmin > 0.0) || hi <= wmin || points < 2) {
    throw CLI::ValidationError("--wmin/--wmax/--points", "bad frequency grid");
  }

  const std::string params = system + "," + fmt(wmin) + "," + fmt(wmax) + "," +
                             std::to_string(points) + "," + fmt(kd) + "," + fmt(kp);
  auto out = open_output(output, hash_hex(params));
  out << "omega_rad_s,magnitude_db,phase_deg\n";
  const auto ws = dobsim::sensitivity_weight(weights);
  const auto wt = dobsim::comp_sensitivity_weight(weights);
  for (int i = 0; i < points; ++i) {
    const double w = std::pow(10.0, std::log10(wmin) +
                                        (std::log10(hi) - std::log10(wmin)) * i /
                                            (points - 1));
    std::complex<double> value;
    switch (kind) {
      case Kind::tf_continuous:
      case Kind::tf_discrete:
        value = tf->frequency_response(w);
        break;
      case Kind::sens:
      case Kind::comp_sens: {
        const auto l = loop.frequency_response(w);
        value = kind == Kind::sens ? 1.0 / (1.0 + l) : l / (1.0 + l);
        break;
      }
      case Kind::mixed: {
        const auto l = loop.frequency_response(w);
        const std::complex<double> jw(0.0, w);
        const double sum = std::abs(ws.eval(jw) / (1.0 + l)) +
                           std::abs(wt.eval(jw) * l / (1.0 + l));
        value = sum;
        break;
      }
    }
    const double mag_db = 20.0 * std::log10(std::abs(value));
    const double phase =
        kind == Kind::mixed ? 0.0 : std::arg(value) * 180.0 / std::numbers::pi;
    out << fmt(w) << ',' << fmt(mag_db) << ',' << fmt(phase) << "\n";
  }
  std::cout << "wrote " << resolve_output(output).string() << "\n";
  return 0;
}

int cmd_design_region(const dobsim::RegionRequest& req, const std::string& output) {
  const auto gn_z = dobsim::nominal_plant_z(0.01);
  const auto mask = dobsim::feasible_region(req, gn_z);
  const std::string params = fmt(req.kd_min) + "," + fmt(req.kd_max) + "," +
                             fmt(req.kp_min) + "," + fmt(req.kp_max) + "," +
                             std::to_string(req.n_kd) + "," +
                             std::to_string(req.n_kp);
  auto out = open_output(output, hash_hex(params));
  out << "kd,kp,stable,pm_deg,mixed_sens,feasible\n";
  for (const auto& pt : mask) {
    out << fmt(pt.kd) << ',' << fmt(pt.kp) << ',' << (pt.stable ? 1 : 0) << ','
        << fmt(pt.pm_deg) << ',' << fmt(pt.mixed_sens) << ','
        << (pt.feasible ? 1 : 0) << "\n";
  }
  int feasible = 0;
  for (const auto& pt : mask) feasible += pt.feasible ? 1 : 0;
  std::cout << "wrote " << resolve_output(output).string() << " (" << feasible
            << " of " << mask.size() << " points feasible)\n";
  return 0;
}

int cmd_simulate(const ScenarioArgs& args, const std::string& output) {
  const auto [scenario, canonical] = args.load();
  const auto trace = dobsim::run_scenario(scenario);
  auto out = open_output(output, hash_hex(canonical));
  write_trace_csv(out, trace);
  print_trace_summary(trace);
  std::cout << "trace: " << resolve_output(output).string() << "\n";
  return trace.verdict == dobsim::Verdict::diverged ? kExitDiverged : 0;
}

int cmd_sweep_corners(const ScenarioArgs& args, const std::string& output) {
  const auto [scenario, canonical] = args.load();
  const auto rows = dobsim::corner_sweep(scenario);
  auto condition = [](const dobsim::CornerSweepRow& row) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.0fkm/h %.0fkg", row.speed_kmh, row.mass_kg);
    return std::string(buf);
  };
  auto out = open_output(output, hash_hex(canonical));
  out << "corner,condition,rms_pd,rms_pd_dob,ratio\n";
  for (const auto& row : rows) {
    out << row.label << ',' << condition(row) << ',' << fmt(row.rms_pd) << ','
        << fmt(row.rms_dob) << ',' << fmt(row.ratio) << "\n";
  }
  std::printf("%-8s %-16s %-12s %-12s %-8s\n", "corner", "condition", "rms(PD)",
              "rms(PD+DOB)", "ratio");
  for (const auto& row : rows) {
    std::printf("%-8c %-16s %-12.6f %-12.6f %-8.3f\n", row.label,
                condition(row).c_str(), row.rms_pd, row.rms_dob, row.ratio);
  }
  std::cout << "wrote " << resolve_output(output).string() << "\n";
  return 0;
}

int cmd_sweep_delays(const ScenarioArgs& args, std::vector<int> delays,
                     const std::string& output) {
  const auto [scenario, canonical] = args.load();
  if (delays.empty()) {
    delays.assign(std::begin(dobsim::default_delay_sweep),
                  std::end(dobsim::default_delay_sweep));
  }
  const auto rows = dobsim::delay_sweep(scenario, delays);
  auto out = open_output(output, hash_hex(canonical));
  out << "delay_samples,rms,verdict\n";
  for (const auto& row : rows) {
    out << row.delay_samples << ',' << fmt(row.rms) << ','
        << dobsim::to_string(row.verdict) << "\n";
  }
  std::printf("%-14s %-12s %-10s\n", "delay_samples", "rms", "verdict");
  for (const auto& row : rows) {
    std::printf("%-14d %-12.6f %-10s\n", row.delay_samples, row.rms,
                std::string(dobsim::to_string(row.verdict)).c_str());
  }
  std::cout << "wrote " << resolve_output(output).string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time robust PD / DOB / CDOB path-following toolbox"};
  app.set_version_flag("--version", std::string("dobsim ") + dobsim::version);
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in design checks");
  bool list_only = false;
  double perturb_gn = 1.0;
  verify->add_flag("--list", list_only, "List check names without running");
  verify->add_option("--perturb-gn-num", perturb_gn,
                     "Scale the nominal plant numerator (negative control)");

  // discretize
  auto* discretize =
      app.add_subcommand("discretize", "Zero-order-hold discretization");
  std::string system = "gn", tf_text, disc_out;
  double ts = 0.01;
  discretize->add_option("--system", system, "Built-in system: gn, qdob, qcdob");
  discretize->add_option("--tf", tf_text,
                         "Transfer function text ('continuous num: ... den: ...')");
  discretize->add_option("--ts", ts, "Sample time [s]");
  discretize->add_option("-o,--output", disc_out, "Also write the result to a file");

  // bode
  auto* bode = app.add_subcommand("bode", "Frequency response CSV");
  std::string bode_system = "Gn_z", bode_out = "bode.csv";
  double wmin = 1e-2, wmax = 314.0, bkd = dobsim::design_point.kd,
         bkp = dobsim::design_point.kp;
  int points = 400;
  bode->add_option("--system", bode_system, "Gn_s, Gn_z, L, S, T, Ws, Wt or mixed");
  bode->add_option("--wmin", wmin, "Lowest frequency [rad/s]");
  bode->add_option("--wmax", wmax, "Highest frequency [rad/s]");
  bode->add_option("--points", points, "Grid size");
  bode->add_option("--kd", bkd, "Derivative gain for L/S/T/mixed");
  bode->add_option("--kp", bkp, "Proportional gain for L/S/T/mixed");
  bode->add_option("-o,--output", bode_out, "Output CSV path");

  // design-region
  auto* region = app.add_subcommand("design-region", "Scan the PD gain plane");
  dobsim::RegionRequest req;
  std::string region_out = "design_region.csv";
  region->add_option("--kd-min", req.kd_min, "Lower kd bound");
  region->add_option("--kd-max", req.kd_max, "Upper kd bound");
  region->add_option("--kp-min", req.kp_min, "Lower kp bound");
  region->add_option("--kp-max", req.kp_max, "Upper kp bound");
  region->add_option("--n-kd", req.n_kd, "Grid points along kd");
  region->add_option("--n-kp", req.n_kp, "Grid points along kp");
  region->add_option("-o,--output", region_out, "Output CSV path");

  // simulate + sweeps
  auto* simulate = app.add_subcommand("simulate", "Run one scenario");
  ScenarioArgs sim_args;
  std::string sim_out = "trace.csv";
  add_scenario_options(simulate, sim_args);
  simulate->add_option("-o,--output", sim_out, "Trace CSV path");

  auto* corners = app.add_subcommand("sweep-corners",
                                     "PD vs PD+DOB across the uncertainty box");
  ScenarioArgs corner_args;
  std::string corners_out = "corner_sweep.csv";
  add_scenario_options(corners, corner_args);
  corners->add_option("-o,--output", corners_out, "Output CSV path");

  auto* delays_cmd =
      app.add_subcommand("sweep-delays", "CDOB robustness across delay values");
  ScenarioArgs delay_args;
  std::vector<int> delays;
  std::string delays_out = "delay_sweep.csv";
  add_scenario_options(delays_cmd, delay_args);
  delays_cmd->add_option("--delays", delays, "Delay list in samples");
  delays_cmd->add_option("-o,--output", delays_out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(list_only, perturb_gn);
    if (discretize->parsed()) return cmd_discretize(system, tf_text, ts, disc_out);
    if (bode->parsed()) {
      return cmd_bode(bode_system, wmin, wmax, points, bkd, bkp, bode_out);
    }
    if (region->parsed()) return cmd_design_region(req, region_out);
    if (simulate->parsed()) return cmd_simulate(sim_args, sim_out);
    if (corners->parsed()) return cmd_sweep_corners(corner_args, corners_out);
    if (delays_cmd->parsed()) return cmd_sweep_delays(delay_args, delays, delays_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dobsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
