// Command-line front end: every subcommand prints one OutputRecord in
// table, csv, or json form. Exit codes: 0 success, 2 usage or validation
// error, 3 numerical-verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "squeezelab/coupled.hpp"
#include "squeezelab/covariant.hpp"
#include "squeezelab/entangle.hpp"
#include "squeezelab/output.hpp"
#include "squeezelab/parton.hpp"
#include "squeezelab/squeezed.hpp"
#include "squeezelab/verify.hpp"

namespace {

using squeezelab::SqueezeParam;
using squeezelab::cli::Format;
using squeezelab::cli::OutputRecord;

constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

int quad_order_from_env() {
  const char* raw = std::getenv("SQUEEZELAB_QUAD_ORDER");
  if (raw == nullptr) return 128;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 2 || value > 512) {
    throw std::invalid_argument(
        "SQUEEZELAB_QUAD_ORDER must be an integer in [2, 512]");
  }
  return static_cast<int>(value);
}

void emit(const OutputRecord& record, Format format, const std::string& out_path) {
  const std::string text = squeezelab::cli::serialize(record, format);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

OutputRecord diagonalize_record(double m, double a, double c) {
  const squeezelab::coupled::OscillatorParams params(m, a, c);
  const auto modes = squeezelab::coupled::diagonalize(params);
  OutputRecord rec;
  rec.command = "diagonalize";
  rec.parameters = {{"m", m}, {"a", a}, {"c", c}};
  rec.columns = {"spring_k", "eta", "omega", "omega_fast", "omega_slow"};
  rec.rows = {{modes.spring_k, modes.eta, modes.omega, modes.omega_fast,
               modes.omega_slow}};
  return rec;
}

OutputRecord entropy_scan_record(double eta_min, double eta_max, int steps,
                                 double omega, const std::string& mapping_name) {
  if (!(eta_min >= 0.0) || !(eta_max > eta_min) ||
      eta_max > SqueezeParam::kMaxAbs) {
    throw std::invalid_argument(
        "entropy-scan: need 0 <= eta-min < eta-max <= 20");
  }
  if (steps < 2) throw std::invalid_argument("entropy-scan: need steps >= 2");
  if (!(omega > 0.0)) throw std::invalid_argument("entropy-scan: omega must be positive");

  using squeezelab::entangle::ThermalMapping;
  ThermalMapping mapping;
  if (mapping_name == "squared") {
    mapping = ThermalMapping::tanh_squared;
  } else if (mapping_name == "linear") {
    mapping = ThermalMapping::tanh_linear;
  } else {
    throw std::invalid_argument("entropy-scan: mapping must be squared or linear");
  }

  OutputRecord rec;
  rec.command = "entropy-scan";
  rec.parameters = {{"eta_min", eta_min},
                    {"eta_max", eta_max},
                    {"steps", steps},
                    {"omega", omega},
                    {"mapping", mapping_name}};
  rec.columns = {"eta", "purity", "entropy", "effective_temperature",
                 "thermal_entropy"};
  for (int i = 0; i < steps; ++i) {
    const double eta = eta_min + (eta_max - eta_min) * i / (steps - 1);
    const SqueezeParam sp{eta};
    double temperature = 0.0;
    double thermal = 0.0;
    if (eta > 0.0) {
      // x = omega/T; at eta = 0 both T and the thermal entropy vanish.
      temperature = squeezelab::entangle::effective_temperature(sp, omega, mapping);
      thermal = squeezelab::entangle::thermal_entropy(omega / temperature);
    }
    rec.rows.push_back({eta, squeezelab::entangle::purity(sp),
                        squeezelab::entangle::entropy(sp), temperature, thermal});
  }
  return rec;
}

OutputRecord ellipse_record(double eta, int n_points) {
  if (n_points < 8) throw std::invalid_argument("ellipse: need at least 8 points");
  const auto geometry = squeezelab::covariant::ellipse_geometry(SqueezeParam{eta});
  OutputRecord rec;
  rec.command = "ellipse";
  rec.parameters = {{"eta", eta},
                    {"points", n_points},
                    {"major", geometry.major},
                    {"minor", geometry.minor}};
  rec.columns = {"theta", "u", "v", "z", "t"};
  for (int i = 0; i < n_points; ++i) {
    const double theta = 2.0 * M_PI * i / n_points;
    const squeezelab::covariant::LightConePoint q{geometry.major * std::cos(theta),
                                                  geometry.minor * std::sin(theta)};
    const auto p = squeezelab::covariant::from_lightcone(q);
    rec.rows.push_back({theta, q.u, q.v, p.z, p.t});
  }
  return rec;
}

OutputRecord schmidt_record(double eta, int kmax) {
  if (kmax < 1) throw std::invalid_argument("schmidt: need kmax >= 1");
  const SqueezeParam sp{eta};
  const auto spectrum = squeezelab::entangle::schmidt_spectrum(sp, kmax);
  OutputRecord rec;
  rec.command = "schmidt";
  rec.parameters = {{"eta", eta},
                    {"kmax", kmax},
                    {"tail_bound", spectrum.tail_bound}};
  rec.columns = {"k", "coefficient", "p_k", "cumulative"};
  double cumulative = 0.0;
  for (int k = 0; k < kmax; ++k) {
    const double p = spectrum.eigenvalues[k];
    cumulative += p;
    if (k > 0 && p == 0.0) break;  // spectrum exactly exhausted
    rec.rows.push_back(
        {static_cast<double>(k), squeezelab::entangle::schmidt_coefficient(sp, k),
         p, cumulative});
  }
  return rec;
}

OutputRecord parton_record(double energy, double mass) {
  const auto kin = squeezelab::parton::parton_kinematics(energy, mass);
  const auto factors = squeezelab::parton::decoherence_factors(kin.eta);
  OutputRecord rec;
  rec.command = "parton";
  rec.parameters = {{"energy_gev", energy}, {"mass_gev", mass}};
  rec.columns = {"eta", "period_dilation", "crossing_contraction", "ratio"};
  rec.rows = {{kin.eta, factors.period_dilation, factors.crossing_contraction,
               kin.ratio}};
  return rec;
}

OutputRecord verify_record(const std::string& profile, bool& all_passed) {
  squeezelab::verify::Options options;
  options.quad_order = quad_order_from_env();
  if (profile == "strict") {
    options.strict = true;
  } else if (profile != "default") {
    throw std::invalid_argument("verify: profile must be default or strict");
  }
  const auto checks = squeezelab::verify::run_suite(options);

  OutputRecord rec;
  rec.command = "verify";
  rec.parameters = {{"profile", profile}, {"quad_order", options.quad_order}};
  rec.columns = {"analytic", "oracle", "abs_delta", "tolerance", "pass"};
  all_passed = true;
  for (const auto& check : checks) {
    rec.row_labels.push_back(check.name);
    rec.rows.push_back({check.analytic, check.measured, check.delta,
                        check.tolerance, check.passed ? 1.0 : 0.0});
    all_passed = all_passed && check.passed;
  }
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-mode squeezed states: coupled oscillators, space-time "
               "entanglement entropy, and parton decoherence"};
  app.require_subcommand(1);

  std::string format_name = "table";
  std::string out_path;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format: table, csv, json")
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to a file instead of stdout");
  };

  double m = 1.0, a = 1.0, c = 0.0;
  auto* cmd_diag = app.add_subcommand(
      "diagonalize", "normal modes of the coupled-oscillator Hamiltonian");
  add_common(cmd_diag);
  cmd_diag->add_option("--m", m, "oscillator mass")->capture_default_str();
  cmd_diag->add_option("--a", a, "diagonal potential coefficient")
      ->capture_default_str();
  cmd_diag->add_option("--c", c, "coupling coefficient")->capture_default_str();

  double eta_min = 0.0, eta_max = 2.0, omega = 1.0;
  int steps = 9;
  std::string mapping = "squared";
  auto* cmd_scan = app.add_subcommand(
      "entropy-scan", "purity, entanglement entropy, and the thermal mapping "
                      "over a range of eta");
  add_common(cmd_scan);
  cmd_scan->add_option("--eta-min", eta_min)->capture_default_str();
  cmd_scan->add_option("--eta-max", eta_max)->capture_default_str();
  cmd_scan->add_option("--steps", steps)->capture_default_str();
  cmd_scan->add_option("--omega", omega, "oscillator frequency")
      ->capture_default_str();
  cmd_scan->add_option("--mapping", mapping,
                       "eta<->temperature convention: squared (tanh^2 eta = "
                       "e^(-omega/T)) or linear (tanh eta = e^(-omega/T))")
      ->capture_default_str();

  double ellipse_eta = 1.0;
  int ellipse_points = 256;
  auto* cmd_ellipse = app.add_subcommand(
      "ellipse", "squeeze-ellipse boundary in light-cone and (z, t) coordinates");
  add_common(cmd_ellipse);
  cmd_ellipse->add_option("--eta", ellipse_eta)->capture_default_str();
  cmd_ellipse->add_option("--points", ellipse_points)->capture_default_str();

  double schmidt_eta = 1.0;
  int kmax = 16;
  auto* cmd_schmidt = app.add_subcommand(
      "schmidt", "Schmidt coefficients and reduced-density eigenvalues");
  add_common(cmd_schmidt);
  cmd_schmidt->add_option("--eta", schmidt_eta)->capture_default_str();
  cmd_schmidt->add_option("--kmax", kmax, "number of modes")->capture_default_str();

  double energy = 0.0, mass = squeezelab::parton::kProtonMassGeV;
  auto* cmd_parton = app.add_subcommand(
      "parton", "boost rapidity and decoherence ratio at a given lab energy");
  add_common(cmd_parton);
  cmd_parton->add_option("--energy", energy, "lab energy in GeV")->required();
  cmd_parton->add_option("--mass", mass, "hadron mass in GeV")
      ->capture_default_str();

  std::string profile = "default";
  auto* cmd_verify = app.add_subcommand(
      "verify", "run the analytic-vs-oracle check suite");
  add_common(cmd_verify);
  cmd_verify->add_option("--profile", profile, "default or strict")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format format = squeezelab::cli::parse_format(format_name);
    if (cmd_diag->parsed()) {
      emit(diagonalize_record(m, a, c), format, out_path);
    } else if (cmd_scan->parsed()) {
      emit(entropy_scan_record(eta_min, eta_max, steps, omega, mapping), format,
           out_path);
    } else if (cmd_ellipse->parsed()) {
      emit(ellipse_record(ellipse_eta, ellipse_points), format, out_path);
    } else if (cmd_schmidt->parsed()) {
      emit(schmidt_record(schmidt_eta, kmax), format, out_path);
    } else if (cmd_parton->parsed()) {
      emit(parton_record(energy, mass), format, out_path);
    } else if (cmd_verify->parsed()) {
      bool all_passed = false;
      emit(verify_record(profile, all_passed), format, out_path);
      if (!all_passed) {
        std::cerr << "verify: FAILED\n";
        return kExitVerifyFailed;
      }
      std::cerr << "verify: PASS\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
