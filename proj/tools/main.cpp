// Command-line front end: device evaluation, amplitude distributions, HOM
// contour tracing, coincidence landscapes and coefficient-table verification.
//
// Exit codes: 0 success, 2 flag/usage error, 3 table verification failure,
// 4 I/O failure.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triphoton/coupler.hpp"
#include "triphoton/interference.hpp"
#include "triphoton/io.hpp"
#include "triphoton/states.hpp"

namespace {

using namespace triphoton;

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing output file: " + path);
}

// Device parameters accepted either canonically (--G/--theta/--psi/--phi) or
// physically (--g1re/--g1im/--g2re/--g2im/--t); exactly one group.
struct DeviceOptions {
  double G = 0, theta = 0, psi = 0, phi = 0;
  double g1re = 0, g1im = 0, g2re = 0, g2im = 0, t = 0;
  CLI::Option* canonical[4] = {};
  CLI::Option* physical[5] = {};

  void attach(CLI::App* cmd) {
    canonical[0] = cmd->add_option("--G", G, "overall interaction strength");
    canonical[1] = cmd->add_option("--theta", theta, "coupling mixing angle (radians)");
    canonical[2] = cmd->add_option("--psi", psi, "phase of g1 (radians)");
    canonical[3] = cmd->add_option("--phi", phi, "phase of g2 (radians)");
    physical[0] = cmd->add_option("--g1re", g1re, "Re g1 (coupling mode1<->mode2)");
    physical[1] = cmd->add_option("--g1im", g1im, "Im g1");
    physical[2] = cmd->add_option("--g2re", g2re, "Re g2 (coupling mode2<->mode3)");
    physical[3] = cmd->add_option("--g2im", g2im, "Im g2");
    physical[4] = cmd->add_option("--t", t, "interaction time");
  }

  DeviceParams resolve() const {
    bool has_canonical = false, has_physical = false;
    for (const CLI::Option* o : canonical) has_canonical |= (o->count() > 0);
    for (const CLI::Option* o : physical) has_physical |= (o->count() > 0);
    if (has_canonical && has_physical) {
      throw UsageError("device accepts --G/--theta/--psi/--phi or --g1re/--g1im/--g2re/--g2im/--t, not both");
    }
    if (has_physical) {
      if (physical[4]->count() == 0) throw UsageError("physical parameterization requires --t");
      return canonicalize({{g1re, g1im}, {g2re, g2im}, t});
    }
    if (canonical[0]->count() == 0 || canonical[1]->count() == 0) {
      throw UsageError("canonical parameterization requires --G and --theta");
    }
    return {G, theta, psi, phi};
  }
};

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-photon interference in a three-waveguide coupler"};
  app.require_subcommand(1);

  std::string output_path;
  const auto with_output = [&output_path](CLI::App* cmd) {
    cmd->add_option("--output", output_path, "write results to this file instead of stdout");
    return cmd;
  };

  // ---- matrix ----
  auto* cmd_matrix = with_output(app.add_subcommand("matrix", "print the 3x3 transfer matrix"));
  DeviceOptions dev_matrix;
  dev_matrix.attach(cmd_matrix);
  std::string fmt_matrix = "text";
  cmd_matrix->add_option("--format", fmt_matrix, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- amplitudes ----
  auto* cmd_amps = with_output(app.add_subcommand("amplitudes", "output state for a Fock input"));
  DeviceOptions dev_amps;
  dev_amps.attach(cmd_amps);
  std::vector<int> input_occ = {1, 1, 1};
  cmd_amps->add_option("--input", input_occ, "input occupation k,l,m")
      ->delimiter(',')
      ->expected(3);
  std::string fmt_amps = "json";
  cmd_amps->add_option("--format", fmt_amps, "json")->check(CLI::IsMember({"json"}));

  // ---- c111 ----
  auto* cmd_c111 = with_output(app.add_subcommand("c111", "three-photon coincidence amplitude"));
  DeviceOptions dev_c111;
  dev_c111.attach(cmd_c111);
  std::string fmt_c111 = "text";
  cmd_c111->add_option("--format", fmt_c111, "text|json")->check(CLI::IsMember({"text", "json"}));

  // ---- classify ----
  auto* cmd_classify = with_output(app.add_subcommand("classify", "match the output state against the special-state families"));
  DeviceOptions dev_classify;
  dev_classify.attach(cmd_classify);
  double classify_tol = 1e-10;
  cmd_classify->add_option("--tol", classify_tol, "support/magnitude tolerance")
      ->check(CLI::PositiveNumber);
  std::string fmt_classify = "text";
  cmd_classify->add_option("--format", fmt_classify, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- contour ----
  auto* cmd_contour = with_output(app.add_subcommand("contour", "trace the HOM contour (analytic + numeric, merged)"));
  double c_gmin = 0.0, c_gmax = 4.0 * kPi, c_tmin = -kPi / 2.0, c_tmax = kPi;
  int c_gcount = 2000;
  double residual_tol = 1e-9;
  cmd_contour->add_option("--g-min", c_gmin, "lower end of the G range");
  cmd_contour->add_option("--g-max", c_gmax, "upper end of the G range");
  cmd_contour->add_option("--g-count", c_gcount, "number of G grid points")
      ->check(CLI::Range(1, 1000000));
  cmd_contour->add_option("--theta-min", c_tmin, "lower end of the theta window");
  cmd_contour->add_option("--theta-max", c_tmax, "upper end of the theta window");
  cmd_contour->add_option("--residual-tol", residual_tol, "|c111| acceptance threshold")
      ->check(CLI::PositiveNumber);
  std::string fmt_contour = "csv";
  cmd_contour->add_option("--format", fmt_contour, "csv")->check(CLI::IsMember({"csv"}));

  // ---- landscape ----
  auto* cmd_landscape = with_output(app.add_subcommand("landscape", "|c111|^2 grid over (G, theta)"));
  double l_gmin = 0.0, l_gmax = 4.0 * kPi, l_tmin = -kPi / 2.0, l_tmax = kPi;
  int l_gres = 161, l_tres = 121;
  cmd_landscape->add_option("--g-min", l_gmin, "lower end of the G range");
  cmd_landscape->add_option("--g-max", l_gmax, "upper end of the G range");
  cmd_landscape->add_option("--theta-min", l_tmin, "lower end of the theta range");
  cmd_landscape->add_option("--theta-max", l_tmax, "upper end of the theta range");
  cmd_landscape->add_option("--g-res", l_gres, "grid points along G")->check(CLI::Range(2, 100000));
  cmd_landscape->add_option("--theta-res", l_tres, "grid points along theta")
      ->check(CLI::Range(2, 100000));
  std::string fmt_landscape = "csv";
  cmd_landscape->add_option("--format", fmt_landscape, "csv")->check(CLI::IsMember({"csv"}));

  // ---- verify-tables ----
  auto* cmd_verify = with_output(app.add_subcommand("verify-tables", "check the special-state coefficient tables against evolution"));
  double verify_tol = 1e-10;
  cmd_verify->add_option("--tol", verify_tol, "per-coefficient tolerance")
      ->check(CLI::PositiveNumber);
  std::string fmt_verify = "text";
  cmd_verify->add_option("--format", fmt_verify, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_matrix->parsed()) {
      const Matrix3c v = transfer_matrix(dev_matrix.resolve());
      emit(fmt_matrix == "json" ? matrix_json(v) : matrix_grid(v), output_path);
    } else if (cmd_amps->parsed()) {
      if (input_occ[0] < 0 || input_occ[1] < 0 || input_occ[2] < 0) {
        throw UsageError("--input counts must be non-negative");
      }
      const Occupation input(input_occ[0], input_occ[1], input_occ[2]);
      emit(output_state_json(evolve(dev_amps.resolve(), input)), output_path);
    } else if (cmd_c111->parsed()) {
      const cdouble a = coincidence_amplitude(dev_c111.resolve());
      const double prob = std::norm(a);
      std::string out;
      if (fmt_c111 == "json") {
        out = "{\"re\":" + format_double(a.real() == 0.0 ? 0.0 : a.real()) +
              ",\"im\":" + format_double(a.imag() == 0.0 ? 0.0 : a.imag()) +
              ",\"prob\":" + format_double(prob) + "}\n";
      } else {
        out = "c111 = " + format_complex(a) + "\n|c111|^2 = " + format_double(prob) + "\n";
      }
      emit(out, output_path);
    } else if (cmd_classify->parsed()) {
      const StateClass cls =
          classify(evolve(dev_classify.resolve(), Occupation(1, 1, 1)), classify_tol);
      std::string out;
      if (fmt_classify == "json") {
        out = std::string("{\"family\":\"") + to_string(cls.family) + "\"";
        if (cls.family != StateFamily::unclassified) {
          out += ",\"modes\":[" + std::to_string(cls.modes[0]) + "," +
                 std::to_string(cls.modes[1]) + "," + std::to_string(cls.modes[2]) + "]";
        }
        out += "}\n";
      } else {
        out = to_string(cls.family);
        if (cls.family != StateFamily::unclassified) {
          out += " (j=" + std::to_string(cls.modes[0]) + ", k=" + std::to_string(cls.modes[1]) +
                 ", l=" + std::to_string(cls.modes[2]) + ")";
        }
        out += "\n";
      }
      emit(out, output_path);
    } else if (cmd_contour->parsed()) {
      std::vector<ContourPoint> merged;
      for (double g : linspace(c_gmin, c_gmax, c_gcount)) {
        std::vector<ContourPoint> at_g;
        for (const ContourPoint& p : hom_contour_analytic(g, residual_tol)) {
          if (p.theta >= c_tmin && p.theta <= c_tmax) at_g.push_back(p);
        }
        const auto numeric =
            hom_contour_numeric({g}, c_tmin, c_tmax, residual_tol * residual_tol);
        for (const ContourPoint& p : numeric) {
          bool duplicate = false;
          for (const ContourPoint& q : at_g) {
            if (std::fabs(q.theta - p.theta) <= 1e-8) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) at_g.push_back(p);
        }
        merged.insert(merged.end(), at_g.begin(), at_g.end());
      }
      emit(contour_csv(std::move(merged)), output_path);
    } else if (cmd_landscape->parsed()) {
      emit(landscape_csv(coincidence_landscape(l_gmin, l_gmax, l_tmin, l_tmax, l_gres, l_tres)),
           output_path);
    } else if (cmd_verify->parsed()) {
      const VerificationReport report = verify_fixtures(default_fixture_samples(), verify_tol);
      emit(fmt_verify == "json" ? report_json(report) : report_text(report), output_path);
      if (!report.all_pass()) return 3;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
