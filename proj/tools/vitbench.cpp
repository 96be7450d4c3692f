// vitbench: response and fluctuation spectra of two ion ensembles sharing a
// vibrational mode.
//
//   vitbench response    --case red --g-a 10 --g-b 10 --gamma-a 3 --gamma-b 3 --out response.csv
//   vitbench fluctuation --case red --g-a 10 --g-b 10 --gamma-a 5 --gamma-b 5 --delta 0
//   vitbench sweep       --axis1 delta --range1 -20:20:2001 --axis2 g_a --range2 2:10:5 --quantity response-a
//   vitbench stability   --case blue --g-a 10 --g-b 10 --gamma-a 5 --gamma-b 5 --delta-range -5:5:11
//   vitbench dressed     --case red --g-b 10
//
// Exit codes: 0 ok, 2 invalid arguments, 3 numerical failure, 4 I/O.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "vit/dressed.hpp"
#include "vit/errors.hpp"
#include "vit/oracle.hpp"
#include "vit/output.hpp"
#include "vit/spectra.hpp"
#include "vit/sweep.hpp"

namespace {

enum ExitCode { kOk = 0, kInvalid = 2, kNumerical = 3, kIo = 4 };

struct Range {
  double lo;
  double hi;
  int n;
};

Range parse_range(const std::string& text, const char* flag) {
  Range r{};
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.n, &tail) != 3)
    throw vit::InvalidArgument(std::string(flag) + " expects lo:hi:n, got '" + text + "'");
  if (r.n < 1) throw vit::InvalidArgument(std::string(flag) + " needs n >= 1");
  return r;
}

std::vector<double> grid_from(const Range& r) { return vit::uniform_grid(r.lo, r.hi, r.n); }

struct Options {
  std::string sideband = "red";
  vit::ModelParams params;
  double delta = 0.0;
  double omega = 0.0;
  std::string delta_range = "-20:20:2001";
  std::string omega_range = "-20:20:2001";
  std::string out;
  std::string svg;
  int workers = 1;
  bool require_stable = false;

  std::string axis1 = "delta";
  std::string range1 = "-20:20:2001";
  std::string axis2;
  std::string range2;
  std::string quantity = "response-a";

  int cap = -1;
  bool drive = false;
};

vit::ModelParams resolved_params(const Options& o) {
  vit::ModelParams p = o.params;
  p.sideband = vit::parse_sideband(o.sideband);
  p.validate();
  return p;
}

void require_stable(const vit::ModelParams& p, std::span<const double> deltas) {
  for (double d : deltas) {
    const auto r = vit::stability(vit::build_drift(p, d, vit::fluct_kind(p.sideband)));
    if (!r.stable) {
      throw vit::NumericalError(vit::NumericalError::Kind::Unstable,
                                std::string(vit::to_string(p.sideband)) + " system unstable at delta = " +
                                    vit::format_number(d) +
                                    " (max Re(lambda) = " + vit::format_number(r.max_real_eig) + ")");
    }
  }
}

void write_outputs(const vit::Table& t, const Options& o, const std::string& title) {
  if (o.out.empty()) {
    vit::write_csv(t, std::cout);
  } else {
    vit::emit_csv(t, o.out);
  }
  if (!o.svg.empty()) {
    vit::SvgSpec spec = vit::default_svg_spec(t);
    spec.title = title;
    vit::emit_svg(t, o.svg, spec);
  }
}

std::string title_for(const char* what, const vit::ModelParams& p) {
  return std::string(what) + " (" + std::string(vit::to_string(p.sideband)) + ", g_a=" + vit::format_number(p.g_a) +
         ", g_b=" + vit::format_number(p.g_b) + ", gamma_a=" + vit::format_number(p.gamma_a) +
         ", gamma_b=" + vit::format_number(p.gamma_b) + ")";
}

void run_response(const Options& o) {
  const auto p = resolved_params(o);
  const auto deltas = grid_from(parse_range(o.delta_range, "--delta-range"));
  if (o.require_stable) require_stable(p, deltas);
  write_outputs(vit::response_table(p, deltas, o.workers), o, title_for("response", p));
}

void run_fluctuation(const Options& o) {
  const auto p = resolved_params(o);
  const auto omegas = grid_from(parse_range(o.omega_range, "--omega-range"));
  if (o.require_stable) require_stable(p, std::span<const double>(&o.delta, 1));
  write_outputs(vit::fluctuation_table(p, o.delta, omegas, o.workers), o, title_for("fluctuation", p));
}

void run_sweep(const Options& o) {
  vit::SweepSpec spec;
  spec.base = resolved_params(o);
  const Range r1 = parse_range(o.range1, "--range1");
  spec.axis1 = {vit::parse_axis(o.axis1), r1.lo, r1.hi, r1.n};
  if (!o.axis2.empty()) {
    if (o.range2.empty()) throw vit::InvalidArgument("--axis2 needs --range2");
    const Range r2 = parse_range(o.range2, "--range2");
    spec.axis2 = vit::AxisRange{vit::parse_axis(o.axis2), r2.lo, r2.hi, r2.n};
  }
  spec.quantity = vit::parse_quantity(o.quantity);
  spec.delta = o.delta;
  spec.omega = o.omega;
  write_outputs(vit::run_sweep(spec, o.workers), o, title_for("sweep", spec.base));
}

void run_stability(const Options& o) {
  const auto p = resolved_params(o);
  const auto deltas = grid_from(parse_range(o.delta_range, "--delta-range"));
  write_outputs(vit::stability_table(p, deltas, o.workers), o, title_for("stability", p));
}

void run_dressed(const Options& o) {
  const auto p = resolved_params(o);
  const int cap = o.cap >= 0 ? o.cap : vit::default_cap(p.sideband);
  const auto h = vit::build_hamiltonian(p, o.delta, vit::build_basis(cap), o.drive);
  const Eigen::VectorXd e = vit::energies(h);

  std::cout << "case " << vit::to_string(p.sideband) << ", cap " << cap << ", delta " << vit::format_number(o.delta)
            << (o.drive ? ", drive on" : "") << "\n";
  std::cout << "basis";
  for (const auto& s : h.basis) std::cout << ' ' << vit::to_string(s);
  std::cout << "\nenergies";
  for (int i = 0; i < e.size(); ++i) std::cout << ' ' << vit::format_number(e(i));
  std::cout << '\n';

  if (p.g_a == 0.0) {
    const auto pair = vit::dressed_pair(p, o.delta);
    for (int k = 0; k < 2; ++k) {
      std::cout << "dressed " << (k == 0 ? "-" : "+") << " energy " << vit::format_number(pair.energies(k)) << " = ";
      for (int r = 0; r < 2; ++r) {
        const auto z = pair.vectors(r, k);
        std::cout << (r ? " + " : "") << "(" << vit::format_number(z.real()) << (z.imag() < 0 ? "" : "+")
                  << vit::format_number(z.imag()) << "i)" << vit::to_string(pair.states[r]);
      }
      std::cout << '\n';
    }
  } else {
    std::cout << "dressed pair: requires g_a = 0\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Response and fluctuation spectra of two trapped-ion ensembles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key = value file mirroring the long flags; flags override it");
  app.allow_config_extras(false);

  Options o;
  app.add_option("--case", o.sideband, "Sideband: red or blue")->check(CLI::IsMember({"red", "blue"}));
  app.add_option("--g-a", o.params.g_a, "Coupling of ensemble A to the vibrational mode");
  app.add_option("--g-b", o.params.g_b, "Coupling of ensemble B to the vibrational mode");
  app.add_option("--gamma-a", o.params.gamma_a, "Decay rate of collective mode A");
  app.add_option("--gamma-b", o.params.gamma_b, "Decay rate of collective mode B");
  app.add_option("--kappa", o.params.kappa, "Heating rate (unit of frequency)");
  app.add_option("--chi", o.params.chi, "Drive strength");
  app.add_option("--n-vib", o.params.n_vib, "Thermal occupation of the vibrational bath");
  app.add_option("--n-eg", o.params.n_eg, "Thermal occupation of the ensemble baths");
  app.add_option("--delta", o.delta, "Fixed probe detuning");
  app.add_option("--delta-range", o.delta_range, "Detuning grid lo:hi:n");
  app.add_option("--omega-range", o.omega_range, "Frequency grid lo:hi:n");
  app.add_option("--out", o.out, "CSV output file (stdout if omitted)");
  app.add_option("--svg", o.svg, "SVG plot output file");
  app.add_option("--workers", o.workers, "Worker threads (0 = all cores)");

  auto* response = app.add_subcommand("response", "Steady-state response |A_s/chi|^2, |B_s/chi|^2 over detuning");
  auto* fluctuation = app.add_subcommand("fluctuation", "Fluctuation spectra S_A, S_B, S_c over omega");
  auto* sweep = app.add_subcommand("sweep", "One- or two-axis parameter sweep of a single quantity");
  auto* stab = app.add_subcommand("stability", "Drift-matrix stability over detuning");
  auto* dressed = app.add_subcommand("dressed", "Truncated Fock-space levels and the dressed pair");

  for (auto* sub : {response, fluctuation}) {
    sub->add_flag("--require-stable", o.require_stable, "Fail with exit code 3 if the system is unstable");
  }
  sweep->add_option("--axis1", o.axis1, "delta, omega, g_a, g_b, gamma_a or gamma_b");
  sweep->add_option("--range1", o.range1, "lo:hi:n for axis1");
  sweep->add_option("--axis2", o.axis2, "Optional outer axis");
  sweep->add_option("--range2", o.range2, "lo:hi:n for axis2");
  sweep->add_option("--quantity", o.quantity, "response-a, response-b, spectrum-a, spectrum-b or spectrum-c");
  sweep->add_option("--omega", o.omega, "Fixed frequency for spectrum quantities");
  dressed->add_option("--cap", o.cap, "Total excitation cap (default 1 red, 2 blue)");
  dressed->add_flag("--drive", o.drive, "Include the chi (A^dag + A) drive term");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (response->parsed()) run_response(o);
    if (fluctuation->parsed()) run_fluctuation(o);
    if (sweep->parsed()) run_sweep(o);
    if (stab->parsed()) run_stability(o);
    if (dressed->parsed()) run_dressed(o);
  } catch (const vit::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const vit::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const vit::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
