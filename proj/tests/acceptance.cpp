// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Tolerances are fixed here and never loosened to make a run pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/random_params.hpp"
#include "support/sum_rule.hpp"
#include "vit/dressed.hpp"
#include "vit/errors.hpp"
#include "vit/lineshape.hpp"
#include "vit/oracle.hpp"
#include "vit/output.hpp"
#include "vit/spectra.hpp"
#include "vit/sweep.hpp"

using namespace vit;
using vit::testing::ParamGen;
using vit::testing::rel_err;

namespace {

constexpr double kSteadyTol = 1e-10;
constexpr double kSpectrumTol = 1e-8;
constexpr double kSumRuleTol = 1e-3;
constexpr double kAnchorTol = 1e-12;
constexpr double kSymmetryTol = 1e-12;
constexpr double kDressedTol = 1e-12;
constexpr double kHermitianTol = 1e-14;
constexpr double kPoleTol = 1e-9;
constexpr double kBaseline = 0.04;  // 1/gamma_a^2 at gamma_a = 5

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

ModelParams make(Sideband s, double g_a, double g_b, double gamma_a, double gamma_b) {
  ModelParams p;
  p.sideband = s;
  p.g_a = g_a;
  p.g_b = g_b;
  p.gamma_a = gamma_a;
  p.gamma_b = gamma_b;
  return p;
}

Outcome ac1_steady_state() {
  ParamGen gen(0xac0001);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = i < 500 ? gen.red() : gen.blue_stable();
    const double d = gen.delta();
    const auto closed = steady_state(p, d);
    const auto lin = steady_state_linear(build_drift(p, d, mean_kind(p.sideband)));
    worst = std::max({worst, rel_err(closed.a_s, lin.a_s), rel_err(closed.b_s, lin.b_s), rel_err(closed.c_s, lin.c_s)});
  }
  return {worst <= kSteadyTol, "500 red + 500 stable blue sets, worst rel err " + num(worst) + " (tol 1e-10)"};
}

Outcome ac2_window_counts() {
  const auto grid = default_grid();
  struct Panel {
    double gamma_a, gamma_b;
    int a, b;
  };
  bool ok = true;
  std::string got;
  for (const Panel& panel : {Panel{3, 3, 2, 2}, Panel{30, 30, 1, 0}, Panel{30, 3, 2, 1}, Panel{3, 30, 1, 1}}) {
    const auto p = make(Sideband::Red, 10, 10, panel.gamma_a, panel.gamma_b);
    std::vector<double> a, b;
    for (double d : grid) {
      const auto r = response_intensity(steady_state(p, d), p.chi);
      a.push_back(r.a);
      b.push_back(r.b);
    }
    const int na = count_transparency_windows(a, 0.05);
    const int nb = count_transparency_windows(b, 0.05);
    ok = ok && na == panel.a && nb == panel.b;
    got += (got.empty() ? "" : "/") + std::string("(") + std::to_string(na) + "," + std::to_string(nb) + ")";
  }
  return {ok, "window counts " + got + ", expected (2,2)/(1,0)/(2,1)/(1,1)"};
}

Outcome ac3_dip_depth() {
  const auto grid = default_grid();
  std::vector<double> depths;
  for (double g_a : {2.0, 4.0, 6.0, 8.0, 10.0}) {
    const auto p = make(Sideband::Red, g_a, 1.0, 5.0, 5.0);
    std::vector<double> a;
    for (double d : grid) a.push_back(response_intensity(steady_state(p, d), p.chi).a);
    depths.push_back(central_dip_depth(grid, a));
  }
  bool ok = true;
  std::string text;
  for (std::size_t i = 0; i < depths.size(); ++i) {
    if (i > 0) ok = ok && depths[i] > depths[i - 1];
    text += (i ? ", " : "") + num(depths[i]);
  }
  return {ok, "dip depths at g_a = 2..10: " + text};
}

Outcome ac4_blue_conversion() {
  auto blue = [](double g_a) { return make(Sideband::Blue, g_a, 1.0, 5.0, 5.0); };
  const double via = response_intensity(steady_state(blue(1.0), 0.0), 1.0).a;
  const bool pole = steady_state(blue(2.0), 0.0).pole;
  const double vit_value = response_intensity(steady_state(blue(6.0), 0.0), 1.0).a;
  const auto g = find_pole_coupling(blue(0.0), Coupling::A, 0.0, 10.0);
  const double pole_err = g ? std::abs(*g - 2.0) : INFINITY;
  const bool ok = via > kBaseline && pole && vit_value < kBaseline && pole_err <= kPoleTol;
  return {ok, "|A'/chi|^2 = " + num(via) + " at g_a=1, pole at g_a=2: " + (pole ? "yes" : "no") + ", " +
                  num(vit_value) + " at g_a=6, bisected pole error " + num(pole_err) + " (tol 1e-9)"};
}

Outcome ac5_spectrum_oracle() {
  ParamGen gen(0xac0005);
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const ModelParams p = i < 200 ? gen.red(true) : gen.blue_stable(true);
    const double d = gen.delta();
    const auto sys = build_drift(p, d, fluct_kind(p.sideband));
    for (int k = 0; k < 101; ++k) {
      const double w = d - 30.0 + 0.6 * k;
      const auto o = mode_spectra(sys, w);
      worst = std::max({worst, rel_err(collective_spectrum(p, d, w, Mode::A), o.s_a),
                        rel_err(collective_spectrum(p, d, w, Mode::B), o.s_b), rel_err(vib_spectrum(p, d, w), o.s_c)});
    }
  }
  return {worst <= kSpectrumTol, "200 red + 200 stable blue sets x 101 omega, worst rel err " + num(worst) + " (tol 1e-8)"};
}

Outcome ac6_sum_rule() {
  ParamGen gen(0xac0006);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = gen.red(true);
    const double d = gen.delta();
    const auto v = covariance_lyapunov(build_drift(p, d, DriftKind::FluctRed));
    const double ia = vit::testing::integrate_spectrum([&](double w) { return collective_spectrum(p, d, w, Mode::A); }, p, d, p.gamma_a);
    const double ib = vit::testing::integrate_spectrum([&](double w) { return collective_spectrum(p, d, w, Mode::B); }, p, d, p.gamma_b);
    const double ic = vit::testing::integrate_spectrum([&](double w) { return vib_spectrum(p, d, w); }, p, d, p.kappa);
    worst = std::max({worst, rel_err(ia, v(1, 1).real()), rel_err(ib, v(2, 2).real()), rel_err(ic, v(0, 0).real())});
  }
  return {worst <= kSumRuleTol, "20 red sets, S_A, S_B, S_c, worst rel err " + num(worst) + " (tol 1e-3)"};
}

Outcome ac7_lorentzian() {
  double worst = 0.0;
  for (auto s : {Sideband::Red, Sideband::Blue}) {
    for (double gamma_a : {0.1, 1.0, 5.0, 30.0}) {
      const auto p = make(s, 0.0, 0.0, gamma_a, 2.0);
      for (double d : {-17.0, -1.5, 0.0, 0.3, 12.0}) {
        const double r = response_intensity(steady_state(p, d), p.chi).a;
        worst = std::max(worst, rel_err(r, 1.0 / (d * d + gamma_a * gamma_a)));
        worst = std::max(worst, rel_err(collective_spectrum(p, d, d, Mode::A), 2.0 / gamma_a));
      }
    }
  }
  return {worst <= kAnchorTol, "g = 0 response and S_A peak, worst rel err " + num(worst) + " (tol 1e-12)"};
}

Outcome ac8_symmetry() {
  ParamGen gen(0xac0008);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ModelParams p = gen.red(true);
    if (i % 2) p.sideband = Sideband::Blue;
    const double d = gen.delta();
    const double w = gen.uniform(-30.0, 30.0);
    const double plus = std::norm(steady_state(p, d).a_s);
    const double minus = std::norm(steady_state(p, -d).a_s);
    worst = std::max(worst, rel_err(plus, minus));
    worst = std::max({worst, rel_err(collective_spectrum(p, 0.0, w, Mode::A), collective_spectrum(p, 0.0, -w, Mode::A)),
                      rel_err(collective_spectrum(p, 0.0, w, Mode::B), collective_spectrum(p, 0.0, -w, Mode::B)),
                      rel_err(vib_spectrum(p, 0.0, w), vib_spectrum(p, 0.0, -w))});
  }
  return {worst <= kSymmetryTol, "1000 points, |A_s|^2 in delta and S_A, S_B, S_c in omega, worst rel err " +
                                     num(worst) + " (tol 1e-12)"};
}

Outcome ac9_stability() {
  const auto strong = build_drift(make(Sideband::Blue, 10, 10, 5, 5), 0.0, DriftKind::FluctBlue);
  const auto weak = build_drift(make(Sideband::Blue, 1, 1, 5, 5), 0.0, DriftKind::FluctBlue);
  const auto rs = stability(strong);
  const auto rw = stability(weak);

  bool diverged = false;
  Eigen::VectorXcd kick = Eigen::VectorXcd::Zero(strong.dim);
  kick(0) = 1e-6;
  try {
    integrate_mean(strong, kick, 100.0, 1e-3);
  } catch (const NumericalError& e) {
    diverged = e.kind() == NumericalError::Kind::Diverged;
  }
  const bool ok = !rs.stable && rw.stable && diverged;
  return {ok, "g=10 max Re = " + num(rs.max_real_eig) + (rs.stable ? " stable" : " unstable") +
                  ", g=1 max Re = " + num(rw.max_real_eig) + (rw.stable ? " stable" : " unstable") +
                  ", RK4 divergence " + (diverged ? "diagnosed" : "missed")};
}

Outcome ac10_dressed() {
  ParamGen gen(0xac0010);
  double worst_e = 0.0, worst_h = 0.0;
  for (int i = 0; i < 500; ++i) {
    ModelParams p;
    p.g_b = gen.log_uniform(0.1, 50.0);
    const double d = gen.delta();
    const auto pair = dressed_pair(p, d);
    worst_e = std::max({worst_e, std::abs(pair.energies(0) - (d - p.g_b)), std::abs(pair.energies(1) - (d + p.g_b))});

    ModelParams q = gen.red(true);
    if (i % 2) q.sideband = Sideband::Blue;
    const auto h = build_hamiltonian(q, d, build_basis(1 + i % 3), i % 4 != 0);
    worst_h = std::max(worst_h, (h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff());
  }
  const bool ok = worst_e <= kDressedTol && worst_h <= kHermitianTol;
  return {ok, "500 pairs, worst |E - (delta +/- g_b)| " + num(worst_e) + " (tol 1e-12), worst Hermiticity defect " +
                  num(worst_h) + " (tol 1e-14)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome ac11_determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "vit_acceptance";
  std::filesystem::create_directories(dir);
  const auto grid = default_grid();

  std::vector<std::function<Table(int)>> datasets{
      [&](int w) { return response_table(make(Sideband::Red, 10, 10, 3, 3), grid, w); },
      [&](int w) { return response_table(make(Sideband::Blue, 2, 1, 5, 5), grid, w); },
      [&](int w) { return fluctuation_table(make(Sideband::Red, 10, 10, 5, 5), 0.0, grid, w); },
      [&](int w) { return stability_table(make(Sideband::Blue, 10, 10, 5, 5), uniform_grid(-5, 5, 101), w); },
      [&](int w) {
        SweepSpec spec;
        spec.base = make(Sideband::Blue, 0, 1, 5, 5);
        spec.axis1 = {SweepAxis::Omega, -20, 20, 2001};
        spec.axis2 = AxisRange{SweepAxis::GA, 0, 8, 5};
        spec.quantity = Quantity::SpectrumA;
        return run_sweep(spec, w);
      },
  };

  int mismatches = 0, files = 0;
  for (std::size_t k = 0; k < datasets.size(); ++k) {
    std::string csv_ref, svg_ref;
    int run = 0;
    for (int workers : {1, 1, 4, 0}) {
      const Table t = datasets[k](workers);
      const auto csv = dir / ("d" + std::to_string(k) + "_" + std::to_string(run) + ".csv");
      const auto svg = dir / ("d" + std::to_string(k) + "_" + std::to_string(run) + ".svg");
      emit_csv(t, csv);
      emit_svg(t, svg, default_svg_spec(t));
      files += 2;
      if (run == 0) {
        csv_ref = slurp(csv);
        svg_ref = slurp(svg);
      } else {
        mismatches += slurp(csv) != csv_ref;
        mismatches += slurp(svg) != svg_ref;
      }
      ++run;
    }
  }
  return {mismatches == 0, std::to_string(files) + " files over repeats and 1/4/all workers, " +
                               std::to_string(mismatches) + " byte mismatches"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1 steady-state oracle equivalence", ac1_steady_state},
      {"AC2 window counts for the four decay-rate combinations", ac2_window_counts},
      {"AC3 dip depth monotone in g_a", ac3_dip_depth},
      {"AC4 blue VIA to VIT conversion and pole", ac4_blue_conversion},
      {"AC5 spectrum oracle equivalence", ac5_spectrum_oracle},
      {"AC6 sum rule against Lyapunov covariance", ac6_sum_rule},
      {"AC7 Lorentzian anchors", ac7_lorentzian},
      {"AC8 symmetry suite", ac8_symmetry},
      {"AC9 stability ledger and divergence", ac9_stability},
      {"AC10 dressed pair and Hermiticity", ac10_dressed},
      {"AC11 determinism of CSV and SVG", ac11_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
