#include "vit/spectra.hpp"

#include <cmath>

#include "vit/errors.hpp"

namespace vit {

namespace {

struct Shifts {
  double kappa_shift;  // sum g^2 gamma / (u^2 + gamma^2)
  double delta_shift;  // sum g^2 u / (u^2 + gamma^2)
};

Shifts shifts(const ModelParams& p, double u) {
  const double la = u * u + p.gamma_a * p.gamma_a;
  const double lb = u * u + p.gamma_b * p.gamma_b;
  const double ga2 = p.g_a * p.g_a;
  const double gb2 = p.g_b * p.g_b;
  return {ga2 * p.gamma_a / la + gb2 * p.gamma_b / lb, ga2 * u / la + gb2 * u / lb};
}

double vib_denominator(double omega, const OmegaEffective& e) {
  const double x = omega - e.delta_eff_w;
  return x * x + e.kappa_eff_w * e.kappa_eff_w;
}

}  // namespace

OmegaEffective omega_effective(const ModelParams& p, double delta, double omega) {
  const double u = omega - delta;
  const Shifts s = shifts(p, u);

  OmegaEffective e{};
  if (p.sideband == Sideband::Red) {
    e.kappa_eff_w = p.kappa + s.kappa_shift;
    e.delta_eff_w = delta + s.delta_shift;
  } else {
    e.kappa_eff_w = p.kappa - s.kappa_shift;
    e.delta_eff_w = delta - s.delta_shift;
  }

  const double vib = vib_denominator(omega, e);
  auto gamma_factor = [&](double gamma) {
    return (u * (omega - e.delta_eff_w) - gamma * e.kappa_eff_w) / (vib * (u * u + gamma * gamma));
  };
  e.gamma_factor_a = gamma_factor(p.gamma_a);
  e.gamma_factor_b = gamma_factor(p.gamma_b);
  return e;
}

bool spectral_pole(const ModelParams& p, double delta, double omega) {
  const OmegaEffective e = omega_effective(p, delta, omega);
  return std::sqrt(vib_denominator(omega, e)) < pole_threshold(p);
}

namespace {

double vib_spectrum_from(const ModelParams& p, double omega, const OmegaEffective& e) {
  const double bath = 2.0 * (p.n_eg + 1.0);
  double numerator;
  if (p.sideband == Sideband::Red) {
    numerator = 2.0 * p.kappa * (p.n_vib + 1.0) + bath * (e.kappa_eff_w - p.kappa);
  } else {
    numerator = 2.0 * p.kappa * p.n_vib + bath * (p.kappa - e.kappa_eff_w);
  }
  return numerator / vib_denominator(omega, e);
}

double collective_from(const ModelParams& p, double delta, double omega, const OmegaEffective& e, double s_c,
                       Mode which) {
  const bool is_a = which == Mode::A;
  const double g = is_a ? p.g_a : p.g_b;
  const double gamma = is_a ? p.gamma_a : p.gamma_b;
  const double gamma_factor = is_a ? e.gamma_factor_a : e.gamma_factor_b;
  const double sign = p.sideband == Sideband::Red ? 1.0 : -1.0;
  const double u = omega - delta;

  const double direct = 2.0 * gamma * (p.n_eg + 1.0) * (1.0 + sign * 2.0 * g * g * gamma_factor);
  return (g * g * s_c + direct) / (u * u + gamma * gamma);
}

}  // namespace

double vib_spectrum(const ModelParams& p, double delta, double omega) {
  return vib_spectrum_from(p, omega, omega_effective(p, delta, omega));
}

double collective_spectrum(const ModelParams& p, double delta, double omega, Mode which) {
  const OmegaEffective e = omega_effective(p, delta, omega);
  return collective_from(p, delta, omega, e, vib_spectrum_from(p, omega, e), which);
}

SpectrumSeries spectrum_series(const ModelParams& p, double delta, std::span<const double> grid) {
  p.validate();
  if (grid.empty()) throw InvalidArgument("spectrum grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InvalidArgument("spectrum grid must be strictly increasing");
  }

  SpectrumSeries out{p.sideband, p, delta, {grid.begin(), grid.end()}, {}, {}, {}};
  out.s_a.reserve(grid.size());
  out.s_b.reserve(grid.size());
  out.s_c.reserve(grid.size());
  for (double omega : grid) {
    const OmegaEffective e = omega_effective(p, delta, omega);
    const double s_c = vib_spectrum_from(p, omega, e);
    out.s_c.push_back(s_c);
    out.s_a.push_back(collective_from(p, delta, omega, e, s_c, Mode::A));
    out.s_b.push_back(collective_from(p, delta, omega, e, s_c, Mode::B));
  }
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1) throw InvalidArgument("grid needs at least one point");
  if (n == 1) return {lo};
  if (!(lo < hi)) throw InvalidArgument("grid bounds must satisfy lo < hi");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double step = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) g[i] = lo + i * step;
  g.back() = hi;
  return g;
}

std::vector<double> default_grid() { return uniform_grid(-20.0, 20.0, 2001); }

}  // namespace vit
