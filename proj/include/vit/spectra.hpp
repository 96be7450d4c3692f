#pragma once

// Closed-form stationary fluctuation spectra of the collective modes (A, B)
// and the vibrational mode. Red case reports S_c (normally ordered as
// <dc dc^dag>); blue case reports S'_{c^dag}, the <dc^dag dc> spectrum, which
// vanishes for a decoupled mode at zero temperature.

#include <span>
#include <vector>

#include "vit/model.hpp"

namespace vit {

enum class Mode { A, B };

// omega-dependent effective detuning and damping of the vibrational mode,
// primed versions for the blue case.
struct OmegaEffective {
  double delta_eff_w;
  double kappa_eff_w;
  double gamma_factor_a;  // Gamma_A(omega)
  double gamma_factor_b;  // Gamma_B(omega)
};

OmegaEffective omega_effective(const ModelParams& p, double delta, double omega);

// True when the vibrational-mode denominator |omega - delta_eff(omega) + i kappa_eff(omega)|
// drops below pole_threshold(p). Only reachable in the unstable blue regime.
bool spectral_pole(const ModelParams& p, double delta, double omega);

double vib_spectrum(const ModelParams& p, double delta, double omega);
double collective_spectrum(const ModelParams& p, double delta, double omega, Mode which);

struct SpectrumSeries {
  Sideband sideband;
  ModelParams params;
  double delta;
  std::vector<double> omega;
  std::vector<double> s_a;
  std::vector<double> s_b;
  std::vector<double> s_c;
};

// grid must be non-empty and strictly increasing.
SpectrumSeries spectrum_series(const ModelParams& p, double delta, std::span<const double> grid);

// n uniform points on [lo, hi]; n == 1 gives {lo}.
std::vector<double> uniform_grid(double lo, double hi, int n);

// 2001 points over [-20, 20].
std::vector<double> default_grid();

}  // namespace vit
