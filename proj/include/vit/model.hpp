#pragma once

// Closed-form steady state of two driven ion ensembles (collective modes A, B)
// sharing one vibrational mode c, for red- and blue-sideband addressing.
//
// All rates are in units of the heating rate kappa (default 1). The probe
// detuning delta = omega_eg - omega_f is passed per evaluation, not stored.

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace vit {

using cplx = std::complex<double>;

enum class Sideband { Red, Blue };

std::string_view to_string(Sideband s);
Sideband parse_sideband(std::string_view s);

// Laboratory-level description of the trap. Only the combinations entering
// the bosonized Hamiltonian are used downstream.
struct MicroscopicParams {
  int n_ions_a = 1;
  int n_ions_b = 1;
  double drive_amplitude = 1.0;  // epsilon
  double rabi = 1.0;             // Omega
  double lamb_dicke = 0.1;       // eta, in (0, 0.3]
  double trap_freq = 1.0;        // nu
  double transition_freq = 1.0;  // omega_eg
  double laser_freq = 1.0;       // omega_i
  double probe_freq = 1.0;       // omega_f

  void validate() const;
};

struct ModelParams {
  Sideband sideband = Sideband::Red;
  double g_a = 0.0;
  double g_b = 0.0;
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  double kappa = 1.0;
  double chi = 1.0;
  double n_vib = 0.0;  // thermal occupation N(nu)
  double n_eg = 0.0;   // thermal occupation N(omega_eg)

  void validate() const;
  bool operator==(const ModelParams&) const = default;
};

struct Couplings {
  double g_a;
  double g_b;
  double chi;
};

// chi = sqrt(N_a) eps, g_y = eta sqrt(N_y) Omega.
Couplings effective_params(const MicroscopicParams& micro);

// Probe detuning omega_eg - omega_f.
double probe_detuning(const MicroscopicParams& micro);

// For Sideband::Blue the primed quantities (2 kappa - kappa_eff, 2 delta - delta_eff,
// F'_A) are stored in the same fields.
struct EffectiveQuantities {
  Sideband sideband;
  cplx f_a;
  cplx f_b;
  cplx f_factor_a;  // F_A
  double delta_eff;
  double kappa_eff;
};

EffectiveQuantities effective_quantities(const ModelParams& p, double delta);

struct SteadyState {
  cplx a_s;
  cplx b_s;
  cplx c_s;
  // Blue case only: |delta'_eff - i kappa'_eff| below pole_threshold(p).
  bool pole = false;
};

// Denominator modulus below which blue-case amplitudes are flagged as a pole.
double pole_threshold(const ModelParams& p);

SteadyState steady_state(const ModelParams& p, double delta);

struct ResponseIntensity {
  double a;  // |A_s / chi|^2
  double b;  // |B_s / chi|^2
};

ResponseIntensity response_intensity(const SteadyState& s, double chi);

struct PoleScan {
  double lo = -50.0;
  double hi = 50.0;
  int points = 4001;
};

// Real detunings where delta'_eff and kappa'_eff vanish together. Blue case only.
std::vector<double> blue_poles(const ModelParams& p, const PoleScan& window = {});

enum class Coupling { A, B };

// Coupling strength (g_a or g_b, the other held fixed) at which the blue-case
// central denominator closes, kappa'_eff(0) = 0, found by bisection on [lo, hi].
std::optional<double> find_pole_coupling(const ModelParams& p, Coupling which, double lo, double hi,
                                         double tol = 1e-13);

}  // namespace vit
