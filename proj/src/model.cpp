#include "vit/model.hpp"

#include <cmath>
#include <string>

#include "vit/errors.hpp"

namespace vit {

namespace {

constexpr cplx I{0.0, 1.0};

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

double kappa_prime_at_zero(const ModelParams& p) {
  return p.kappa - p.g_a * p.g_a / p.gamma_a - p.g_b * p.g_b / p.gamma_b;
}

}  // namespace

std::string_view to_string(Sideband s) { return s == Sideband::Red ? "red" : "blue"; }

Sideband parse_sideband(std::string_view s) {
  if (s == "red") return Sideband::Red;
  if (s == "blue") return Sideband::Blue;
  throw InvalidArgument("unknown sideband '" + std::string(s) + "' (expected red or blue)");
}

void MicroscopicParams::validate() const {
  if (n_ions_a < 1 || n_ions_b < 1) throw InvalidArgument("ion counts must be >= 1");
  if (!(lamb_dicke > 0.0 && lamb_dicke <= 0.3))
    throw InvalidArgument("Lamb-Dicke parameter must lie in (0, 0.3]");
  for (double f : {drive_amplitude, rabi, trap_freq, transition_freq, laser_freq, probe_freq}) {
    if (!(std::isfinite(f) && f > 0.0)) throw InvalidArgument("frequencies must be finite and > 0");
  }
}

void ModelParams::validate() const {
  if (!finite_nonneg(g_a) || !finite_nonneg(g_b)) throw InvalidArgument("couplings must be finite and >= 0");
  if (!finite_nonneg(chi)) throw InvalidArgument("drive strength chi must be finite and >= 0");
  if (!finite_nonneg(n_vib) || !finite_nonneg(n_eg))
    throw InvalidArgument("thermal occupations must be finite and >= 0");
  for (double r : {gamma_a, gamma_b, kappa}) {
    if (!(std::isfinite(r) && r > 0.0)) throw InvalidArgument("decay and heating rates must be finite and > 0");
  }
}

Couplings effective_params(const MicroscopicParams& micro) {
  micro.validate();
  const double lamb_rabi = micro.lamb_dicke * micro.rabi;
  return {lamb_rabi * std::sqrt(static_cast<double>(micro.n_ions_a)),
          lamb_rabi * std::sqrt(static_cast<double>(micro.n_ions_b)),
          std::sqrt(static_cast<double>(micro.n_ions_a)) * micro.drive_amplitude};
}

double probe_detuning(const MicroscopicParams& micro) { return micro.transition_freq - micro.probe_freq; }

EffectiveQuantities effective_quantities(const ModelParams& p, double delta) {
  const double d2 = delta * delta;
  const double la = d2 + p.gamma_a * p.gamma_a;
  const double lb = d2 + p.gamma_b * p.gamma_b;
  const double ga2 = p.g_a * p.g_a;
  const double gb2 = p.g_b * p.g_b;

  EffectiveQuantities q;
  q.sideband = p.sideband;
  q.f_a = p.g_a / cplx(delta, -p.gamma_a);
  q.f_b = p.g_b / cplx(delta, -p.gamma_b);

  const double kappa_shift = ga2 * p.gamma_a / la + gb2 * p.gamma_b / lb;
  const double delta_shift = delta * (ga2 / la + gb2 / lb);
  if (p.sideband == Sideband::Red) {
    q.kappa_eff = p.kappa + kappa_shift;
    q.delta_eff = delta - delta_shift;
    q.f_factor_a = 1.0 + p.g_a * q.f_a / cplx(q.delta_eff, -q.kappa_eff);
  } else {
    q.kappa_eff = p.kappa - kappa_shift;
    q.delta_eff = delta + delta_shift;
    q.f_factor_a = 1.0 - p.g_a * q.f_a / cplx(q.delta_eff, -q.kappa_eff);
  }
  return q;
}

double pole_threshold(const ModelParams& p) { return 1e-8 * p.kappa; }

SteadyState steady_state(const ModelParams& p, double delta) {
  const EffectiveQuantities q = effective_quantities(p, delta);
  const cplx denom(q.delta_eff, -q.kappa_eff);
  const double chi = p.chi;

  SteadyState s;
  s.a_s = -chi * q.f_factor_a / cplx(delta, -p.gamma_a);
  if (p.sideband == Sideband::Red) {
    s.b_s = -chi * q.f_a * q.f_b / denom;
    s.c_s = -I * chi * q.f_a / denom;
  } else {
    s.b_s = chi * q.f_a * q.f_b / denom;
    s.c_s = -I * chi * std::conj(q.f_a) / std::conj(denom);
    s.pole = std::abs(denom) < pole_threshold(p);
  }
  return s;
}

ResponseIntensity response_intensity(const SteadyState& s, double chi) {
  if (!(chi > 0.0)) throw InvalidArgument("response intensity needs chi > 0");
  return {std::norm(s.a_s / chi), std::norm(s.b_s / chi)};
}

std::vector<double> blue_poles(const ModelParams& p, const PoleScan& window) {
  if (p.sideband != Sideband::Blue) throw InvalidArgument("blue_poles requires the blue sideband case");
  if (!(window.lo < window.hi) || window.points < 2) throw InvalidArgument("pole scan window is empty");

  auto delta_eff = [&](double d) { return effective_quantities(p, d).delta_eff; };
  auto accept = [&](double d, std::vector<double>& out) {
    const auto q = effective_quantities(p, d);
    if (std::hypot(q.delta_eff, q.kappa_eff) < pole_threshold(p)) out.push_back(d);
  };

  std::vector<double> roots;
  const double step = (window.hi - window.lo) / (window.points - 1);
  double x0 = window.lo;
  double f0 = delta_eff(x0);
  if (f0 == 0.0) accept(x0, roots);
  for (int i = 1; i < window.points; ++i) {
    const double x1 = window.lo + i * step;
    const double f1 = delta_eff(x1);
    if (f1 == 0.0) {
      accept(x1, roots);
    } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
      double lo = x0, hi = x1, flo = f0;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = delta_eff(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      accept(0.5 * (lo + hi), roots);
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

std::optional<double> find_pole_coupling(const ModelParams& p, Coupling which, double lo, double hi,
                                         double tol) {
  if (!(lo < hi) || lo < 0.0) throw InvalidArgument("coupling bracket must satisfy 0 <= lo < hi");
  auto f = [&](double g) {
    ModelParams q = p;
    (which == Coupling::A ? q.g_a : q.g_b) = g;
    return kappa_prime_at_zero(q);
  };
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace vit
