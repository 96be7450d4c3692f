#pragma once

// (1/2pi) * integral of a closed-form spectrum over omega, used to check the
// spectra against the Lyapunov covariance. Adaptive Gauss-Kronrod on
// [delta - 50 k, delta + 50 k], k = kappa_eff at omega = delta (its maximum),
// split geometrically around delta. Beyond the window each spectrum decays as a
// Lorentzian of its own mode's rate (gamma_a, gamma_b or kappa), integrated
// analytically from the edge value.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "vit/spectra.hpp"

namespace vit::testing {

inline double lorentzian_tail(double edge_value, double edge, double width) {
  return edge_value * (edge * edge + width * width) / width * (std::numbers::pi / 2.0 - std::atan(edge / width));
}

inline double integrate_spectrum(const std::function<double(double)>& s, const ModelParams& p, double delta,
                                 double tail_width) {
  const double k_max = omega_effective(p, delta, delta).kappa_eff_w;
  const double half_width = 50.0 * k_max;

  std::vector<double> cuts{0.0};
  for (double w = 0.125 * std::min({p.kappa, p.gamma_a, p.gamma_b}); w < half_width; w *= 2.0) cuts.push_back(w);
  cuts.push_back(half_width);

  using boost::math::quadrature::gauss_kronrod;
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    for (double side : {-1.0, 1.0}) {
      const double a = delta + side * cuts[i - 1];
      const double b = delta + side * cuts[i];
      const double piece = gauss_kronrod<double, 61>::integrate(s, std::min(a, b), std::max(a, b), 15, 1e-11);
      total += piece;
    }
  }
  const double tail = lorentzian_tail(s(delta - half_width), half_width, tail_width) +
                      lorentzian_tail(s(delta + half_width), half_width, tail_width);
  return (total + tail) / (2.0 * std::numbers::pi);
}

}  // namespace vit::testing
