#pragma once

// Independent numerical route through the same physics: the Langevin equations
// are written as a linear system dx/dt = M x + b + F xi with
// <xi_j(t) xi_k^dag(t')> = C_jk delta(t - t'), and every quantity is obtained
// by generic linear algebra. Nothing here calls the closed forms.
//
// Bases:
//   MeanRed    (c, A, B)
//   MeanBlue   (c, A^dag, B^dag)
//   FluctRed   (dc, dA, dB, dc^dag, dA^dag, dB^dag)
//   FluctBlue  same doubled basis; dc couples to dA^dag, dB^dag

#include <Eigen/Dense>
#include <string_view>
#include <vector>

#include "vit/model.hpp"

namespace vit {

enum class DriftKind { MeanRed, MeanBlue, FluctRed, FluctBlue };

std::string_view to_string(DriftKind k);
bool is_fluctuation(DriftKind k);

struct DriftSystem {
  DriftKind kind;
  int dim;
  Eigen::MatrixXcd drift;       // M
  Eigen::VectorXcd drive;       // b
  Eigen::MatrixXcd noise_in;    // F, dim x m
  Eigen::MatrixXd noise_corr;   // C, m x m
};

DriftSystem build_drift(const ModelParams& p, double delta, DriftKind kind);

// Drift kind matching the parameter set's sideband.
DriftKind mean_kind(Sideband s);
DriftKind fluct_kind(Sideband s);

struct StabilityReport {
  double max_real_eig;
  bool stable;
  std::vector<cplx> eigenvalues;
};

inline constexpr double kStabilityTolerance = 1e-12;

StabilityReport stability(const DriftSystem& d);

// x_s = -M^{-1} b mapped back to (A_s, B_s, c_s). Throws NumericalError::Singular
// when M is numerically singular.
SteadyState steady_state_linear(const DriftSystem& d);

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
};

// 0.01 / max(kappa, gamma_a, gamma_b, g_a, g_b)
double default_time_step(const ModelParams& p);

// Fixed-step RK4 of dx/dt = M x + b. Throws NumericalError::Diverged when the
// state blows up.
Trajectory integrate_mean(const DriftSystem& d, const Eigen::VectorXcd& x0, double t_end, double dt);

// Diagonal of T(w) F C F^dag T(w)^dag with T(w) = (-i w I - M)^{-1}.
Eigen::VectorXd spectrum_matrix(const DriftSystem& d, double omega);

struct ModeSpectra {
  double s_a;
  double s_b;
  double s_c;  // red: <dc dc^dag>; blue: <dc^dag dc>
};

ModeSpectra mode_spectra(const DriftSystem& d, double omega);

// Stationary V = <dx dx^dag> from M V + V M^dag + F C F^dag = 0.
Eigen::MatrixXcd covariance_lyapunov(const DriftSystem& d);

}  // namespace vit
