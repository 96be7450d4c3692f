#include "vit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vit/errors.hpp"

namespace vit {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kSingularRcond = 1e-13;
constexpr double kDivergenceNorm = 1e100;

Eigen::PartialPivLU<Eigen::MatrixXcd> checked_lu(const Eigen::MatrixXcd& a, std::string_view what) {
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const double rc = lu.rcond();
  if (!(rc > kSingularRcond)) {
    std::ostringstream msg;
    msg << what << " is singular (rcond = " << rc << ")";
    throw NumericalError(NumericalError::Kind::Singular, msg.str());
  }
  return lu;
}

// Noise injection sqrt(2 rate) per mode, repeated for the conjugate half of doubled bases.
Eigen::MatrixXcd injection(const ModelParams& p, int dim) {
  Eigen::VectorXcd diag(dim);
  const double rates[3] = {p.kappa, p.gamma_a, p.gamma_b};
  for (int i = 0; i < dim; ++i) diag(i) = std::sqrt(2.0 * rates[i % 3]);
  return diag.asDiagonal();
}

}  // namespace

std::string_view to_string(DriftKind k) {
  switch (k) {
    case DriftKind::MeanRed: return "mean-red";
    case DriftKind::MeanBlue: return "mean-blue";
    case DriftKind::FluctRed: return "fluct-red";
    case DriftKind::FluctBlue: return "fluct-blue";
  }
  return "?";
}

bool is_fluctuation(DriftKind k) { return k == DriftKind::FluctRed || k == DriftKind::FluctBlue; }

DriftKind mean_kind(Sideband s) { return s == Sideband::Red ? DriftKind::MeanRed : DriftKind::MeanBlue; }
DriftKind fluct_kind(Sideband s) { return s == Sideband::Red ? DriftKind::FluctRed : DriftKind::FluctBlue; }

DriftSystem build_drift(const ModelParams& p, double delta, DriftKind kind) {
  p.validate();
  const double ga = p.g_a, gb = p.g_b;
  const double n_c = p.n_vib, n_y = p.n_eg;

  DriftSystem d;
  d.kind = kind;
  switch (kind) {
    case DriftKind::MeanRed: {
      d.dim = 3;
      d.drift.resize(3, 3);
      d.drift << -I * delta - p.kappa, -ga, -gb,
                 ga, -I * delta - p.gamma_a, 0.0,
                 gb, 0.0, -I * delta - p.gamma_b;
      d.drive = Eigen::VectorXcd::Zero(3);
      d.drive(1) = -I * p.chi;
      d.noise_corr = Eigen::Vector3d(n_c + 1.0, n_y + 1.0, n_y + 1.0).asDiagonal();
      break;
    }
    case DriftKind::MeanBlue: {
      d.dim = 3;
      d.drift.resize(3, 3);
      d.drift << I * delta - p.kappa, ga, gb,
                 ga, I * delta - p.gamma_a, 0.0,
                 gb, 0.0, I * delta - p.gamma_b;
      d.drive = Eigen::VectorXcd::Zero(3);
      d.drive(1) = I * p.chi;
      // c_in, A_in^dag, B_in^dag
      d.noise_corr = Eigen::Vector3d(n_c + 1.0, n_y, n_y).asDiagonal();
      break;
    }
    case DriftKind::FluctRed:
    case DriftKind::FluctBlue: {
      Eigen::Matrix3cd direct = Eigen::Matrix3cd::Zero();
      Eigen::Matrix3cd crossed = Eigen::Matrix3cd::Zero();
      if (kind == DriftKind::FluctRed) {
        direct << -I * delta - p.kappa, -ga, -gb,
                  ga, -I * delta - p.gamma_a, 0.0,
                  gb, 0.0, -I * delta - p.gamma_b;
      } else {
        direct.diagonal() << I * delta - p.kappa, -I * delta - p.gamma_a, -I * delta - p.gamma_b;
        crossed << 0.0, ga, gb,
                   ga, 0.0, 0.0,
                   gb, 0.0, 0.0;
      }
      d.dim = 6;
      d.drift.resize(6, 6);
      d.drift.topLeftCorner<3, 3>() = direct;
      d.drift.topRightCorner<3, 3>() = crossed;
      d.drift.bottomLeftCorner<3, 3>() = crossed.conjugate();
      d.drift.bottomRightCorner<3, 3>() = direct.conjugate();
      d.drive = Eigen::VectorXcd::Zero(6);
      Eigen::VectorXd c(6);
      c << n_c + 1.0, n_y + 1.0, n_y + 1.0, n_c, n_y, n_y;
      d.noise_corr = c.asDiagonal();
      break;
    }
  }
  d.noise_in = injection(p, d.dim);
  return d;
}

StabilityReport stability(const DriftSystem& d) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(d.drift, /*computeEigenvectors=*/false);
  StabilityReport r;
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() < b.imag();
  });
  r.max_real_eig = r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front().real();
  r.stable = r.max_real_eig < -kStabilityTolerance;
  return r;
}

SteadyState steady_state_linear(const DriftSystem& d) {
  const auto lu = checked_lu(d.drift, "drift matrix");
  const Eigen::VectorXcd x = -lu.solve(d.drive);
  SteadyState s;
  s.c_s = x(0);
  if (d.kind == DriftKind::MeanBlue) {
    s.a_s = std::conj(x(1));
    s.b_s = std::conj(x(2));
  } else {
    s.a_s = x(1);
    s.b_s = x(2);
  }
  return s;
}

double default_time_step(const ModelParams& p) {
  return 0.01 / std::max({p.kappa, p.gamma_a, p.gamma_b, p.g_a, p.g_b});
}

Trajectory integrate_mean(const DriftSystem& d, const Eigen::VectorXcd& x0, double t_end, double dt) {
  if (!(dt > 0.0) || !(t_end > dt)) throw InvalidArgument("integration needs dt > 0 and t_end > dt");
  if (x0.size() != d.dim) throw InvalidArgument("initial state has wrong dimension");

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  const double h = t_end / static_cast<double>(steps);
  auto rhs = [&](const Eigen::VectorXcd& x) -> Eigen::VectorXcd { return d.drift * x + d.drive; };

  Trajectory tr;
  tr.times.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  tr.times.push_back(0.0);
  tr.states.push_back(x0);

  Eigen::VectorXcd x = x0;
  for (std::size_t n = 1; n <= steps; ++n) {
    const Eigen::VectorXcd k1 = rhs(x);
    const Eigen::VectorXcd k2 = rhs(x + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = rhs(x + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = rhs(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double t = static_cast<double>(n) * h;
    if (!x.allFinite() || x.norm() > kDivergenceNorm) {
      std::ostringstream msg;
      msg << "trajectory diverged at t = " << t << " (" << to_string(d.kind)
          << " system is unstable; max Re(lambda) = " << stability(d).max_real_eig << ")";
      throw NumericalError(NumericalError::Kind::Diverged, msg.str());
    }
    tr.times.push_back(t);
    tr.states.push_back(x);
  }
  return tr;
}

Eigen::VectorXd spectrum_matrix(const DriftSystem& d, double omega) {
  if (!is_fluctuation(d.kind)) throw InvalidArgument("spectrum_matrix needs a fluctuation system");
  const Eigen::MatrixXcd resolvent_arg =
      -I * omega * Eigen::MatrixXcd::Identity(d.dim, d.dim) - d.drift;
  const auto lu = checked_lu(resolvent_arg, "(-i w - M)");
  const Eigen::MatrixXcd transfer = lu.solve(d.noise_in);
  const Eigen::MatrixXcd spectral = transfer * d.noise_corr.cast<cplx>() * transfer.adjoint();
  return spectral.diagonal().real();
}

ModeSpectra mode_spectra(const DriftSystem& d, double omega) {
  const Eigen::VectorXd s = spectrum_matrix(d, omega);
  const int c_index = d.kind == DriftKind::FluctRed ? 0 : 3;
  return {s(1), s(2), s(c_index)};
}

Eigen::MatrixXcd covariance_lyapunov(const DriftSystem& d) {
  if (!stability(d).stable) {
    throw NumericalError(NumericalError::Kind::Unstable,
                         std::string("no stationary covariance: ") + std::string(to_string(d.kind)) +
                             " system is not stable");
  }
  const int n = d.dim;
  const Eigen::MatrixXcd q = d.noise_in * d.noise_corr.cast<cplx>() * d.noise_in.adjoint();

  // Column-major vec: vec(M V) = (I kron M) vec V, vec(V M^dag) = (conj(M) kron I) vec V.
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd mc = d.drift.conjugate();
  Eigen::MatrixXcd sylvester(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sylvester.block(i * n, j * n, n, n) = id(i, j) * d.drift + mc(i, j) * id;
    }
  }
  const Eigen::VectorXcd rhs = -Eigen::Map<const Eigen::VectorXcd>(q.data(), n * n);
  const Eigen::VectorXcd v = checked_lu(sylvester, "Lyapunov operator").solve(rhs);
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), n, n);
}

}  // namespace vit
