#include "vit/sweep.hpp"

#include <algorithm>
#include <thread>

#include "vit/errors.hpp"
#include "vit/oracle.hpp"
#include "vit/spectra.hpp"

namespace vit {

int Table::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  if (nw <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(nw);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += nw) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

Table response_table(const ModelParams& p, std::span<const double> deltas, int workers) {
  p.validate();
  if (!(p.chi > 0.0)) throw InvalidArgument("response spectra need chi > 0");
  Table t;
  t.header = {"delta", "abs2_A", "abs2_B", "re_A", "im_A", "re_B", "im_B", "re_c", "im_c", "pole"};
  t.rows.resize(deltas.size());
  parallel_for(deltas.size(), workers, [&](std::size_t i) {
    const double d = deltas[i];
    const SteadyState s = steady_state(p, d);
    if (s.pole) {
      t.rows[i] = {d, {}, {}, {}, {}, {}, {}, {}, {}, true};
      return;
    }
    const ResponseIntensity r = response_intensity(s, p.chi);
    t.rows[i] = {d,           r.a,         r.b,         s.a_s.real(), s.a_s.imag(),
                 s.b_s.real(), s.b_s.imag(), s.c_s.real(), s.c_s.imag(), false};
  });
  return t;
}

Table fluctuation_table(const ModelParams& p, double delta, std::span<const double> omegas, int workers) {
  p.validate();
  for (std::size_t i = 1; i < omegas.size(); ++i) {
    if (!(omegas[i] > omegas[i - 1])) throw InvalidArgument("omega grid must be strictly increasing");
  }
  if (omegas.empty()) throw InvalidArgument("omega grid is empty");
  Table t;
  t.header = {"omega", "S_A", "S_B", "S_c"};
  t.rows.resize(omegas.size());
  parallel_for(omegas.size(), workers, [&](std::size_t i) {
    const double w = omegas[i];
    t.rows[i] = {w, collective_spectrum(p, delta, w, Mode::A), collective_spectrum(p, delta, w, Mode::B),
                 vib_spectrum(p, delta, w)};
  });
  return t;
}

Table stability_table(const ModelParams& p, std::span<const double> deltas, int workers) {
  p.validate();
  Table t;
  t.header = {"case", "delta", "max_real_eig", "stable"};
  t.rows.resize(deltas.size());
  parallel_for(deltas.size(), workers, [&](std::size_t i) {
    const StabilityReport r = stability(build_drift(p, deltas[i], fluct_kind(p.sideband)));
    t.rows[i] = {std::string(to_string(p.sideband)), deltas[i], r.max_real_eig, r.stable};
  });
  return t;
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Delta: return "delta";
    case SweepAxis::Omega: return "omega";
    case SweepAxis::GA: return "g_a";
    case SweepAxis::GB: return "g_b";
    case SweepAxis::GammaA: return "gamma_a";
    case SweepAxis::GammaB: return "gamma_b";
  }
  return "?";
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::ResponseA: return "abs2_A";
    case Quantity::ResponseB: return "abs2_B";
    case Quantity::SpectrumA: return "S_A";
    case Quantity::SpectrumB: return "S_B";
    case Quantity::SpectrumC: return "S_c";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view s) {
  for (auto a : {SweepAxis::Delta, SweepAxis::Omega, SweepAxis::GA, SweepAxis::GB, SweepAxis::GammaA,
                 SweepAxis::GammaB}) {
    if (s == to_string(a)) return a;
  }
  throw InvalidArgument("unknown sweep axis '" + std::string(s) +
                        "' (expected delta, omega, g_a, g_b, gamma_a or gamma_b)");
}

Quantity parse_quantity(std::string_view s) {
  if (s == "response-a" || s == "abs2_A") return Quantity::ResponseA;
  if (s == "response-b" || s == "abs2_B") return Quantity::ResponseB;
  if (s == "spectrum-a" || s == "S_A") return Quantity::SpectrumA;
  if (s == "spectrum-b" || s == "S_B") return Quantity::SpectrumB;
  if (s == "spectrum-c" || s == "S_c") return Quantity::SpectrumC;
  throw InvalidArgument("unknown quantity '" + std::string(s) +
                        "' (expected response-a, response-b, spectrum-a, spectrum-b or spectrum-c)");
}

namespace {

bool is_response(Quantity q) { return q == Quantity::ResponseA || q == Quantity::ResponseB; }

void check_range(const AxisRange& r) {
  if (r.n < 2) throw InvalidArgument("sweep axis '" + std::string(to_string(r.axis)) + "' needs n >= 2");
  if (!(r.lo < r.hi)) throw InvalidArgument("sweep axis '" + std::string(to_string(r.axis)) + "' needs lo < hi");
}

struct Point {
  ModelParams p;
  double delta;
  double omega;
};

void apply(Point& pt, SweepAxis axis, double v) {
  switch (axis) {
    case SweepAxis::Delta: pt.delta = v; break;
    case SweepAxis::Omega: pt.omega = v; break;
    case SweepAxis::GA: pt.p.g_a = v; break;
    case SweepAxis::GB: pt.p.g_b = v; break;
    case SweepAxis::GammaA: pt.p.gamma_a = v; break;
    case SweepAxis::GammaB: pt.p.gamma_b = v; break;
  }
}

}  // namespace

void SweepSpec::validate() const {
  base.validate();
  check_range(axis1);
  if (axis2) {
    check_range(*axis2);
    if (axis2->axis == axis1.axis) throw InvalidArgument("sweep axes must differ");
  }
  auto is_axis = [&](SweepAxis a) { return axis1.axis == a || (axis2 && axis2->axis == a); };
  if (is_response(quantity) && is_axis(SweepAxis::Omega))
    throw InvalidArgument("response quantities do not depend on omega");
  if (is_response(quantity) && !(base.chi > 0.0)) throw InvalidArgument("response quantities need chi > 0");
  auto positive_rate = [](const AxisRange& r) {
    return (r.axis != SweepAxis::GammaA && r.axis != SweepAxis::GammaB) || r.lo > 0.0;
  };
  auto non_negative = [](const AxisRange& r) { return (r.axis != SweepAxis::GA && r.axis != SweepAxis::GB) || r.lo >= 0.0; };
  if (!positive_rate(axis1) || (axis2 && !positive_rate(*axis2))) throw InvalidArgument("decay rates must be > 0");
  if (!non_negative(axis1) || (axis2 && !non_negative(*axis2))) throw InvalidArgument("couplings must be >= 0");
}

Table run_sweep(const SweepSpec& spec, int workers) {
  spec.validate();
  const std::vector<double> values1 = uniform_grid(spec.axis1.lo, spec.axis1.hi, spec.axis1.n);
  const std::vector<double> values2 =
      spec.axis2 ? uniform_grid(spec.axis2->lo, spec.axis2->hi, spec.axis2->n) : std::vector<double>{0.0};

  Table t;
  if (spec.axis2) t.header.emplace_back(to_string(spec.axis2->axis));
  t.header.emplace_back(to_string(spec.axis1.axis));
  t.header.emplace_back(to_string(spec.quantity));
  t.header.emplace_back("pole");

  const std::size_t n1 = values1.size();
  t.rows.resize(n1 * values2.size());
  parallel_for(t.rows.size(), workers, [&](std::size_t k) {
    const std::size_t i2 = k / n1, i1 = k % n1;
    Point pt{spec.base, spec.delta, spec.omega};
    if (spec.axis2) apply(pt, spec.axis2->axis, values2[i2]);
    apply(pt, spec.axis1.axis, values1[i1]);

    bool pole = false;
    double value = 0.0;
    switch (spec.quantity) {
      case Quantity::ResponseA:
      case Quantity::ResponseB: {
        const SteadyState s = steady_state(pt.p, pt.delta);
        pole = s.pole;
        const ResponseIntensity r = response_intensity(s, pt.p.chi);
        value = spec.quantity == Quantity::ResponseA ? r.a : r.b;
        break;
      }
      case Quantity::SpectrumA: value = collective_spectrum(pt.p, pt.delta, pt.omega, Mode::A); break;
      case Quantity::SpectrumB: value = collective_spectrum(pt.p, pt.delta, pt.omega, Mode::B); break;
      case Quantity::SpectrumC: value = vib_spectrum(pt.p, pt.delta, pt.omega); break;
    }
    if (!is_response(spec.quantity)) pole = spectral_pole(pt.p, pt.delta, pt.omega);

    auto& row = t.rows[k];
    if (spec.axis2) row.emplace_back(values2[i2]);
    row.emplace_back(values1[i1]);
    row.emplace_back(pole ? Cell{} : Cell{value});
    row.emplace_back(pole);
  });
  return t;
}

}  // namespace vit
