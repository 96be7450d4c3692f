#pragma once

// Tabular datasets for the standard scenarios and generic one/two-axis sweeps.
// Evaluation fans out over worker threads; every row is written by index so
// the result does not depend on the worker count.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vit/model.hpp"

namespace vit {

// Empty cell, number, flag, or text.
using Cell = std::variant<std::monostate, double, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  int column(std::string_view name) const;  // -1 if absent
};

// Runs fn(i) for i in [0, n). workers <= 0 uses the hardware concurrency.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

// delta,abs2_A,abs2_B,re_A,im_A,re_B,im_B,re_c,im_c,pole
Table response_table(const ModelParams& p, std::span<const double> deltas, int workers = 1);

// omega,S_A,S_B,S_c
Table fluctuation_table(const ModelParams& p, double delta, std::span<const double> omegas, int workers = 1);

// case,delta,max_real_eig,stable  (fluctuation drift of the parameter set's sideband)
Table stability_table(const ModelParams& p, std::span<const double> deltas, int workers = 1);

enum class SweepAxis { Delta, Omega, GA, GB, GammaA, GammaB };
enum class Quantity { ResponseA, ResponseB, SpectrumA, SpectrumB, SpectrumC };

std::string_view to_string(SweepAxis a);
std::string_view to_string(Quantity q);
SweepAxis parse_axis(std::string_view s);
Quantity parse_quantity(std::string_view s);

struct AxisRange {
  SweepAxis axis;
  double lo;
  double hi;
  int n;
};

struct SweepSpec {
  ModelParams base;
  AxisRange axis1;
  std::optional<AxisRange> axis2;
  Quantity quantity = Quantity::ResponseA;
  double delta = 0.0;  // used unless an axis is delta
  double omega = 0.0;  // used by spectra unless an axis is omega

  void validate() const;
};

// Rows ordered axis2-major, axis1-minor. Columns: [axis2,] axis1, <quantity>, pole.
// Pole rows leave the value cell empty.
Table run_sweep(const SweepSpec& spec, int workers = 1);

}  // namespace vit
