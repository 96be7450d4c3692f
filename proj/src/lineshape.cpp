#include "vit/lineshape.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "vit/errors.hpp"

namespace vit {

namespace {

constexpr double kAbsorptionMargin = 0.05;
// A pair of windows whose minima stay above this fraction of the peak is a
// three-peak lineshape rather than two transparency windows.
constexpr double kTransparentFraction = 0.1;

struct Window {
  std::size_t index;
  double prominence;
};

std::vector<Window> find_windows(std::span<const double> y, double prominence) {
  if (y.size() < 5) throw InvalidArgument("lineshape analysis needs at least 5 points");
  if (!(prominence > 0.0 && prominence < 1.0)) throw InvalidArgument("prominence must lie in (0, 1)");
  for (double v : y) {
    if (!std::isfinite(v)) throw InvalidArgument("series contains non-finite values");
  }

  const double peak = *std::max_element(y.begin(), y.end());
  const double threshold = prominence * peak;
  const std::size_t n = y.size();

  std::vector<Window> out;
  std::size_t i = 1;
  while (i + 1 < n) {
    if (!(y[i] < y[i - 1])) {
      ++i;
      continue;
    }
    // Descend into a possible plateau; it is a minimum if the series rises after it.
    std::size_t j = i;
    while (j + 1 < n && y[j + 1] == y[i]) ++j;
    if (j + 1 >= n || !(y[j + 1] > y[i])) {
      i = j + 1;
      continue;
    }

    const double floor = y[i];
    double left = floor;
    for (std::size_t k = i; k-- > 0;) {
      if (y[k] < floor) break;
      left = std::max(left, y[k]);
    }
    double right = floor;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (y[k] < floor) break;
      right = std::max(right, y[k]);
    }
    const double prom = std::min(left, right) - floor;
    if (prom >= threshold) out.push_back({(i + j) / 2, prom});
    i = j + 1;
  }
  return out;
}

}  // namespace

int count_transparency_windows(std::span<const double> series, double prominence) {
  return static_cast<int>(find_windows(series, prominence).size());
}

std::string_view to_string(LineshapeClass c) {
  switch (c) {
    case LineshapeClass::Lorentzian: return "lorentzian";
    case LineshapeClass::SingleWindow: return "single-window";
    case LineshapeClass::DoubleWindow: return "double-window";
    case LineshapeClass::ThreePeak: return "three-peak";
    case LineshapeClass::AbsorptionEnhanced: return "absorption-enhanced";
  }
  return "?";
}

LineshapeReport classify_lineshape(std::span<const double> series, std::span<const double> baseline,
                                   double prominence) {
  if (baseline.empty()) throw InvalidArgument("baseline series is empty");
  const auto windows = find_windows(series, prominence);

  LineshapeReport r;
  r.n_windows = static_cast<int>(windows.size());
  r.peak_value = *std::max_element(series.begin(), series.end());
  r.baseline_value = *std::max_element(baseline.begin(), baseline.end());

  if (r.n_windows == 0) {
    r.shape = r.peak_value > r.baseline_value * (1.0 + kAbsorptionMargin) ? LineshapeClass::AbsorptionEnhanced
                                                                         : LineshapeClass::Lorentzian;
  } else if (r.n_windows == 1) {
    r.shape = LineshapeClass::SingleWindow;
  } else if (r.n_windows == 2) {
    const bool transparent = std::all_of(windows.begin(), windows.end(), [&](const Window& w) {
      return series[w.index] < kTransparentFraction * r.peak_value;
    });
    r.shape = transparent ? LineshapeClass::DoubleWindow : LineshapeClass::ThreePeak;
  } else {
    r.shape = LineshapeClass::DoubleWindow;
  }
  return r;
}

LineshapeReport classify_response(const ModelParams& p, std::span<const double> deltas, double prominence) {
  ModelParams bare = p;
  bare.g_a = bare.g_b = 0.0;
  std::vector<double> series, baseline;
  series.reserve(deltas.size());
  baseline.reserve(deltas.size());
  for (double d : deltas) {
    series.push_back(response_intensity(steady_state(p, d), p.chi).a);
    baseline.push_back(response_intensity(steady_state(bare, d), bare.chi).a);
  }
  return classify_lineshape(series, baseline, prominence);
}

double central_dip_depth(std::span<const double> grid, std::span<const double> series, double center) {
  if (grid.size() != series.size() || grid.empty()) throw InvalidArgument("grid and series must align");
  std::size_t mid = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i] - center) < std::abs(grid[mid] - center)) mid = i;
  }
  const double peak = *std::max_element(series.begin(), series.end());
  return (peak - series[mid]) / peak;
}

}  // namespace vit
