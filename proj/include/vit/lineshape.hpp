#pragma once

#include <span>
#include <string_view>

#include "vit/model.hpp"

namespace vit {

inline constexpr double kDefaultProminence = 0.05;

// Interior local minima whose prominence reaches `prominence` x global max.
// Prominence of a minimum is the smaller of the two rises to the highest point
// reached walking outward before the series drops below the minimum again
// (or the border). Endpoints never count. Needs >= 5 finite points.
int count_transparency_windows(std::span<const double> series, double prominence = kDefaultProminence);

enum class LineshapeClass { Lorentzian, SingleWindow, DoubleWindow, ThreePeak, AbsorptionEnhanced };

std::string_view to_string(LineshapeClass c);

struct LineshapeReport {
  int n_windows;
  LineshapeClass shape;
  double peak_value;
  double baseline_value;  // peak of the uncoupled (g_a = g_b = 0) series
};

// `baseline` is the same quantity on the same grid with g_a = g_b = 0.
LineshapeReport classify_lineshape(std::span<const double> series, std::span<const double> baseline,
                                   double prominence = kDefaultProminence);

// |A_s/chi|^2 over `deltas`, classified against its uncoupled baseline.
LineshapeReport classify_response(const ModelParams& p, std::span<const double> deltas,
                                  double prominence = kDefaultProminence);

// (max - value nearest `center`) / max.
double central_dip_depth(std::span<const double> grid, std::span<const double> series, double center = 0.0);

}  // namespace vit
