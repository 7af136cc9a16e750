#pragma once

// Post-processing of fidelity time series: relaxation times and the
// short-time quadratic law.

#include <span>
#include <string_view>

#include "qreg/dynamics.hpp"

namespace qreg {

struct FitWindow {
  double lo = 0.2;
  double hi = 0.8;
};

enum class FitStatus {
  ok,
  oscillatory,        // F rebounds inside or right after the window
  window_not_reached, // F never drops below the lower edge
  too_few_points,
};

std::string_view to_string(FitStatus status);

struct RelaxationFit {
  FitStatus status;
  double tau;      // -1 / slope of log F, NaN unless status == ok
  double t_begin;  // time span of the fitted segment
  double t_end;
  int n_points;
};

/// Least-squares fit of log F = a - t / tau over the first contiguous segment
/// with F in [window.lo, window.hi].
RelaxationFit fit_relaxation_time(std::span<const TimeSeriesRecord> records,
                                  FitWindow window = {});

/// c in F = 1 - c t^2, least squares over the records with 0 < t <= t_fit.
double short_time_coefficient(std::span<const TimeSeriesRecord> records, double t_fit);

}  // namespace qreg
