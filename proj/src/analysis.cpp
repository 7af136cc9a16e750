#include "qreg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qreg {

namespace {

// Rebound in F (absolute) that marks a non-monotone, oscillatory decay.
constexpr double kRebound = 0.02;

}  // namespace

std::string_view to_string(FitStatus status) {
  switch (status) {
    case FitStatus::ok: return "ok";
    case FitStatus::oscillatory: return "oscillatory regime, fit skipped";
    case FitStatus::window_not_reached: return "fidelity never leaves the fit window";
    case FitStatus::too_few_points: return "too few points in the fit window";
  }
  return "unknown";
}

RelaxationFit fit_relaxation_time(std::span<const TimeSeriesRecord> records, FitWindow window) {
  if (!(window.lo > 0.0 && window.lo < window.hi && window.hi <= 1.0)) {
    throw std::invalid_argument("fit window must satisfy 0 < lo < hi <= 1");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto n = records.size();

  std::size_t begin = 0;
  while (begin < n && records[begin].fidelity > window.hi) ++begin;
  std::size_t end = begin;  // one past the segment
  double running_min = std::numeric_limits<double>::infinity();
  bool rebound = false;
  while (end < n && records[end].fidelity >= window.lo) {
    const double f = records[end].fidelity;
    if (f > running_min + kRebound) rebound = true;
    running_min = std::min(running_min, f);
    ++end;
  }

  RelaxationFit fit{FitStatus::ok, nan, nan, nan, static_cast<int>(end - begin)};
  if (begin < end) {
    fit.t_begin = records[begin].t;
    fit.t_end = records[end - 1].t;
  }
  if (begin >= n || end >= n) {
    fit.status = FitStatus::window_not_reached;
    return fit;
  }

  // Past the window the same rebound rule holds for as long again as the
  // decay took.
  const double horizon = 2.0 * records[end].t;
  for (std::size_t j = end; j < n && records[j].t <= horizon; ++j) {
    const double f = records[j].fidelity;
    if (f > running_min + kRebound) rebound = true;
    running_min = std::min(running_min, f);
  }
  if (rebound) {
    fit.status = FitStatus::oscillatory;
    return fit;
  }
  if (end - begin < 3) {
    fit.status = FitStatus::too_few_points;
    return fit;
  }

  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  for (std::size_t j = begin; j < end; ++j) {
    const double t = records[j].t;
    const double y = std::log(records[j].fidelity);
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  const double m = static_cast<double>(end - begin);
  const double slope = (m * sty - st * sy) / (m * stt - st * st);
  fit.tau = -1.0 / slope;
  return fit;
}

double short_time_coefficient(std::span<const TimeSeriesRecord> records, double t_fit) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& r : records) {
    if (r.t <= 0.0 || r.t > t_fit) continue;
    const double t2 = r.t * r.t;
    num += t2 * (1.0 - r.fidelity);
    den += t2 * t2;
  }
  if (den == 0.0) throw std::invalid_argument("no samples in (0, t_fit]");
  return num / den;
}

}  // namespace qreg
