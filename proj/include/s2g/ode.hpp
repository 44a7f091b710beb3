#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

#include <Eigen/Core>

namespace s2g {

class OdeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <int Dim>
using OdeState = Eigen::Matrix<double, Dim, 1>;

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-14;
  double initial_step = 0.0;  // 0: a small fraction of the span
  std::size_t max_steps = 5'000'000;
};

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Dormand-Prince 5(4) with error-per-step control. Integrates y' = f(t, y)
/// from t0 through the monotone sequence `stops` (all on the same side of t0),
/// landing exactly on each stop and calling on_stop(index, t, y) there.
/// Returns the state at the last stop.
template <int Dim, typename Rhs, typename OnStop>
OdeState<Dim> integrate_dp45(Rhs&& f, double t0, OdeState<Dim> y, std::span<const double> stops,
                             const OdeOptions& opt, OnStop&& on_stop, OdeStats* stats = nullptr) {
  using V = OdeState<Dim>;
  if (stops.empty()) return y;
  const double dir = stops.back() >= t0 ? 1.0 : -1.0;
  const double span = std::abs(stops.back() - t0);
  double h = opt.initial_step > 0 ? opt.initial_step : std::max(span * 1e-3, 1e-300);
  double t = t0;
  OdeStats local;
  V k1 = f(t, y);

  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  for (std::size_t idx = 0; idx < stops.size(); ++idx) {
    const double target = stops[idx];
    if (dir * (target - t) < 0) throw std::invalid_argument("integrate_dp45: stops are not monotone");
    while (dir * (target - t) > 0) {
      if (local.accepted + local.rejected >= opt.max_steps) throw OdeError("ODE: step budget exhausted");
      bool last = false;
      double step = h;
      if (step >= dir * (target - t)) {
        step = dir * (target - t);
        last = true;
      }
      const double hs = dir * step;
      const V k2 = f(t + c2 * hs, y + hs * (a21 * k1));
      const V k3 = f(t + c3 * hs, y + hs * (a31 * k1 + a32 * k2));
      const V k4 = f(t + c4 * hs, y + hs * (a41 * k1 + a42 * k2 + a43 * k3));
      const V k5 = f(t + c5 * hs, y + hs * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const V k6 = f(t + hs, y + hs * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const V y_new = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const V k7 = f(t + hs, y_new);
      const V err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

      double norm = 0.0;
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double sc = opt.atol + opt.rtol * std::max(std::abs(y(i)), std::abs(y_new(i)));
        norm = std::max(norm, std::abs(err(i)) / sc);
      }
      if (!std::isfinite(norm)) {
        ++local.rejected;
        h *= 0.25;
        if (h < 1e-300 || h <= std::abs(t) * 1e-16) throw OdeError("ODE: step size underflow");
        continue;
      }
      const double factor =
          norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
      if (norm <= 1.0) {
        ++local.accepted;
        t = last ? target : t + hs;
        y = y_new;
        k1 = k7;
        // A clipped final step says nothing about the natural step size.
        if (!last || factor < 1.0) h = step * factor;
      } else {
        ++local.rejected;
        h = step * std::max(factor, 0.2);
        if (h <= std::abs(t) * 1e-15 || h < 1e-300) throw OdeError("ODE: step size underflow");
      }
    }
    on_stop(idx, t, static_cast<const V&>(y));
  }
  if (stats) {
    stats->accepted += local.accepted;
    stats->rejected += local.rejected;
  }
  return y;
}

}  // namespace s2g
