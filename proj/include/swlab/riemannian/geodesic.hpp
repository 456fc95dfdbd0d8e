#pragma once

// Fixed-step RK4 integration of the geodesic equation
//   x'' + Γ(x)(x', x') = 0
// in a metric chart.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "swlab/riemannian/chart.hpp"

namespace swlab::riemann {

template <int D>
struct GeodesicState {
  Point<D> position;
  Point<D> velocity;
};

/// The trajectory left the chart domain.
template <int D>
class LeftDomain : public Error {
 public:
  LeftDomain(Point<D> exit, double time)
      : Error(ErrorKind::LeftDomain, "geodesic left the chart at t = " + std::to_string(time)),
        exit_(std::move(exit)),
        time_(time) {}
  const Point<D>& exit_point() const noexcept { return exit_; }
  double time() const noexcept { return time_; }

 private:
  Point<D> exit_;
  double time_;
};

template <int D>
struct ShotResult {
  GeodesicState<D> state;
  double speed_drift = 0;  // max |g(v,v)^{1/2} − initial speed| over the steps
  std::size_t steps = 0;
};

namespace detail {

template <int D>
GeodesicState<D> geodesic_rhs(const MetricChart<D>& chart, const GeodesicState<D>& s) {
  const Christoffel<D> gamma = christoffel_raw(chart, s.position, chart.metric(s.position));
  Point<D> acc;
  for (int k = 0; k < D; ++k) acc(k) = -s.velocity.dot(gamma[k] * s.velocity);
  return {s.velocity, acc};
}

template <int D>
GeodesicState<D> rk4_step(const MetricChart<D>& chart, const GeodesicState<D>& s, double h) {
  auto axpy = [](const GeodesicState<D>& a, double t, const GeodesicState<D>& k) {
    return GeodesicState<D>{a.position + t * k.position, a.velocity + t * k.velocity};
  };
  const auto k1 = geodesic_rhs(chart, s);
  const auto k2 = geodesic_rhs(chart, axpy(s, h / 2, k1));
  const auto k3 = geodesic_rhs(chart, axpy(s, h / 2, k2));
  const auto k4 = geodesic_rhs(chart, axpy(s, h, k3));
  return {s.position + h / 6 * (k1.position + 2 * k2.position + 2 * k3.position + k4.position),
          s.velocity + h / 6 * (k1.velocity + 2 * k2.velocity + 2 * k3.velocity + k4.velocity)};
}

template <int D>
double speed(const MetricChart<D>& chart, const GeodesicState<D>& s) {
  return std::sqrt(s.velocity.dot(chart.metric(s.position) * s.velocity));
}

}  // namespace detail

/// Integrates for time T with steps of at most h and records the state at
/// each of the requested (increasing) times.
template <int D>
std::vector<GeodesicState<D>> geodesic_trace(const MetricChart<D>& chart, const GeodesicState<D>& start,
                                             const std::vector<double>& times, double h,
                                             double* speed_drift = nullptr) {
  if (!chart.in_domain(start.position)) throw Error(ErrorKind::OutOfDomain, chart.name + ": start outside domain");
  const double v0 = detail::speed(chart, start);
  double drift = 0;
  std::vector<GeodesicState<D>> out;
  out.reserve(times.size());
  GeodesicState<D> s = start;
  double t = 0;
  for (double target : times) {
    const double span = target - t;
    const auto n = static_cast<std::size_t>(std::ceil(span / h - 1e-9));
    if (n > 0) {
      const double step = span / static_cast<double>(n);
      for (std::size_t k = 0; k < n; ++k) {
        s = detail::rk4_step(chart, s, step);
        t += step;
        if (!chart.in_domain(s.position) || !s.position.allFinite()) throw LeftDomain<D>(s.position, t);
        if (speed_drift) drift = std::max(drift, std::abs(detail::speed(chart, s) - v0));
      }
    }
    t = target;
    out.push_back(s);
  }
  if (speed_drift) *speed_drift = drift;
  return out;
}

/// exp_p(T v) for the initial state (p, v) by RK4 with step ≤ h.
template <int D>
ShotResult<D> geodesic_shoot(const MetricChart<D>& chart, const GeodesicState<D>& start, double length, double h) {
  ShotResult<D> r;
  r.steps = static_cast<std::size_t>(std::ceil(length / h - 1e-9));
  r.state = geodesic_trace(chart, start, {length}, h, &r.speed_drift).front();
  return r;
}

}  // namespace swlab::riemann
