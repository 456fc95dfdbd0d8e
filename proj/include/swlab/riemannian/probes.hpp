#pragma once

// Integral probes on model geometries: geodesic-sphere measures and their
// ε → 0 limit, the Gauss-Bonnet identity on geodesic disks, and the Gauss
// equation on a totally geodesic slice.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "swlab/error.hpp"
#include "swlab/parallel.hpp"
#include "swlab/riemannian/chart.hpp"
#include "swlab/riemannian/constants.hpp"
#include "swlab/riemannian/geodesic.hpp"
#include "swlab/riemannian/models.hpp"

namespace swlab::riemann {

struct ProbeResult {
  double value = 0;           // measure (sphere-area) or extrapolated limit (w3)
  double ratio = 0;           // value / (ω_{m-1} ε^{m-1}); equals value for limits
  double error_estimate = 0;  // |value − value on the coarser grid|, relative
  double eps = 0;
  double step = 0;
  std::size_t grid = 0;
  int cochain = 0;  // rounded value mod 2 (w3_limit only)
  std::vector<double> ratios;  // per-ε ratios (w3_limit only)
};

struct ProbeOptions {
  std::size_t grid = 0;          // 0 = default for the dimension
  double steps_per_eps = 256;    // RK4 step h = ε / steps_per_eps
  double coarse_tolerance = 1e-5;
};

inline constexpr std::size_t kDefaultCircleGrid = 512;
inline constexpr std::size_t kDefaultSphereGrid = 16;  // polar nodes; 2× as many in azimuth
inline constexpr std::size_t kDefaultRadialNodes = 24;

/// Gauss-Legendre nodes and weights on [a, b].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n, double a, double b) {
  std::vector<double> x(n), w(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1, p1 = z;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1);
    x[n - 1 - i] = mid + half * z;
    w[n - 1 - i] = half * 2 / ((1 - z * z) * dp * dp);
  }
  return {x, w};
}

namespace detail {

template <int D>
void check_eps(const ModelGeometry<D>& m, double eps) {
  if (!(eps > 0) || !(eps < 0.9 * m.injectivity_radius))
    throw Error(ErrorKind::OutOfDomain, m.name + ": ε = " + std::to_string(eps) + " outside (0, injectivity guard)");
}

template <int D>
Point<D> shoot_to(const MetricChart<D>& chart, const Point<D>& p, const Point<D>& dir, double eps, double h) {
  return geodesic_shoot(chart, GeodesicState<D>{p, dir}, eps, h).state.position;
}

/// Measure of the geodesic circle by trapezoid rule in the angle; the
/// tangent comes from shots at angles θ ± δ. Returns measures on the full
/// grid and on every other node.
inline std::pair<double, double> circle_length(const MetricChart<2>& chart, const Point<2>& p, double eps, double h,
                                               std::size_t n) {
  const Matrix<2> e = orthonormal_frame(chart, p);
  const double delta = 1e-5;
  std::vector<double> speed(n);
  auto dir = [&](double t) { return Point<2>(e * Point<2>(std::cos(t), std::sin(t))); };
  parallel_for(n, [&](std::size_t j) {
    const double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const Point<2> a = shoot_to(chart, p, dir(t + delta), eps, h);
    const Point<2> b = shoot_to(chart, p, dir(t - delta), eps, h);
    const Point<2> c = shoot_to(chart, p, dir(t), eps, h);
    const Point<2> d = (a - b) / (2 * delta);
    speed[j] = std::sqrt(d.dot(chart.metric(c) * d));
  });
  double full = 0, half = 0;
  for (std::size_t j = 0; j < n; ++j) {
    full += speed[j];
    if (j % 2 == 0) half += speed[j];
  }
  const double dt = 2 * std::numbers::pi / static_cast<double>(n);
  return {full * dt, half * 2 * dt};
}

/// Area of the geodesic sphere: Gauss-Legendre in cos θ, trapezoid in φ.
inline double sphere_area(const MetricChart<3>& chart, const Point<3>& p, double eps, double h, std::size_t nt) {
  const Matrix<3> e = orthonormal_frame(chart, p);
  const std::size_t np = 2 * nt;
  const auto [ct, wt] = gauss_legendre(nt, -1, 1);
  const double delta = 1e-5;
  auto dir = [&](double theta, double phi) {
    return Point<3>(e * Point<3>(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
  };
  std::vector<double> dens(nt * np);
  parallel_for(nt * np, [&](std::size_t k) {
    const std::size_t i = k / np, j = k % np;
    const double theta = std::acos(ct[i]);
    const double phi = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(np);
    const Point<3> c = shoot_to(chart, p, dir(theta, phi), eps, h);
    const Point<3> ft =
        (shoot_to(chart, p, dir(theta + delta, phi), eps, h) - shoot_to(chart, p, dir(theta - delta, phi), eps, h)) /
        (2 * delta);
    const Point<3> fp =
        (shoot_to(chart, p, dir(theta, phi + delta), eps, h) - shoot_to(chart, p, dir(theta, phi - delta), eps, h)) /
        (2 * delta);
    const Matrix<3> g = chart.metric(c);
    const double a = ft.dot(g * ft), b = ft.dot(g * fp), d = fp.dot(g * fp);
    // dθ dφ = dt dφ / sin θ with t = cos θ
    dens[k] = std::sqrt(std::max(0.0, a * d - b * b)) / std::sin(theta);
  });
  double area = 0;
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < np; ++j) area += wt[i] * dens[i * np + j];
  return area * 2 * std::numbers::pi / static_cast<double>(np);
}

}  // namespace detail

/// (m−1)-measure of the geodesic ε-sphere about the model's center, by
/// shooting geodesics over a direction grid. Throws OutOfDomain (ε beyond the
/// injectivity guard), LeftDomain, GridTooCoarse.
template <int D>
ProbeResult sphere_area_probe(const ModelGeometry<D>& m, double eps, const ProbeOptions& opt = {}) {
  static_assert(D == 2 || D == 3);
  detail::check_eps(m, eps);
  ProbeResult r;
  r.eps = eps;
  r.step = eps / opt.steps_per_eps;
  double coarse = 0;
  if constexpr (D == 2) {
    r.grid = opt.grid ? opt.grid : kDefaultCircleGrid;
    if (r.grid < 4 || r.grid % 2) throw Error(ErrorKind::GridTooCoarse, "circle grid must be even and ≥ 4");
    std::tie(r.value, coarse) = detail::circle_length(m.chart, m.center, eps, r.step, r.grid);
  } else {
    r.grid = opt.grid ? opt.grid : kDefaultSphereGrid;
    if (r.grid < 2) throw Error(ErrorKind::GridTooCoarse, "sphere grid must be ≥ 2");
    r.value = detail::sphere_area(m.chart, m.center, eps, r.step, r.grid);
    coarse = detail::sphere_area(m.chart, m.center, eps, r.step, std::max<std::size_t>(1, r.grid / 2));
  }
  r.ratio = r.value / (sphere_volume(D - 1) * std::pow(eps, D - 1));
  r.error_estimate = std::abs(r.value - coarse) / r.value;
  if (r.error_estimate > opt.coarse_tolerance)
    throw Error(ErrorKind::GridTooCoarse, m.name + ": relative error estimate " + std::to_string(r.error_estimate));
  return r;
}

/// Limit of sphere_area_probe ratios as ε → 0 by polynomial extrapolation in
/// ε² (Neville). Needs ≥ 3 strictly decreasing ε. Throws NonConvergent.
template <int D>
ProbeResult w3_limit(const ModelGeometry<D>& m, const std::vector<double>& eps_list, const ProbeOptions& opt = {},
                     double tolerance = 1e-3) {
  if (eps_list.size() < 3) throw Error(ErrorKind::NonConvergent, "need at least three ε values");
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i - 1])) throw Error(ErrorKind::NonConvergent, "ε values must decrease");
  ProbeResult out;
  std::vector<double> x;
  for (double e : eps_list) {
    const ProbeResult p = sphere_area_probe(m, e, opt);
    out.ratios.push_back(p.ratio);
    x.push_back(e * e);
    out.grid = p.grid;
    out.step = p.step;
  }
  // the deviations from 1 must shrink
  for (std::size_t i = 1; i < out.ratios.size(); ++i)
    if (std::abs(out.ratios[i] - 1) > std::abs(out.ratios[i - 1] - 1) + 1e-9)
      throw Error(ErrorKind::NonConvergent, m.name + ": ratios do not converge monotonically");
  // Neville tableau at x = 0
  std::vector<double> t = out.ratios;
  double previous = t.back();
  const std::size_t n = t.size();
  for (std::size_t level = 1; level < n; ++level) {
    previous = t[n - 1];
    for (std::size_t i = n - 1; i >= level; --i)
      t[i] = (x[i - level] * t[i] - x[i] * t[i - 1]) / (x[i - level] - x[i]);
  }
  out.value = t[n - 1];
  out.ratio = out.value;
  out.error_estimate = std::abs(out.value - previous);
  out.eps = eps_list.back();
  if (!std::isfinite(out.value) || out.error_estimate > tolerance)
    throw Error(ErrorKind::NonConvergent, m.name + ": extrapolants differ by " + std::to_string(out.error_estimate));
  out.cochain = static_cast<int>(((std::llround(out.value) % 2) + 2) % 2);
  return out;
}

struct GaussBonnetResult {
  double interior = 0;  // ∫_{D_ε} K dμ
  double boundary = 0;  // ∮ k_g ds
  double total = 0;
  double error_estimate = 0;
  int cochain = 0;  // round(total / 2π) mod 2
  double eps = 0;
  double step = 0;
  std::size_t grid = 0;
  std::size_t radial_nodes = 0;
};

/// Gauss-Bonnet on the geodesic ε-disk about the model's center, in the
/// generic chart. The disk is parametrized by F(ρ, φ) = exp(ρ u(φ)); the
/// interior uses Gauss-Legendre in ρ and the trapezoid rule in φ, the
/// boundary term ∫ ω(c′, Dc′) / |c′|² dφ uses five-point angular stencils.
inline GaussBonnetResult gauss_bonnet_disk(const Model2& m, double eps, const ProbeOptions& opt = {}) {
  detail::check_eps(m, eps);
  const MetricChart<2>& chart = m.chart;
  const Point<2> p = m.center;
  GaussBonnetResult r;
  r.eps = eps;
  r.step = eps / opt.steps_per_eps;
  r.grid = opt.grid ? opt.grid : kDefaultCircleGrid;
  r.radial_nodes = kDefaultRadialNodes;
  if (r.grid < 8 || r.grid % 2) throw Error(ErrorKind::GridTooCoarse, "angular grid must be even and ≥ 8");
  const std::size_t n = r.grid;
  const auto [rho, wr] = gauss_legendre(r.radial_nodes, 0, eps);
  std::vector<double> times = rho;
  times.push_back(eps);

  const Matrix<2> e = orthonormal_frame(chart, p);
  auto dir = [&](double t) { return Point<2>(e * Point<2>(std::cos(t), std::sin(t))); };
  const double delta = 1e-2;
  std::vector<double> interior(n), boundary(n);
  parallel_for(n, [&](std::size_t j) {
    const double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    std::array<std::vector<GeodesicState<2>>, 5> tr;  // offsets −2δ … 2δ
    for (int k = 0; k < 5; ++k)
      tr[static_cast<std::size_t>(k)] = geodesic_trace(chart, GeodesicState<2>{p, dir(t + (k - 2) * delta)}, times, r.step);
    auto d1 = [&](std::size_t node) {
      return Point<2>((tr[0][node].position - 8 * tr[1][node].position + 8 * tr[3][node].position -
                       tr[4][node].position) /
                      (12 * delta));
    };
    double in = 0;
    for (std::size_t q = 0; q < rho.size(); ++q) {
      const GeodesicState<2>& s = tr[2][q];
      const Point<2> fphi = d1(q);
      const double jac = std::abs(s.velocity(0) * fphi(1) - s.velocity(1) * fphi(0));
      const Curvature<2> c = curvature_at(chart, s.position);
      in += wr[q] * 0.5 * c.scalar * std::sqrt(c.metric.determinant()) * jac;
    }
    interior[j] = in;
    const std::size_t b = rho.size();
    const Point<2> x = tr[2][b].position;
    const Point<2> c1 = d1(b);
    const Point<2> c2 = (-tr[0][b].position + 16 * tr[1][b].position - 30 * x + 16 * tr[3][b].position -
                         tr[4][b].position) /
                        (12 * delta * delta);
    const Matrix<2> g = chart.metric(x);
    const Christoffel<2> gamma = detail::christoffel_raw(chart, x, g);
    Point<2> dc = c2;
    for (int k = 0; k < 2; ++k) dc(k) += c1.dot(gamma[k] * c1);
    const double omega = std::sqrt(g.determinant()) * (c1(0) * dc(1) - c1(1) * dc(0));
    boundary[j] = omega / c1.dot(g * c1);
  });
  const double dt = 2 * std::numbers::pi / static_cast<double>(n);
  double in_half = 0, bd_half = 0;
  for (std::size_t j = 0; j < n; ++j) {
    r.interior += interior[j] * dt;
    r.boundary += boundary[j] * dt;
    if (j % 2 == 0) {
      in_half += interior[j] * 2 * dt;
      bd_half += boundary[j] * 2 * dt;
    }
  }
  r.total = r.interior + r.boundary;
  r.error_estimate = std::abs(r.total - (in_half + bd_half));
  if (r.error_estimate > opt.coarse_tolerance)
    throw Error(ErrorKind::GridTooCoarse, m.name + ": error estimate " + std::to_string(r.error_estimate));
  r.cochain = static_cast<int>(((std::llround(r.total / (2 * std::numbers::pi)) % 2) + 2) % 2);
  return r;
}

/// The metric induced on the slice x₃ = 0 of a 3-dimensional chart.
inline MetricChart<2> slice_chart(const MetricChart<3>& ambient) {
  MetricChart<2> c;
  c.name = ambient.name + "/slice";
  c.scale = ambient.scale;
  c.steps = ambient.steps;
  c.in_domain = [ambient](const Point<2>& x) { return ambient.in_domain(Point<3>(x(0), x(1), 0)); };
  c.metric = [ambient](const Point<2>& x) {
    return Matrix<2>(ambient.metric(Point<3>(x(0), x(1), 0)).topLeftCorner<2, 2>());
  };
  return c;
}

/// r_int(X, Y) − [r_amb(X, Y) − R(v, X, Y, v)] on the slice x₃ = 0 at (x, y),
/// with v the unit normal. X, Y are tangent to the slice (2 components).
inline double gauss_equation_residual(const MetricChart<3>& ambient, const Point<2>& p, const Point<2>& x,
                                      const Point<2>& y) {
  const Point<3> q(p(0), p(1), 0);
  const Curvature<3> amb = curvature_at(ambient, q);
  const Curvature<2> in = curvature_at(slice_chart(ambient), p);
  Point<3> v = amb.metric.inverse() * Point<3>(0, 0, 1);
  v /= std::sqrt(v.dot(amb.metric * v));
  const Point<3> x3(x(0), x(1), 0), y3(y(0), y(1), 0);
  const double rhs = x3.dot(amb.ricci * y3) - amb.riemann.apply(v, x3, y3, v);
  return x.dot(in.ricci * y) - rhs;
}

/// Max |residual| over coordinate tangent pairs (∂₁, ∂₂) at (x, y, 0).
inline double gauss_equation_check(const MetricChart<3>& ambient, const Point<2>& p) {
  double worst = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      worst = std::max(worst, std::abs(gauss_equation_residual(ambient, p, detail::unit<2>(a), detail::unit<2>(b))));
  return worst;
}

}  // namespace swlab::riemann
