#pragma once

// Model geometries. Each comes with a generic chart used for the numerics
// (Cartesian, stereographic, Poincaré disk) and a geodesic polar chart in
// which the reference quantities have closed forms.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "swlab/error.hpp"
#include "swlab/riemannian/chart.hpp"

namespace swlab::riemann {

template <int D>
struct ModelGeometry {
  std::string name;
  MetricChart<D> chart;  // generic coordinates
  MetricChart<D> polar;  // (r, φ) or (r, θ, φ) about the center
  Point<D> center = Point<D>::Zero();
  double injectivity_radius = std::numeric_limits<double>::infinity();
  std::function<double(double)> sphere_measure;          // length/area of the geodesic ε-sphere about center
  std::function<double(const Point<D>&)> scalar_at;      // closed-form scalar curvature in generic coordinates
  std::function<double(double)> disk_curvature_integral;  // ∫_{D_ε} K dμ, dimension 2 only
};

using Model2 = ModelGeometry<2>;
using Model3 = ModelGeometry<3>;

namespace detail {

template <int D>
MetricChart<D> conformal_chart(std::string name, double sign) {
  // 4 / (1 + sign |x|²)² δ: sign = +1 stereographic sphere, -1 Poincaré ball.
  MetricChart<D> c;
  c.name = std::move(name);
  if (sign > 0) {
    c.in_domain = [](const Point<D>& x) { return x.squaredNorm() < 1e6; };
  } else {
    c.in_domain = [](const Point<D>& x) { return x.squaredNorm() < 1.0; };
  }
  c.metric = [sign](const Point<D>& x) {
    const double f = 2.0 / (1.0 + sign * x.squaredNorm());
    return Matrix<D>(f * f * Matrix<D>::Identity());
  };
  return c;
}

template <int D>
MetricChart<D> flat_chart(std::string name) {
  MetricChart<D> c;
  c.name = std::move(name);
  c.in_domain = [](const Point<D>&) { return true; };
  c.metric = [](const Point<D>&) { return Matrix<D>(Matrix<D>::Identity()); };
  return c;
}

/// dr² + f(r)² dφ²
inline MetricChart<2> polar_chart_2(std::string name, std::function<double(double)> f, double r_max) {
  MetricChart<2> c;
  c.name = std::move(name);
  c.in_domain = [r_max](const Point<2>& x) { return x(0) > 0 && x(0) < r_max; };
  c.metric = [f](const Point<2>& x) {
    Matrix<2> g = Matrix<2>::Zero();
    g(0, 0) = 1;
    g(1, 1) = f(x(0)) * f(x(0));
    return g;
  };
  return c;
}

/// dr² + f(r)² (dθ² + sin²θ dφ²)
inline MetricChart<3> polar_chart_3(std::string name, std::function<double(double)> f, double r_max) {
  MetricChart<3> c;
  c.name = std::move(name);
  c.in_domain = [r_max](const Point<3>& x) {
    return x(0) > 0 && x(0) < r_max && x(1) > 0 && x(1) < std::numbers::pi;
  };
  c.metric = [f](const Point<3>& x) {
    Matrix<3> g = Matrix<3>::Zero();
    const double fr = f(x(0));
    const double s = std::sin(x(1));
    g(0, 0) = 1;
    g(1, 1) = fr * fr;
    g(2, 2) = fr * fr * s * s;
    return g;
  };
  return c;
}

}  // namespace detail

inline std::vector<std::string> model_names() {
  return {"round-s2", "hyperbolic-2", "flat-2", "round-s3", "flat-3", "warped-3"};
}

/// 2 or 3; throws UnknownModel.
inline int model_dimension(const std::string& name) {
  if (name == "round-s2" || name == "hyperbolic-2" || name == "flat-2") return 2;
  if (name == "round-s3" || name == "flat-3" || name == "warped-3") return 3;
  throw Error(ErrorKind::UnknownModel, "'" + name + "'");
}

inline Model2 make_model2(const std::string& name) {
  using std::numbers::pi;
  Model2 m;
  m.name = name;
  if (name == "round-s2") {
    m.chart = detail::conformal_chart<2>("round-s2/stereographic", +1);
    m.polar = detail::polar_chart_2("round-s2/polar", [](double r) { return std::sin(r); }, pi);
    m.injectivity_radius = pi;
    m.sphere_measure = [](double e) { return 2 * pi * std::sin(e); };
    m.scalar_at = [](const Point<2>&) { return 2.0; };
    m.disk_curvature_integral = [](double e) { return 2 * pi * (1 - std::cos(e)); };
  } else if (name == "hyperbolic-2") {
    m.chart = detail::conformal_chart<2>("hyperbolic-2/poincare", -1);
    m.polar = detail::polar_chart_2("hyperbolic-2/polar", [](double r) { return std::sinh(r); }, 20);
    m.injectivity_radius = 10;  // the chart resolves radii well below this
    m.sphere_measure = [](double e) { return 2 * pi * std::sinh(e); };
    m.scalar_at = [](const Point<2>&) { return -2.0; };
    m.disk_curvature_integral = [](double e) { return -2 * pi * (std::cosh(e) - 1); };
  } else if (name == "flat-2") {
    m.chart = detail::flat_chart<2>("flat-2/cartesian");
    m.polar = detail::polar_chart_2("flat-2/polar", [](double r) { return r; }, 1e6);
    m.sphere_measure = [](double e) { return 2 * pi * e; };
    m.scalar_at = [](const Point<2>&) { return 0.0; };
    m.disk_curvature_integral = [](double) { return 0.0; };
  } else {
    throw Error(ErrorKind::UnknownModel, "'" + name + "' is not a 2-dimensional model");
  }
  return m;
}

inline constexpr double kDefaultWarp = 0.1;

/// Warped product dr² + f(r)² dΩ² with f(r) = r + c r³. In Cartesian
/// coordinates g = (1 + c r²)² I − (2c + c² r²) x xᵀ, which is polynomial.
inline Model3 make_model3(const std::string& name, double warp = kDefaultWarp) {
  using std::numbers::pi;
  Model3 m;
  m.name = name;
  if (name == "round-s3") {
    m.chart = detail::conformal_chart<3>("round-s3/stereographic", +1);
    m.polar = detail::polar_chart_3("round-s3/polar", [](double r) { return std::sin(r); }, pi);
    m.injectivity_radius = pi;
    m.sphere_measure = [](double e) { return 4 * pi * std::sin(e) * std::sin(e); };
    m.scalar_at = [](const Point<3>&) { return 6.0; };
  } else if (name == "flat-3") {
    m.chart = detail::flat_chart<3>("flat-3/cartesian");
    m.polar = detail::polar_chart_3("flat-3/polar", [](double r) { return r; }, 1e6);
    m.sphere_measure = [](double e) { return 4 * pi * e * e; };
    m.scalar_at = [](const Point<3>&) { return 0.0; };
  } else if (name == "warped-3") {
    if (warp < 0) throw Error(ErrorKind::UnknownModel, "warped-3 needs a non-negative warp coefficient");
    const double c = warp;
    m.chart.name = "warped-3/cartesian";
    m.chart.in_domain = [](const Point<3>& x) { return x.squaredNorm() < 1e4; };
    m.chart.metric = [c](const Point<3>& x) {
      const double r2 = x.squaredNorm();
      const double a = 1 + c * r2;
      return Matrix<3>(a * a * Matrix<3>::Identity() - (2 * c + c * c * r2) * (x * x.transpose()));
    };
    m.polar = detail::polar_chart_3("warped-3/polar", [c](double r) { return r + c * r * r * r; }, 100);
    m.sphere_measure = [c](double e) {
      const double f = e + c * e * e * e;
      return 4 * pi * f * f;
    };
    m.scalar_at = [c](const Point<3>& x) {
      // s = 2(−2 f''/f + (1 − f'²)/f²) = 2(−12c − (6c + 9c² r²)/(1 + c r²)²)
      const double r2 = x.squaredNorm();
      const double a = 1 + c * r2;
      return 2 * (-12 * c / a - (6 * c + 9 * c * c * r2) / (a * a));
    };
  } else {
    throw Error(ErrorKind::UnknownModel, "'" + name + "' is not a 3-dimensional model");
  }
  return m;
}

}  // namespace swlab::riemann
