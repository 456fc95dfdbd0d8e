#pragma once

// Coordinate charts carrying a Riemannian metric, with Christoffel symbols
// and curvature computed from the metric components by central differences.

#include <array>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "swlab/error.hpp"

namespace swlab::riemann {

template <int D>
using Point = Eigen::Matrix<double, D, 1>;
template <int D>
using Matrix = Eigen::Matrix<double, D, D>;

/// Finite-difference steps, scaled by the chart's characteristic length.
struct StencilSteps {
  double first = 1e-5;   // Christoffel symbols: second-order central differences
  double second = 1e-3;  // derivatives of Christoffels: fourth-order central differences
};

template <int D>
struct MetricChart {
  std::string name;
  std::function<bool(const Point<D>&)> in_domain;
  std::function<Matrix<D>(const Point<D>&)> metric;
  double scale = 1.0;
  StencilSteps steps{};

  static constexpr int dim = D;

  /// Metric at p; throws OutOfDomain or SingularMetric (not positive definite).
  Matrix<D> metric_at(const Point<D>& p) const {
    if (!in_domain(p)) throw Error(ErrorKind::OutOfDomain, name + ": point outside chart domain");
    Matrix<D> g = metric(p);
    Eigen::LLT<Matrix<D>> llt(g);
    if (llt.info() != Eigen::Success || !g.allFinite())
      throw Error(ErrorKind::SingularMetric, name + ": metric not positive definite");
    return g;
  }
};

/// Γ^k_ij stored as gamma[k](i, j).
template <int D>
using Christoffel = std::array<Matrix<D>, D>;

/// Riemann tensor R(∂_a, ∂_b, ∂_c, ∂_d) = g(R(∂_a, ∂_b)∂_c, ∂_d) with
/// R(X, Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_[X,Y]. On the unit sphere
/// R(X, Y, Y, X) = |X|²|Y|² − g(X, Y)².
template <int D>
struct Riemann {
  std::array<double, D * D * D * D> data{};

  double& operator()(int a, int b, int c, int d) { return data[((a * D + b) * D + c) * D + d]; }
  double operator()(int a, int b, int c, int d) const { return data[((a * D + b) * D + c) * D + d]; }

  double apply(const Point<D>& x, const Point<D>& y, const Point<D>& z, const Point<D>& w) const {
    double s = 0;
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b)
        for (int c = 0; c < D; ++c)
          for (int d = 0; d < D; ++d) s += (*this)(a, b, c, d) * x(a) * y(b) * z(c) * w(d);
    return s;
  }
};

template <int D>
struct Curvature {
  Riemann<D> riemann;
  Matrix<D> ricci;  // r(Y, Z) = tr(X ↦ R(X, Y)Z)
  double scalar = 0;
  Matrix<D> metric;
};

namespace detail {

template <int D>
Point<D> unit(int i) {
  Point<D> e = Point<D>::Zero();
  e(i) = 1.0;
  return e;
}

/// Christoffel symbols from second-order central differences of g.
template <int D>
Christoffel<D> christoffel_raw(const MetricChart<D>& chart, const Point<D>& p, const Matrix<D>& g) {
  const double h = chart.steps.first * chart.scale;
  std::array<Matrix<D>, D> dg;  // dg[m] = ∂_m g
  for (int m = 0; m < D; ++m) {
    const Point<D> e = unit<D>(m) * h;
    dg[m] = (chart.metric(p + e) - chart.metric(p - e)) / (2 * h);
  }
  const Matrix<D> ginv = g.inverse();
  Christoffel<D> gamma;
  for (int k = 0; k < D; ++k) {
    gamma[k].setZero();
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        double s = 0;
        for (int l = 0; l < D; ++l) s += ginv(k, l) * (dg[i](l, j) + dg[j](l, i) - dg[l](i, j));
        gamma[k](i, j) = 0.5 * s;
      }
  }
  return gamma;
}

}  // namespace detail

template <int D>
Christoffel<D> christoffel(const MetricChart<D>& chart, const Point<D>& p) {
  return detail::christoffel_raw(chart, p, chart.metric_at(p));
}

/// Riemann, Ricci and scalar curvature at p. Derivatives of the Christoffel
/// symbols use the five-point stencil (f(-2h) - 8f(-h) + 8f(h) - f(2h)) / 12h.
template <int D>
Curvature<D> curvature_at(const MetricChart<D>& chart, const Point<D>& p) {
  const Matrix<D> g = chart.metric_at(p);
  const Christoffel<D> gamma = detail::christoffel_raw(chart, p, g);
  const double h = chart.steps.second * chart.scale;
  std::array<Christoffel<D>, D> dgamma;  // dgamma[a][e](b, c) = ∂_a Γ^e_bc
  for (int a = 0; a < D; ++a) {
    const Point<D> e = detail::unit<D>(a) * h;
    auto at = [&](double t) { return detail::christoffel_raw(chart, Point<D>(p + t * e), chart.metric(p + t * e)); };
    const auto m2 = at(-2), m1 = at(-1), p1 = at(1), p2 = at(2);
    for (int k = 0; k < D; ++k) dgamma[a][k] = (m2[k] - 8 * m1[k] + 8 * p1[k] - p2[k]) / (12 * h);
  }
  Curvature<D> out;
  out.metric = g;
  // (R(∂_a, ∂_b)∂_c)^e = ∂_a Γ^e_bc − ∂_b Γ^e_ac + Γ^e_af Γ^f_bc − Γ^e_bf Γ^f_ac
  std::array<double, D * D * D * D> up{};  // up[((e*D+c)*D+a)*D+b]
  auto upi = [](int e, int c, int a, int b) { return ((e * D + c) * D + a) * D + b; };
  for (int e = 0; e < D; ++e)
    for (int c = 0; c < D; ++c)
      for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
          double v = dgamma[a][e](b, c) - dgamma[b][e](a, c);
          for (int f = 0; f < D; ++f) v += gamma[e](a, f) * gamma[f](b, c) - gamma[e](b, f) * gamma[f](a, c);
          up[upi(e, c, a, b)] = v;
        }
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      for (int c = 0; c < D; ++c)
        for (int d = 0; d < D; ++d) {
          double v = 0;
          for (int e = 0; e < D; ++e) v += g(d, e) * up[upi(e, c, a, b)];
          out.riemann(a, b, c, d) = v;
        }
  for (int b = 0; b < D; ++b)
    for (int c = 0; c < D; ++c) {
      double v = 0;
      for (int a = 0; a < D; ++a) v += up[upi(a, c, a, b)];
      out.ricci(b, c) = v;
    }
  out.ricci = 0.5 * (out.ricci + out.ricci.transpose()).eval();
  out.scalar = (g.inverse() * out.ricci).trace();
  return out;
}

/// Gaussian curvature of a 2-dimensional chart.
inline double gauss_curvature(const MetricChart<2>& chart, const Point<2>& p) {
  const auto c = curvature_at(chart, p);
  return c.scalar / 2;
}

/// Determinant of the Gram matrix of a Gram-Schmidt orthonormalized frame.
struct FrameDeterminant {
  double det = 0;
  int value = 0;  // det rounded, mod 2
};

/// Orthonormalizes `frame` (columns, positively oriented relative to the
/// coordinates) against g at p, then evaluates det g(e_i, e_j) numerically.
template <int D>
FrameDeterminant frame_det_w1(const MetricChart<D>& chart, const Point<D>& p, const Matrix<D>& frame) {
  const Matrix<D> g = chart.metric_at(p);
  if (std::abs(frame.determinant()) < 1e-14) throw Error(ErrorKind::SingularMetric, "degenerate starting frame");
  Matrix<D> e = frame;
  if (frame.determinant() < 0) e.col(0) = -e.col(0);
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < i; ++j) {
      const double proj = e.col(j).dot(g * e.col(i));
      e.col(i) -= proj * e.col(j);
    }
    const double norm2 = e.col(i).dot(g * e.col(i));
    if (!(norm2 > 0)) throw Error(ErrorKind::SingularMetric, "frame vector of non-positive length");
    e.col(i) /= std::sqrt(norm2);
  }
  const Matrix<D> gram = e.transpose() * g * e;
  FrameDeterminant out;
  out.det = gram.determinant();
  out.value = static_cast<int>(std::llround(out.det)) % 2;
  return out;
}

template <int D>
FrameDeterminant frame_det_w1(const MetricChart<D>& chart, const Point<D>& p) {
  return frame_det_w1(chart, p, Matrix<D>(Matrix<D>::Identity()));
}

/// A g-orthonormal, positively oriented basis at p (columns).
template <int D>
Matrix<D> orthonormal_frame(const MetricChart<D>& chart, const Point<D>& p) {
  const Matrix<D> g = chart.metric_at(p);
  Eigen::LLT<Matrix<D>> llt(g);
  // g = L Lᵀ, so E = L^{-T} satisfies Eᵀ g E = I; L^{-T} is upper triangular
  // with positive diagonal, hence orientation preserving.
  Matrix<D> l = llt.matrixL();
  return l.transpose().inverse();
}

}  // namespace swlab::riemann
