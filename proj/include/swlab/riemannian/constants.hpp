#pragma once

#include <cmath>
#include <numbers>

namespace swlab::riemann {

/// Volume of the unit d-sphere in R^{d+1}: 2π^{(d+1)/2} / Γ((d+1)/2).
inline double sphere_volume(int d) {
  const double h = 0.5 * (d + 1);
  return 2 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

/// (2k-1)(2k-3)…3·1
inline double odd_double_factorial(int k) {
  double p = 1;
  for (int j = 2 * k - 1; j > 1; j -= 2) p *= j;
  return p;
}

/// ω_{2k} = 2^{k+1} π^k / (2k-1)!!
inline double even_sphere_volume_double_factorial(int k) {
  return std::pow(2.0, k + 1) * std::pow(std::numbers::pi, k) / odd_double_factorial(k);
}

/// Value of the normalized k-fold curvature-form integral over a 2k-disk
/// block: (2π)^k / (2k-1)!! = ω_{2k} / 2.
inline double cgb_constant(int k) { return std::pow(2 * std::numbers::pi, k) / odd_double_factorial(k); }

struct SphereConstants {
  int k = 0;
  double omega_2k = 0;                // Gamma closed form
  double omega_2k_double_factorial = 0;
  double cgb = 0;                     // ω_{2k} / 2 via (2π)^k / (2k-1)!!
};

inline SphereConstants sphere_constants(int k) {
  return {k, sphere_volume(2 * k), even_sphere_volume_double_factorial(k), cgb_constant(k)};
}

}  // namespace swlab::riemann
