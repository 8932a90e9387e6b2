#pragma once

#include <array>

namespace netgame {

/// Real roots of a polynomial, sorted ascending. Repeated roots appear once
/// per multiplicity reported by the solver.
struct RealRoots {
  int count = 0;
  std::array<long double, 3> roots{};
  /// Set when a cubic with three expected real roots had a clearly negative
  /// discriminant, i.e. only one real root exists.
  bool single_real_root = false;
};

/// Roots of a2 x^2 + a1 x + a0 with a2 != 0.
RealRoots solve_quadratic(long double a2, long double a1, long double a0);

/// Real roots of a3 x^3 + a2 x^2 + a1 x + a0 with a3 != 0. Uses the
/// trigonometric form when all three roots are real and Cardano otherwise,
/// then polishes each root with Newton steps on the original coefficients.
RealRoots solve_cubic(long double a3, long double a2, long double a1, long double a0);

}  // namespace netgame
