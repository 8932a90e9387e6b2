#include "netgame/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "netgame/error.hpp"

namespace netgame {

namespace {

long double polish(long double x, long double a3, long double a2, long double a1, long double a0) {
  for (int it = 0; it < 4; ++it) {
    const long double f = ((a3 * x + a2) * x + a1) * x + a0;
    const long double df = (3 * a3 * x + 2 * a2) * x + a1;
    if (df == 0) break;
    const long double step = f / df;
    if (!std::isfinite(step)) break;
    const long double next = x - step;
    // Accept only steps that do not increase the residual.
    const long double fn = ((a3 * next + a2) * next + a1) * next + a0;
    if (std::fabs(fn) > std::fabs(f)) break;
    x = next;
  }
  return x;
}

}  // namespace

RealRoots solve_quadratic(long double a2, long double a1, long double a0) {
  if (a2 == 0) throw ArgumentError("solve_quadratic: leading coefficient is zero");
  RealRoots out;
  long double disc = a1 * a1 - 4 * a2 * a0;
  if (disc < 0) {
    // Tiny negative discriminants are rounding noise around a double root.
    if (disc > -1e-14L * (a1 * a1 + std::fabs(4 * a2 * a0))) {
      disc = 0;
    } else {
      return out;
    }
  }
  // Citardauq form avoids cancellation in the smaller-magnitude root.
  const long double q = -0.5L * (a1 + std::copysign(std::sqrt(disc), a1));
  long double r1 = q / a2;
  long double r2 = q != 0 ? a0 / q : r1;
  if (r1 > r2) std::swap(r1, r2);
  out.count = 2;
  out.roots = {r1, r2, 0};
  return out;
}

RealRoots solve_cubic(long double a3, long double a2, long double a1, long double a0) {
  if (a3 == 0) throw ArgumentError("solve_cubic: leading coefficient is zero");
  const long double a = a2 / a3, b = a1 / a3, c = a0 / a3;
  // Depressed cubic t^3 - 3Q t - 2R = 0 with x = t - a/3.
  const long double Q = (a * a - 3 * b) / 9;
  const long double R = (a * (2 * a * a - 9 * b) + 27 * c) / 54;
  const long double Q3 = Q * Q * Q;
  const long double R2 = R * R;
  const long double shift = a / 3;
  const long double scale = std::max<long double>({R2, std::fabs(Q3), 1e-300L});

  RealRoots out;
  if (R2 <= Q3 || R2 - Q3 <= 1e-12L * scale) {
    const long double sq = Q > 0 ? std::sqrt(Q) : 0;
    long double cos_arg = sq > 0 ? R / (sq * sq * sq) : 0;
    cos_arg = std::clamp<long double>(cos_arg, -1, 1);
    const long double theta = std::acos(cos_arg);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    out.count = 3;
    out.roots = {-2 * sq * std::cos(theta / 3) - shift, -2 * sq * std::cos((theta + two_pi) / 3) - shift,
                 -2 * sq * std::cos((theta - two_pi) / 3) - shift};
  } else {
    const long double A = -std::copysign(std::cbrt(std::fabs(R) + std::sqrt(R2 - Q3)), R);
    const long double B = A != 0 ? Q / A : 0;
    out.count = 1;
    out.roots = {A + B - shift, 0, 0};
    out.single_real_root = true;
  }
  for (int i = 0; i < out.count; ++i) out.roots[i] = polish(out.roots[i], a3, a2, a1, a0);
  std::sort(out.roots.begin(), out.roots.begin() + out.count);
  return out;
}

}  // namespace netgame
