#include "netgame/moment_bounds.hpp"

#include <cmath>
#include <limits>

#include "netgame/error.hpp"
#include "netgame/polynomial.hpp"

namespace netgame {

namespace {

constexpr double kDegenerateRatio = 1e-12;

void check_order(int s) {
  if (s != 1 && s != 2) throw ArgumentError("moment bounds support orders s = 1 and s = 2 only");
}

// Moments of the measure rescaled by 1/sigma, sigma = sqrt(m2). Keeps the
// Hankel entries O(1) for graphs whose raw moments span many decades.
struct Normalized {
  double sigma = 1.0;
  MomentSequence moments;
};

Normalized normalize(const MomentSequence& m) {
  Normalized out;
  out.moments = m;
  out.moments.walks.reset();
  if (!(m.m[2] > 0)) return out;
  out.sigma = std::sqrt(m.m[2]);
  double p = 1.0;
  for (int k = 0; k <= MomentSequence::kMaxOrder; ++k) {
    out.moments.m[k] = m.m[k] / p;
    p *= out.sigma;
  }
  return out;
}

double smallest_eigenvalue(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

using Mat3L = Eigen::Matrix<long double, 3, 3>;

long double det3(const Mat3L& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// det(A - cB) expanded by multilinearity in the columns.
std::array<long double, 4> det_pencil_coefficients(const Mat3L& A, const Mat3L& B) {
  std::array<long double, 4> coef{};
  for (unsigned mask = 0; mask < 8; ++mask) {
    Mat3L mixed = A;
    int k = 0;
    for (int col = 0; col < 3; ++col) {
      if (mask & (1u << col)) {
        mixed.col(col) = B.col(col);
        ++k;
      }
    }
    coef[k] += ((k % 2) ? -1.0L : 1.0L) * det3(mixed);
  }
  return coef;
}

std::array<long double, 4> cubic_of(const MomentSequence& m) {
  Mat3L even, odd;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      even(i, j) = m.m[i + j];
      odd(i, j) = m.m[i + j + 1];
    }
  return det_pencil_coefficients(odd, even);
}

SupportBounds point_measure(const MomentSequence& m, int s, BoundMethod method) {
  SupportBounds b;
  b.s = s;
  b.alpha = b.beta = m.m[1];
  b.method = method;
  b.degenerate = true;
  b.effective_order = 0;
  b.diagnostic = "m2 = 0: spectral measure is a single atom";
  return b;
}

}  // namespace

HankelPair hankel_matrices(const MomentSequence& m, int s) {
  check_order(s);
  HankelPair h;
  h.s = s;
  h.even.resize(s + 1, s + 1);
  h.odd.resize(s + 1, s + 1);
  for (int i = 0; i <= s; ++i)
    for (int j = 0; j <= s; ++j) {
      h.even(i, j) = m.m[i + j];
      h.odd(i, j) = m.m[i + j + 1];
    }
  h.even(0, 0) = 1.0;
  return h;
}

Eigen::MatrixXd localizing_matrix(const HankelPair& h, double c) { return h.odd - c * h.even; }

Eigen::MatrixXd localizing_matrix(const MomentSequence& m, int s, double c) {
  return localizing_matrix(hankel_matrices(m, s), c);
}

bool is_psd(const Eigen::MatrixXd& symmetric, double tol) { return smallest_eigenvalue(symmetric) >= -tol; }

std::string_view to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::AnalyticCubic: return "analytic-cubic";
    case BoundMethod::AnalyticQuadratic: return "analytic-quadratic";
    case BoundMethod::PsdBisection: return "psd-bisection";
  }
  return "unknown";
}

namespace {

enum class Side { Alpha, Beta };

BisectionResult bisect(const MomentSequence& m, int s, const BisectionOptions& options, Side side) {
  check_order(s);
  if (!(options.rel_tol > 0) || !(options.psd_tol >= 0)) throw ArgumentError("bisection tolerances must be positive");
  if (m.n == 0) throw ArgumentError("moment sequence has no node count");

  BisectionResult out;
  if (!(m.m[2] > 0)) {
    out.value = m.m[1];
    return out;
  }
  const auto norm = normalize(m);
  const auto h = hankel_matrices(norm.moments, s);
  // Frobenius bound on the spectral radius, sqrt(n m2), in normalised units.
  const double bound = std::sqrt(static_cast<double>(m.n));
  out.bracket = {-bound * norm.sigma, bound * norm.sigma};

  auto feasible = [&](double c) {
    Eigen::MatrixXd loc = localizing_matrix(h, c);
    if (side == Side::Beta) loc = -loc;
    return is_psd(loc, options.psd_tol);
  };

  double lo = -bound, hi = bound;
  const double stop = options.rel_tol * (hi - lo);
  if (side == Side::Alpha) {
    if (!feasible(lo)) {
      throw NumericalError("alpha bisection: H_s(-B) is not PSD; moments are not those of a measure on [-B, B]");
    }
    if (feasible(hi)) {
      out.value = hi * norm.sigma;
      return out;
    }
    while (hi - lo > stop && out.iterations < options.max_iterations) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
      ++out.iterations;
    }
    out.value = lo * norm.sigma;
  } else {
    if (!feasible(hi)) {
      throw NumericalError("beta bisection: -H_s(B) is not PSD; moments are not those of a measure on [-B, B]");
    }
    if (feasible(lo)) {
      out.value = lo * norm.sigma;
      return out;
    }
    while (hi - lo > stop && out.iterations < options.max_iterations) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? hi : lo) = mid;
      ++out.iterations;
    }
    out.value = hi * norm.sigma;
  }
  return out;
}

}  // namespace

BisectionResult alpha_bisect(const MomentSequence& m, int s, const BisectionOptions& options) {
  return bisect(m, s, options, Side::Alpha);
}

BisectionResult beta_bisect(const MomentSequence& m, int s, const BisectionOptions& options) {
  return bisect(m, s, options, Side::Beta);
}

SupportBounds bounds_bisect(const MomentSequence& m, int s, const BisectionOptions& options) {
  check_order(s);
  if (!(m.m[2] > 0)) return point_measure(m, s, BoundMethod::PsdBisection);
  const auto a = alpha_bisect(m, s, options);
  const auto b = beta_bisect(m, s, options);
  SupportBounds out;
  out.s = s;
  out.effective_order = s;
  out.alpha = a.value;
  out.beta = b.value;
  out.method = BoundMethod::PsdBisection;
  out.bracket = a.bracket;
  out.iterations = a.iterations + b.iterations;
  if (relative_hankel_determinant(m, s) < kDegenerateRatio) {
    // Bisection remains exact on singular moment matrices; the flag is informational.
    out.degenerate = true;
    out.diagnostic = "moment matrix R_" + std::to_string(2 * s) + " is singular";
  }
  return out;
}

long double relative_hankel_determinant(const MomentSequence& m, int s) {
  check_order(s);
  if (!(m.m[2] > 0)) return 0.0L;
  if (s == 1) return (static_cast<long double>(m.m[2]) - static_cast<long double>(m.m[1]) * m.m[1]) / m.m[2];

  constexpr Count exact_limit = Count{1} << 40;
  if (m.walks && (*m.walks)[4] < exact_limit && (*m.walks)[0] < exact_limit) {
    // n^3 det R_4 over integers: Hankel of closed-walk counts w_0..w_4.
    const auto& w = *m.walks;
    using I = __int128;
    const I w0 = w[0], w1 = w[1], w2 = w[2], w3 = w[3], w4 = w[4];
    const I det = w0 * (w2 * w4 - w3 * w3) - w1 * (w1 * w4 - w3 * w2) + w2 * (w1 * w3 - w2 * w2);
    const I diag = w0 * w2 * w4;
    if (diag == 0) return 0.0L;
    return static_cast<long double>(det) / static_cast<long double>(diag);
  }
  const auto norm = normalize(m);
  Mat3L even;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) even(i, j) = norm.moments.m[i + j];
  const long double diag = even(0, 0) * even(1, 1) * even(2, 2);
  return diag > 0 ? det3(even) / diag : 0.0L;
}

std::array<long double, 4> localizing_determinant_cubic(const MomentSequence& m) { return cubic_of(m); }

SupportBounds bounds_analytic_s1(const MomentSequence& m) {
  if (!(m.m[2] > 0)) return point_measure(m, 1, BoundMethod::AnalyticQuadratic);
  SupportBounds out;
  out.s = 1;
  out.effective_order = 1;
  out.method = BoundMethod::AnalyticQuadratic;
  const auto norm = normalize(m);
  const long double m1 = norm.moments.m[1], m2 = norm.moments.m[2], m3 = norm.moments.m[3];
  const long double lead = m2 - m1 * m1;
  if (lead <= kDegenerateRatio * m2) {
    auto b = point_measure(m, 1, BoundMethod::AnalyticQuadratic);
    b.diagnostic = "variance is zero: spectral measure is a single atom";
    return b;
  }
  // det H_1(c) = (m1 - c)(m3 - c m2) - (m2 - c m1)^2
  const auto roots = solve_quadratic(lead, m1 * m2 - m3, m1 * m3 - m2 * m2);
  if (roots.count != 2) throw NumericalError("order-1 localizing determinant has no real roots");
  out.alpha = static_cast<double>(roots.roots[0]) * norm.sigma;
  out.beta = static_cast<double>(roots.roots[1]) * norm.sigma;
  return out;
}

SupportBounds bounds_analytic_s2(const MomentSequence& m) {
  if (!(m.m[2] > 0)) return point_measure(m, 2, BoundMethod::AnalyticCubic);
  const auto ratio = relative_hankel_determinant(m, 2);
  if (ratio < kDegenerateRatio) {
    auto b = bounds_analytic_s1(m);
    b.s = 2;
    b.degenerate = true;
    if (b.diagnostic.empty()) b.diagnostic = "R_4 is singular (fewer than three spectral atoms); order-1 bounds used";
    return b;
  }
  const auto norm = normalize(m);
  const auto coef = cubic_of(norm.moments);
  const auto roots = solve_cubic(coef[3], coef[2], coef[1], coef[0]);
  if (roots.single_real_root) {
    auto b = bounds_analytic_s1(m);
    b.s = 2;
    b.degenerate = true;
    b.diagnostic = "det H_2(c) has one real root; moments inconsistent with a spectral measure, order-1 bounds used";
    return b;
  }
  SupportBounds out;
  out.s = 2;
  out.effective_order = 2;
  out.method = BoundMethod::AnalyticCubic;
  out.alpha = static_cast<double>(roots.roots[0]) * norm.sigma;
  out.beta = static_cast<double>(roots.roots[2]) * norm.sigma;
  return out;
}

SupportBounds bounds_analytic(const MomentSequence& m, int s) {
  check_order(s);
  return s == 1 ? bounds_analytic_s1(m) : bounds_analytic_s2(m);
}

std::string_view to_string(StructuralProperty p) {
  switch (p) {
    case StructuralProperty::Edges: return "e";
    case StructuralProperty::Triangles: return "triangles";
    case StructuralProperty::Quadrangles: return "quadrangles";
    case StructuralProperty::Pentagons: return "pentagons";
    case StructuralProperty::W2: return "W2";
    case StructuralProperty::C_dt: return "C_dt";
  }
  return "unknown";
}

StructuralProperty parse_structural_property(std::string_view name) {
  if (name == "e" || name == "edges") return StructuralProperty::Edges;
  if (name == "triangles" || name == "Delta") return StructuralProperty::Triangles;
  if (name == "quadrangles" || name == "Q") return StructuralProperty::Quadrangles;
  if (name == "pentagons" || name == "Pi") return StructuralProperty::Pentagons;
  if (name == "W2") return StructuralProperty::W2;
  if (name == "C_dt") return StructuralProperty::C_dt;
  throw ArgumentError("unknown structural property '" + std::string(name) + "'");
}

namespace {

double& field(CensusAggregates& c, StructuralProperty p) {
  switch (p) {
    case StructuralProperty::Edges: return c.e;
    case StructuralProperty::Triangles: return c.triangles;
    case StructuralProperty::Quadrangles: return c.quadrangles;
    case StructuralProperty::Pentagons: return c.pentagons;
    case StructuralProperty::W2: return c.W2;
    case StructuralProperty::C_dt: return c.C_dt;
  }
  throw ArgumentError("unknown structural property");
}

SupportBounds smooth_bounds_at(const CensusAggregates& c) {
  const auto m = moments_from_aggregates(c);
  if (!(m.m[2] > 0) || m.m[4] < m.m[2] * m.m[2]) {
    throw NumericalError("perturbed census violates the moment inequalities m2 > 0, m4 >= m2^2");
  }
  const auto norm = normalize(m);
  if (!is_psd(hankel_matrices(norm.moments, 2).even, 1e-10)) {
    throw NumericalError("perturbed census yields an indefinite moment matrix R_4");
  }
  const auto b = bounds_analytic_s2(m);
  if (b.degenerate) throw NumericalError("order-2 bounds are degenerate at the perturbed census: " + b.diagnostic);
  return b;
}

}  // namespace

BoundSensitivity bound_sensitivity(const CensusAggregates& c, StructuralProperty property, double h,
                                   Difference scheme) {
  if (!(h > 0) || !std::isfinite(h)) throw ArgumentError("finite-difference step must be positive");
  CensusAggregates plus = c, minus = c;
  field(plus, property) += h;
  if (scheme == Difference::Central) field(minus, property) -= h;
  const auto up = smooth_bounds_at(plus);
  const auto down = smooth_bounds_at(minus);
  const double width = scheme == Difference::Central ? 2 * h : h;
  return {(up.alpha - down.alpha) / width, (up.beta - down.beta) / width};
}

}  // namespace netgame
