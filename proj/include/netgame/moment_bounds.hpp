#pragma once

#include <array>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "netgame/census.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

/// Hankel moment matrices of order s: even(i, j) = m_{i+j}, odd(i, j) = m_{i+j+1}.
struct HankelPair {
  int s = 1;
  Eigen::MatrixXd even;  // (s+1) x (s+1), built from m_0..m_2s
  Eigen::MatrixXd odd;   // (s+1) x (s+1), built from m_1..m_2s+1
};

/// Supported orders are 1 and 2 (five moments are available).
HankelPair hankel_matrices(const MomentSequence& m, int s);

/// H_s(c) = odd - c * even.
Eigen::MatrixXd localizing_matrix(const HankelPair& h, double c);
Eigen::MatrixXd localizing_matrix(const MomentSequence& m, int s, double c);

/// Smallest eigenvalue >= -tol.
bool is_psd(const Eigen::MatrixXd& symmetric, double tol);

enum class BoundMethod { AnalyticCubic, AnalyticQuadratic, PsdBisection };
std::string_view to_string(BoundMethod method);

/// Inner approximation [alpha, beta] of [lambda_min, lambda_max] from the
/// first 2s+1 moments: lambda_min <= alpha and beta <= lambda_max.
struct SupportBounds {
  int s = 2;
  double alpha = 0.0;
  double beta = 0.0;
  BoundMethod method = BoundMethod::AnalyticCubic;
  /// The measure has too few atoms for order s; a lower order was used.
  bool degenerate = false;
  /// Order actually used after any degeneracy fallback.
  int effective_order = 2;
  /// Initial bisection bracket [-B, B] (bisection only).
  std::array<double, 2> bracket{0.0, 0.0};
  /// Bisection steps taken for alpha plus those for beta (bisection only).
  int iterations = 0;
  std::string diagnostic;
};

struct BisectionOptions {
  /// Stop once the bracket is narrower than rel_tol times its initial width.
  double rel_tol = 1e-9;
  /// PSD acceptance threshold on the smallest eigenvalue, applied to moments
  /// normalised so that m_2 = 1.
  double psd_tol = 1e-10;
  int max_iterations = 200;
};

struct BisectionResult {
  double value = 0.0;
  std::array<double, 2> bracket{0.0, 0.0};
  int iterations = 0;
};

/// max{c : H_s(c) PSD}. The feasible set is a ray (-inf, alpha_s].
BisectionResult alpha_bisect(const MomentSequence& m, int s, const BisectionOptions& options = {});
/// min{c : -H_s(c) PSD}. The feasible set is a ray [beta_s, inf).
BisectionResult beta_bisect(const MomentSequence& m, int s, const BisectionOptions& options = {});

SupportBounds bounds_bisect(const MomentSequence& m, int s, const BisectionOptions& options = {});

/// Order-1 bounds: the two roots of the quadratic det H_1(c).
SupportBounds bounds_analytic_s1(const MomentSequence& m);
/// Order-2 bounds: smallest and largest roots of the cubic det H_2(c). Falls
/// back to order 1 (degenerate = true) when the moment matrix R_4 is singular.
SupportBounds bounds_analytic_s2(const MomentSequence& m);
SupportBounds bounds_analytic(const MomentSequence& m, int s);

/// Coefficients (c^0, c^1, c^2, c^3) of det H_2(c).
std::array<long double, 4> localizing_determinant_cubic(const MomentSequence& m);

/// Relative determinant of the even Hankel matrix, det / prod(diagonal), in [0, 1]
/// for genuine moment sequences. Computed exactly when integer walk counts exist.
long double relative_hankel_determinant(const MomentSequence& m, int s);

enum class StructuralProperty { Edges, Triangles, Quadrangles, Pentagons, W2, C_dt };
std::string_view to_string(StructuralProperty p);
StructuralProperty parse_structural_property(std::string_view name);

enum class Difference { Central, Forward };

struct BoundSensitivity {
  double d_alpha = 0.0;
  double d_beta = 0.0;
};

/// Finite-difference derivative of the order-2 bounds with respect to one
/// aggregate count, all other counts held fixed.
BoundSensitivity bound_sensitivity(const CensusAggregates& c, StructuralProperty property, double h,
                                   Difference scheme = Difference::Central);

}  // namespace netgame
