#pragma once

#include <Eigen/Dense>
#include <array>

// The reduced qubit strategy space for CHSH games: Bell-diagonal states
// parameterized by (R, theta, delta) and projective measurements given by
// four angles. All score and entropy formulas consume this family.

namespace dirne {

inline constexpr double kOmegaClassical = 0.75;
inline const double kOmegaMax = 0.25 * (2.0 + std::sqrt(2.0));
// minimal quantum CHSH winning probability, by output relabeling symmetry
inline const double kScoreMin = 0.5 * (1.0 - 1.0 / std::sqrt(2.0));

struct QubitStrategy {
  double R = 0;
  double theta = 0;
  double delta = 0;
  double alpha0 = 0, alpha1 = 0;  // A's measurement angles for x = 0, 1
  double beta0 = 0, beta1 = 0;    // B's measurement angles for y = 0, 1
};

struct ScoreCoeffs {
  double g00 = 0.25, g01 = 0.25, g10 = 0.25, g11 = 0.25;
  static ScoreCoeffs chsh() { return {}; }
};

struct InputDist {
  // p[x][y]
  std::array<std::array<double, 2>, 2> p{{{0.25, 0.25}, {0.25, 0.25}}};
  static InputDist uniform() { return {}; }
  double operator()(int x, int y) const { return p[x][y]; }
  double px(int x) const { return p[x][0] + p[x][1]; }
  double py(int y) const { return p[0][y] + p[1][y]; }
  void validate() const;  // entries >= 0, sum within 1e-12 of 1
};

enum class EntropyKind { AB_00E, AB_XYE, AB_E, A_00E, A_XYE, A_E };

// true when the kind conditions on the inputs X, Y or on nothing, so the
// input distribution matters
inline bool needs_input_dist(EntropyKind k) {
  return k != EntropyKind::AB_00E && k != EntropyKind::A_00E;
}

// Bell-diagonal eigenvalues
//   l0 = 1/4 + R cos(t)/2 + d,  l1 = 1/4 + R sin(t)/2 - d,
//   l2 = 1/4 - R sin(t)/2 - d,  l3 = 1/4 - R cos(t)/2 + d.
Eigen::Vector4d lambdas(double R, double theta, double delta);
bool lambdas_feasible(const Eigen::Vector4d& l);

// Largest theta for which the parameter domain is nonempty at given R.
double theta_limit(double R);

// argmax over delta of H(lambdas) for R > 1/sqrt(2): R^2 cos(2 theta) / 4
double delta_star(double R, double theta);

// Probability-table parameters (eps00, eps01, eps10, eps11); angles are
// reduced mod pi before evaluation (all formulas use doubled angles).
std::array<double, 4> epsilons(const QubitStrategy& s);

// Generalized CHSH score 2 sum_ij gamma_ij eps_ij.
double score(const QubitStrategy& s, const ScoreCoeffs& c = ScoreCoeffs::chsh());

// Conditional von Neumann entropies of the post-measurement state, in bits.
double entropy(const QubitStrategy& s, EntropyKind kind, const InputDist& p);
double entropy(const QubitStrategy& s, EntropyKind kind);  // 00E kinds only

// Analytic F_{A|00E}(omega) = 1 - H_bin((1 + sqrt(16 w (w-1) + 3))/2) on
// [3/4, (1+1/sqrt 2)/2].
double f_a00e_analytic(double omega);

// Conjectured tight curves: g1 for AB|XYE, g2 for A|XYE.
double conjectured_curve(EntropyKind kind, double omega);

// The strategy (R = sqrt(2)(2w-1), theta = 0, delta = R^2/4, 0, pi/4,
// pi/8, -pi/8) achieving score omega with H(AB|XYE) = g1(omega).
QubitStrategy optimal_strategy_at(double omega);

}  // namespace dirne
