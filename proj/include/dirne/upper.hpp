#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dirne/strategy.hpp"

// Heuristic (non-certified) minimization of the six entropies at fixed
// score, and assembly of upper bound curves including tangent-based
// convexification.

namespace dirne {

struct OptimizerConfig {
  int restarts = 512;
  int max_iters = 400;       // Nelder-Mead iterations per restart
  double reflect = 1.0;
  double expand = 2.0;
  double contract = 0.5;
  double shrink = 0.5;
  double penalty_weight = 64.0;  // exact-penalty factor on |score - omega|
  uint64_t seed = 1;
};

struct BoundCurve {
  enum class Direction { upper, lower, analytic, conjectured };
  EntropyKind kind = EntropyKind::AB_00E;
  Direction direction = Direction::upper;
  std::vector<std::pair<double, double>> samples;  // (omega, value), sorted
  std::string provenance;

  double eval(double omega) const;        // linear interpolation
  double derivative(double omega) const;  // slope of the containing segment
};

const char* to_string(BoundCurve::Direction d);

struct HeuristicResult {
  double value = 0;
  QubitStrategy argmin;
};

// Multistart Nelder-Mead over the reduced strategy space with an exact
// penalty on the score, followed by exact restoration of R (the score is
// affine in R at fixed angles and theta). The returned value is an upper
// bound on G_kind(omega); the strategy reproduces it with
// |score - omega| <= 1e-8.
HeuristicResult heuristic_min(EntropyKind kind, double omega,
                              const InputDist& p, const OptimizerConfig& cfg);

// Pointwise heuristic_min over a sorted grid. Points where no restart finds
// a feasible score are skipped (reported via the provenance string).
BoundCurve curve_upper(EntropyKind kind, const std::vector<double>& omegas,
                       const InputDist& p, const OptimizerConfig& cfg);

// Smallest root of (w - 3/4) G'(w) - G(w) on the sampled range, with G
// piecewise-cubic and derivatives from central differences; bisection to
// 1e-8. Throws std::runtime_error when the expression has constant sign.
double tangent_point(const BoundCurve& curve);

// F(w) = G'(w*) (w - 3/4) for w <= w*, else G(w). Falls back to F = G when
// no tangent point exists.
BoundCurve convexify_through_origin(const BoundCurve& curve);

// Dense samplings of the closed-form curves, for use as rate curves.
BoundCurve analytic_a00e_curve(int n_samples = 1024);
BoundCurve conjectured_curve_sampled(EntropyKind kind, int n_samples = 2048);

}  // namespace dirne
