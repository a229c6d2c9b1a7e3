#pragma once

#include <vector>

#include "dirne/upper.hpp"

// Finite-round extractable-randomness bounds via the entropy accumulation
// theorem for the three CHSH protocols, completeness errors, and the
// net-expansion accounting.

namespace dirne {

enum class ProtocolKind { SpotCheck, Recycled, Biased };

struct EatParams {
  double n = 1e8;             // rounds
  double eps_h = 1.045e-12;   // smoothing parameter
  double eps_eat = 3.09e-12;  // stands in for the non-abort probability
  double eps_ext = 1e-12;     // extractor error (extraction is out of scope)
  std::vector<double> alpha_grid;  // empty: 64 log-spaced points in (1, 2)

  // soundness error reported alongside every bound
  double eps_s() const { return std::max(eps_eat, 2 * eps_h + eps_ext); }
};

std::vector<double> default_alpha_grid();

// Affine min-tradeoff function, reduced to the scalars the EAT needs.
struct MinTradeoff {
  double max_f = 0;     // Max(f) over all distributions on the alphabet
  double min_q_f = 0;   // inf of f over achievable score distributions
  double var_bound = 0; // upper bound on Var_p(f)
  int d_C = 4;          // per-round output alphabet size
};

// n r - (a/(a-1)) log2(1/(eps_eat (1 - sqrt(1 - eps_h^2)))) minus the
// second-order terms, maximized over the alpha grid and floored at 0.
// The inf of Delta(f, p) is floored at 0 (tangent min-tradeoffs satisfy
// Delta >= 0 on convex rate curves).
double eat_generic(const EatParams& params, const MinTradeoff& mt, double r);

struct RateResult {
  double bits_out = 0;
  double bits_in = 0;
  double net = 0;           // bits_out - bits_in
  double rate_r = 0;        // min-tradeoff rate at the abort threshold
  double best_alpha = 0;
  double best_t = 0;        // tangent anchor (when applicable)
};

// Spot-checking protocol: rate from the tangent to F at anchor t,
// spot min-tradeoff f_t = (1/gamma) g_t + (1 - 1/gamma) g_t(delta_1) on
// test symbols. F should be a convex lower bound on F_{AB|00E} (the
// analytic F_{A|00E} curve qualifies).
RateResult spot_check_rate(double n, double gamma, double omega_exp,
                           double delta_conf, const EatParams& params,
                           const BoundCurve& F);

// Recycled-input protocol: f({1-s, s}) = 2 + slope (s - 3/4) with slope =
// G'_{AB|XYE}(omega*); certifies H_min(ABXY|E), net subtracts the 2n input
// bits.
RateResult recycled_rate(double n, double omega_exp, double delta_conf,
                         const EatParams& params, double slope);

// Biased-inputs protocol with P(X=1) = zeta_a, P(Y=1) = zeta_b <= 1/2.
RateResult biased_rate(double n, double zeta_a, double zeta_b,
                       double omega_exp, double delta_conf,
                       const EatParams& params, const BoundCurve& F);

// Honest-device abort probability bounds (Hoeffding).
double completeness(ProtocolKind kind, double n, double delta,
                    double gamma_or_zeta_a = 0, double zeta_b = 0);

// Expected input randomness consumed by the protocol.
double input_randomness(ProtocolKind kind, double n,
                        double gamma_or_zeta_a = 0, double zeta_b = 0);

}  // namespace dirne
