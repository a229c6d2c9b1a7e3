#pragma once

#include <array>
#include <string>
#include <vector>

#include "dirne/strategy.hpp"
#include "dirne/upper.hpp"

// Certified lower bounds on G_{A|XYE}, G_{AB|00E} and G_{AB|XYE} at fixed
// score omega, by cuboid partitioning with per-cuboid derivative bounds,
// plus staircase and convex post-processing. Every per-cuboid quantity is a
// guaranteed enclosure, so each engine's result is <= the true infimum.

namespace dirne {

// K(R, theta) = 1 - H(lambdas(R, theta, delta*)); increasing in R and theta
// on the feasible domain.
double K(double R, double theta);

struct GridSpec {
  std::array<int, 3> cells{40, 40, 40};
  double fallback_value = 2.0;  // M: assigned to cuboids outside the domain
  // optional explicit per-axis breakpoints in normalized [0,1] coordinates
  // (must start at 0 and end at 1); empty means uniform
  std::array<std::vector<double>, 3> breakpoints{};

  std::vector<double> axis(int i, double lo, double hi) const;
  GridSpec doubled() const;
};

struct CertifiedPoint {
  double omega = 0;
  double value = 0;
  std::string engine;
  std::array<int, 3> grid{0, 0, 0};
  double seconds = 0;
};

// G_{A|XYE}(omega) over the (eta, theta, v) domain; branch_mask is a
// diagnostic switch (1 = u_+ only, 2 = u_- only, 3 = both).
CertifiedPoint one_sided_lb(double omega, const GridSpec& grid,
                            int branch_mask = 3);

// G_{AB|00E}(omega) over the (lambda, v, theta) domain.
CertifiedPoint two_sided_00_lb(double omega, const GridSpec& grid);

struct AngleGrid {
  int n_alpha = 96;   // cells per alpha axis on [0, pi)
  int n_beta = 768;   // cells per beta axis on [0, pi)
  int n_bins = 2048;  // threshold bins for the score-profile merge
  bool diagnostic_no_slack = false;  // drop the (R, theta) Taylor slacks
};

// G_{AB|XYE}(omega): outer (R, theta) cuboids with the polynomial minorant
// Phi_n, inner certified angle minimization. Only the first two axes of
// rt_grid are used. Throws std::runtime_error if the cell budget is absurd.
CertifiedPoint two_sided_xye_lb(double omega, const GridSpec& rt_grid,
                                const AngleGrid& angles, int n_poly = 4);

GridSpec default_one_sided_grid();
GridSpec default_two_sided_00_grid();
GridSpec default_xye_rt_grid();

// Monotone step extension: value at omega is the certified value at the
// largest sample <= omega, 0 below the first sample.
struct Staircase {
  std::vector<std::pair<double, double>> steps;
  double eval(double omega) const;
};
Staircase staircase(std::vector<CertifiedPoint> points);

// {(w1,0), (w2,G(w1)), (w3,G(w2)), ...} followed by the lower convex hull:
// a certified lower bound on F = convenv(G). The first point must sit at
// omega = 3/4 with value 0.
BoundCurve shifted_convex_lb(std::vector<CertifiedPoint> points,
                             EntropyKind kind);

}  // namespace dirne
