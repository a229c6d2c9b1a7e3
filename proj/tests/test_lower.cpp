#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dirne/entropy.hpp"
#include "dirne/lower.hpp"
#include "dirne/strategy.hpp"
#include "dirne/upper.hpp"

using namespace dirne;

namespace {

GridSpec small_grid(int a, int b, int c) {
  GridSpec g;
  g.cells = {a, b, c};
  return g;
}

double upper_bound(EntropyKind kind, double omega, uint64_t seed = 31) {
  OptimizerConfig cfg;
  cfg.restarts = 96;
  cfg.max_iters = 300;
  cfg.seed = seed;
  return heuristic_min(kind, omega, InputDist::uniform(), cfg).value;
}

}  // namespace

TEST_CASE("K values and monotonicity") {
  CHECK(K(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(K(1, 0) == doctest::Approx(1.0).epsilon(1e-10));
  const double h = 1e-6;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    const double r = 0.711 + (0.999 - 0.711) * u(rng);
    const double t = u(rng) * theta_limit(r) * 0.98;
    if (t < 2 * h) continue;
    const double dr = (K(r + h, t) - K(r - h, t)) / (2 * h);
    const double dt = (K(r, t + h) - K(r, t - h)) / (2 * h);
    CHECK(dr >= -1e-8);
    CHECK(dt >= -1e-8);
  }
}

TEST_CASE("one_sided_lb basics") {
  CHECK_THROWS_AS(one_sided_lb(0.75, small_grid(4, 4, 4)), std::domain_error);
  CHECK_THROWS_AS(one_sided_lb(0.86, small_grid(4, 4, 4)), std::domain_error);

  const double w = 0.80;
  const CertifiedPoint p = one_sided_lb(w, small_grid(16, 16, 16));
  CHECK(p.value >= 0);
  CHECK(p.value <= 2);
  const double up = upper_bound(EntropyKind::A_XYE, w);
  CHECK(p.value <= up + 1e-9);

  // near the classical score the truth vanishes, so the sound bound must too
  const CertifiedPoint low = one_sided_lb(0.7501, small_grid(12, 12, 12));
  CHECK(low.value <= 0.02);

  // at omega_max the domain degenerates but the bound stays sound
  const CertifiedPoint top = one_sided_lb(kOmegaMax, small_grid(8, 8, 8));
  CHECK(top.value <= upper_bound(EntropyKind::A_XYE, kOmegaMax) + 1e-9);
}

TEST_CASE("one_sided_lb refinement and branches") {
  const double w = 0.84;
  const GridSpec g = small_grid(10, 10, 10);
  const double coarse = one_sided_lb(w, g).value;
  const double fine = one_sided_lb(w, g.doubled()).value;
  CHECK(fine >= coarse - 1e-12);
  // the branch minimum is a true minimum: dropping either branch can only
  // increase the value
  const double both = one_sided_lb(w, g, 3).value;
  CHECK(one_sided_lb(w, g, 1).value >= both - 1e-12);
  CHECK(one_sided_lb(w, g, 2).value >= both - 1e-12);
}

TEST_CASE("two_sided_00_lb basics") {
  CHECK_THROWS_AS(two_sided_00_lb(0.74, small_grid(8, 8, 4)), std::domain_error);
  const double w = 0.84;
  const CertifiedPoint p = two_sided_00_lb(w, small_grid(128, 128, 8));
  CHECK(p.value >= 0);
  CHECK(p.value <= 2);
  CHECK(p.value <= upper_bound(EntropyKind::AB_00E, w) + 1e-9);
  // coarse grids only weaken the bound
  const GridSpec g = small_grid(64, 64, 4);
  const double coarse = two_sided_00_lb(w, g).value;
  const double fine = two_sided_00_lb(w, g.doubled()).value;
  CHECK(fine >= coarse - 1e-12);
  const CertifiedPoint top = two_sided_00_lb(kOmegaMax, small_grid(24, 24, 2));
  CHECK(top.value >= 0);
  CHECK(top.value <= 2);
}

TEST_CASE("two_sided_xye_lb basics and dense-scan diagnostic") {
  const double w = 0.84;
  GridSpec rt = small_grid(6, 4, 0);
  AngleGrid ag;
  ag.n_alpha = 32;
  ag.n_beta = 128;
  ag.n_bins = 512;
  const CertifiedPoint p = two_sided_xye_lb(w, rt, ag, 4);
  CHECK(p.value >= 0);
  CHECK(p.value <= 2);
  CHECK(p.value <= upper_bound(EntropyKind::AB_XYE, w) + 1e-9);

  // with the (R, theta) slacks off, the inner certified minimum has to agree
  // with a direct dense angle scan up to the angle-cell resolution
  AngleGrid nd = ag;
  nd.diagnostic_no_slack = true;
  const double engine = two_sided_xye_lb(w, rt, nd, 4).value;
  const PolyMinorant m = phi_minorant(4);
  const double r_floor = std::sqrt(2.0) * (2 * w - 1);
  const double theta_box = M_PI / 4 - std::acos(1 / (4 * w - 2));
  double oracle = 2.0;
  const int n_scan = 14;
  for (int a = 0; a < rt.cells[0]; ++a)
    for (int b = 0; b < rt.cells[1]; ++b) {
      const double r = r_floor + (1 - r_floor) * a / rt.cells[0];
      const double t = theta_box * b / rt.cells[1];
      if (t > theta_limit(r)) continue;
      const double rc = r * std::cos(t), rs = r * std::sin(t);
      const double kt = K(r, t);
      auto eps = [&](double x, double y, double sign) {
        return sign * (rc * std::cos(2 * (x - y)) + rs * std::cos(2 * (x + y)));
      };
      for (int i0 = 0; i0 < n_scan; ++i0)
        for (int i1 = 0; i1 < n_scan; ++i1)
          for (int j0 = 0; j0 < n_scan; ++j0)
            for (int j1 = 0; j1 < n_scan; ++j1) {
              const double a0 = M_PI * i0 / n_scan, a1 = M_PI * i1 / n_scan;
              const double b0 = M_PI * j0 / n_scan, b1 = M_PI * j1 / n_scan;
              const double e00 = eps(a0, b0, 1), e01 = eps(a0, b1, 1);
              const double e10 = eps(a1, b0, 1), e11 = eps(a1, b1, -1);
              if (e00 + e01 + e10 + e11 < 4 * (2 * w - 1)) continue;
              const double obj = 0.25 * (m.value(e00) + m.value(e01) +
                                         m.value(e10) + m.value(e11)) + kt;
              oracle = std::min(oracle, obj);
            }
    }
  CHECK(engine <= oracle + 1e-9);
  CHECK(engine >= oracle - 0.5);  // scan resolution dominates the slack here
}

TEST_CASE("staircase") {
  CertifiedPoint p1{0.84, 0.5, "e", {1, 1, 1}, 0};
  const Staircase single = staircase({p1});
  CHECK(single.eval(0.80) == 0.0);
  CHECK(single.eval(0.84) == 0.5);
  CHECK(single.eval(kOmegaMax) == 0.5);
  CertifiedPoint p2{0.80, 0.2, "e", {1, 1, 1}, 0};
  const Staircase two = staircase({p1, p2});
  CHECK(two.eval(0.79) == 0.0);
  CHECK(two.eval(0.81) == 0.2);
  CHECK(two.eval(0.85) == 0.5);
  for (double w = 0.76; w < 0.85; w += 0.01) CHECK(two.eval(w) <= 0.5);
}

TEST_CASE("shifted_convex_lb") {
  std::vector<CertifiedPoint> pts;
  pts.push_back({0.75, 0.0, "e", {}, 0});
  pts.push_back({0.78, 0.2, "e", {}, 0});
  pts.push_back({0.81, 0.4, "e", {}, 0});
  pts.push_back({0.84, 0.6, "e", {}, 0});
  const BoundCurve c = shifted_convex_lb(pts, EntropyKind::A_XYE);
  CHECK(c.direction == BoundCurve::Direction::lower);
  // hull lies below the staircase, each value shifted one place
  const Staircase st = staircase(pts);
  for (double w = 0.75; w <= kOmegaMax; w += 0.004)
    CHECK(c.eval(w) <= st.eval(w) + 1e-12);
  CHECK(c.eval(0.78) <= 0.0 + 1e-12);
  CHECK(c.eval(0.84) <= 0.4 + 1e-12);
  // hull of a hull is the hull
  const BoundCurve c2 = shifted_convex_lb(pts, EntropyKind::A_XYE);
  for (size_t i = 0; i < c.samples.size(); ++i)
    CHECK(c2.samples[i].second == doctest::Approx(c.samples[i].second).epsilon(1e-12));

  std::vector<CertifiedPoint> bad = pts;
  bad.erase(bad.begin());
  CHECK_THROWS_AS(shifted_convex_lb(bad, EntropyKind::A_XYE), std::domain_error);
}
