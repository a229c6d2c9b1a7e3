#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dirne/eat.hpp"
#include "dirne/entropy.hpp"
#include "dirne/lower.hpp"
#include "dirne/strategy.hpp"
#include "dirne/upper.hpp"

using namespace dirne;

namespace {

double conf_width(ProtocolKind kind, double n, double eps_c, double gamma = 0,
                  double za = 0, double zb = 0) {
  // smallest delta with completeness bound <= eps_c
  const double l = std::log(1 / eps_c);
  switch (kind) {
    case ProtocolKind::SpotCheck: return std::sqrt(l / (2 * n)) / gamma;
    case ProtocolKind::Recycled: return std::sqrt(l / (2 * n));
    case ProtocolKind::Biased: return std::sqrt(l / (32 * n)) / (za * zb);
  }
  return 0;
}

double g1_slope() {
  const BoundCurve g1 = conjectured_curve_sampled(EntropyKind::AB_XYE);
  const double ws = tangent_point(g1);
  return g1.eval(ws) / (ws - 0.75);  // tangent through (3/4, 0)
}

}  // namespace

TEST_CASE("eat_generic asymptotics and monotonicity") {
  MinTradeoff mt;
  mt.d_C = 4;
  mt.max_f = 1.0;
  mt.min_q_f = 1.0;
  mt.var_bound = 0;
  const double r = 1.0;
  EatParams p;
  p.n = 1e12;
  CHECK(eat_generic(p, mt, r) / p.n == doctest::Approx(r).epsilon(1e-3));
  // once positive, doubling n more than doubles the output
  p.n = 1e8;
  const double b1 = eat_generic(p, mt, r);
  CHECK(b1 > 0);
  p.n = 2e8;
  const double b2 = eat_generic(p, mt, r);
  CHECK(b2 > 2 * b1);
  // smaller eps_eat means a smaller bound
  EatParams tighter = p;
  tighter.eps_eat = 1e-20;
  CHECK(eat_generic(tighter, mt, r) < b2);
  // hopeless parameters give zero, not a negative length
  p.n = 10;
  CHECK(eat_generic(p, mt, r) == 0.0);
}

TEST_CASE("alpha grid coarsening never increases the bound") {
  MinTradeoff mt;
  mt.d_C = 16;
  mt.max_f = 5.77;
  mt.min_q_f = -7.1;
  mt.var_bound = 57;
  EatParams fine;
  fine.n = 1e9;
  EatParams coarse = fine;
  coarse.alpha_grid = default_alpha_grid();
  std::vector<double> sub;
  for (size_t i = 0; i < coarse.alpha_grid.size(); i += 4)
    sub.push_back(coarse.alpha_grid[i]);
  coarse.alpha_grid = sub;
  CHECK(eat_generic(coarse, mt, 2.02) <= eat_generic(fine, mt, 2.02) + 1e-9);
}

TEST_CASE("recycled rate brackets and asymptotics") {
  const double slope = g1_slope();
  CHECK(slope == doctest::Approx(15.09).epsilon(2e-2));
  const double w = 0.752;
  EatParams p;

  const double d8 = conf_width(ProtocolKind::Recycled, 1e8, 1e-6);
  const RateResult r8 = recycled_rate(1e8, w, d8, p, slope);
  CHECK(r8.net > 0);

  const double d7 = conf_width(ProtocolKind::Recycled, 1e7, 1e-6);
  const RateResult r7 = recycled_rate(1e7, w, d7, p, slope);
  CHECK(r7.net <= 0);

  const double d12 = conf_width(ProtocolKind::Recycled, 1e12, 1e-6);
  const RateResult r12 = recycled_rate(1e12, w, d12, p, slope);
  CHECK(r12.bits_out / 1e12 ==
        doctest::Approx(2 + slope * (w - d12 - 0.75)).epsilon(1e-3));

  // zero slope: output cannot beat the 2n recycled input
  const RateResult flat = recycled_rate(1e10, w, d8, p, 0.0);
  CHECK(flat.net <= 0);
}

TEST_CASE("error decay is O(n^{-1/2})") {
  const double slope = g1_slope();
  const double w = 0.80;
  EatParams p;
  std::vector<double> logn, logd;
  for (double n : {1e8, 1e9, 1e10, 1e11, 1e12}) {
    const RateResult r = recycled_rate(n, w, 1e-4, p, slope);
    const double deficit = r.rate_r - r.bits_out / n;
    REQUIRE(deficit > 0);
    logn.push_back(std::log(n));
    logd.push_back(std::log(deficit));
  }
  // least-squares slope of log(deficit) vs log(n)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(logn.size());
  for (size_t i = 0; i < logn.size(); ++i) {
    sx += logn[i];
    sy += logd[i];
    sxx += logn[i] * logn[i];
    sxy += logn[i] * logd[i];
  }
  const double fit = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  CHECK(fit >= -0.6);
  CHECK(fit <= -0.4);
}

TEST_CASE("spot-check rate") {
  const BoundCurve F = analytic_a00e_curve();
  EatParams p;
  const double w = 0.752, gamma = 3.383e-4;

  // abort threshold at the classical bound: no certifiable randomness
  const RateResult zero = spot_check_rate(1e10, gamma, w, w - 0.75, p, F);
  CHECK(zero.bits_out == 0.0);

  // the experiment-scale parameters cannot expand at n = 1e10
  const double d10 = conf_width(ProtocolKind::SpotCheck, 1e10, 1e-6, gamma);
  const RateResult r10 = spot_check_rate(1e10, gamma, w, d10, p, F);
  CHECK(r10.net <= 0);

  // output grows with the expected score
  const double d = conf_width(ProtocolKind::SpotCheck, 1e13, 1e-6, gamma);
  const RateResult a = spot_check_rate(1e13, gamma, 0.76, d, p, F);
  const RateResult b = spot_check_rate(1e13, gamma, 0.78, d, p, F);
  const RateResult c = spot_check_rate(1e13, gamma, 0.80, d, p, F);
  CHECK(b.bits_out >= a.bits_out);
  CHECK(c.bits_out >= b.bits_out);
  CHECK(c.bits_out > 0);
}

TEST_CASE("biased rate") {
  const BoundCurve F = analytic_a00e_curve();
  EatParams p;
  const double w = 0.84, n = 1e10;

  // at zeta = 1/2 the Max reduces to the recycled structure (up to the +2)
  {
    const double t = 0.80;
    const double ft = F.eval(t), df = F.derivative(t);
    const double max_half = df / (4 * 0.25) + ft - t * df;
    CHECK(max_half == doctest::Approx(ft + df * (1 - t)).epsilon(1e-12));
  }
  // variance bound is continuous across zeta_a zeta_b = 1/8
  {
    const double df = 2.0;
    const double left = df * df * (1 / (4 * 0.125) - 1);
    const double right = std::pow(df / (8 * 0.125), 2.0);
    CHECK(left == doctest::Approx(right).epsilon(1e-12));
  }

  const double za = 0.05, zb = 0.05;
  const double db = conf_width(ProtocolKind::Biased, n, 1e-6, 0, za, zb);
  const RateResult biased = biased_rate(n, za, zb, w, db, p, F);
  CHECK(biased.bits_out > 0);
  const double gamma = 0.01;
  const double ds = conf_width(ProtocolKind::SpotCheck, n, 1e-6, gamma);
  const RateResult spot = spot_check_rate(n, gamma, w, ds, p, F);
  CHECK(biased.net < spot.net);  // biased pays for the worse completeness
}

TEST_CASE("completeness bounds") {
  // exp(-32 n (delta zeta_a zeta_b)^2) at n = 1e6, delta = 0.01, zetas 1/4
  CHECK(completeness(ProtocolKind::Biased, 1e6, 0.01, 0.25, 0.25) ==
        doctest::Approx(std::exp(-32e6 * std::pow(0.01 * 0.0625, 2.0)))
            .epsilon(1e-12));
  CHECK(completeness(ProtocolKind::SpotCheck, 1e6, 0.0, 0.1) == 1.0);
  double prev = 1.1;
  for (double n : {1e4, 1e5, 1e6}) {
    const double b = completeness(ProtocolKind::Recycled, n, 0.01);
    CHECK(b < prev);
    prev = b;
  }
  CHECK(completeness(ProtocolKind::Recycled, 1e5, 0.02) <
        completeness(ProtocolKind::Recycled, 1e5, 0.01));
}

TEST_CASE("input randomness") {
  CHECK(input_randomness(ProtocolKind::SpotCheck, 1e8, 3.383e-4) ==
        doctest::Approx(1e8 * (binary_entropy(3.383e-4) + 2 * 3.383e-4) + 3));
  CHECK(input_randomness(ProtocolKind::SpotCheck, 1e9, 1e-15) ==
        doctest::Approx(3.0).epsilon(1e-3));
  CHECK(input_randomness(ProtocolKind::Recycled, 10) == 20.0);
  CHECK(input_randomness(ProtocolKind::Biased, 100, 0.25, 0.25) ==
        doctest::Approx(100 * 2 * binary_entropy(0.25)).epsilon(1e-12));
}

TEST_CASE("rates never go negative and grow with n") {
  const double slope = g1_slope();
  EatParams p;
  double prev = -1;
  for (double n : {1e7, 1e8, 1e9, 1e10}) {
    const RateResult r = recycled_rate(n, 0.78, 1e-4, p, slope);
    CHECK(r.bits_out >= 0);
    CHECK(r.bits_out >= prev);
    prev = r.bits_out;
  }
}
