#include "dirne/eat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirne/entropy.hpp"
#include "dirne/strategy.hpp"

namespace dirne {

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  const int n = 64;
  const double lo = 1e-9, hi = 0.999;  // alpha - 1, log-spaced
  for (int i = 0; i < n; ++i)
    grid.push_back(1 + lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return grid;
}

namespace {

void check_params(const EatParams& p) {
  if (p.n < 0) throw std::domain_error("eat: n must be nonnegative");
  if (p.eps_h <= 0 || p.eps_h >= 1)
    throw std::domain_error("eat: eps_h must lie in (0,1)");
  if (p.eps_eat <= 0 || p.eps_eat >= 1)
    throw std::domain_error("eat: eps_eat must lie in (0,1)");
}

// log2(1/(eps_eat (1 - sqrt(1 - eps_h^2)))), computed stably for tiny eps_h
double log_term(const EatParams& p) {
  const double x = p.eps_h;
  const double one_minus_root = x * x / (1 + std::sqrt(std::max(0.0, 1 - x * x)));
  return -std::log2(p.eps_eat * one_minus_root);
}

}  // namespace

double eat_generic(const EatParams& params, const MinTradeoff& mt, double r) {
  check_params(params);
  if (mt.var_bound < 0 || mt.max_f < mt.min_q_f - 1e-12)
    throw std::domain_error("eat_generic: invalid min-tradeoff scalars");
  const double n = params.n;
  const double L = log_term(params);
  const double v_term =
      0.5 * M_LN2 *
      std::pow(std::log2(1.0 + 2 * mt.d_C) + std::sqrt(2 + mt.var_bound), 2.0);
  const double spread = std::log2(static_cast<double>(mt.d_C)) + mt.max_f - mt.min_q_f;
  const auto& grid =
      params.alpha_grid.empty() ? default_alpha_grid() : params.alpha_grid;
  double best = 0;
  for (double alpha : grid) {
    if (alpha <= 1 || alpha >= 2) continue;
    const double am1 = alpha - 1;
    const double k_alpha = std::pow(2.0, am1 * spread) *
                           std::pow(std::log(std::pow(2.0, spread) + M_E * M_E), 3.0) /
                           (6 * std::pow(2 - alpha, 3.0) * M_LN2);
    // inf_p Delta(f,p) floored at 0
    const double bound =
        n * r - alpha / am1 * L - n * am1 * v_term - n * am1 * am1 * k_alpha;
    if (bound > best) best = bound;
  }
  return best;
}

namespace {

// anchors: 32 points spanning [3/4 + delta, omega_exp - delta] plus the
// curve knots falling inside
std::vector<double> anchor_grid(const BoundCurve& F, double omega_exp,
                                double delta_conf) {
  const double lo = kOmegaClassical + delta_conf;
  const double hi = omega_exp - delta_conf;
  std::vector<double> ts;
  if (hi <= lo) {
    ts.push_back(std::max(lo, std::min(hi, omega_exp)));
    return ts;
  }
  for (int i = 0; i < 32; ++i) ts.push_back(lo + (hi - lo) * i / 31);
  for (const auto& s : F.samples)
    if (s.first > lo && s.first < hi) ts.push_back(s.first);
  std::sort(ts.begin(), ts.end());
  return ts;
}

}  // namespace

RateResult spot_check_rate(double n, double gamma, double omega_exp,
                           double delta_conf, const EatParams& params,
                           const BoundCurve& F) {
  if (gamma <= 0 || gamma >= 0.5)
    throw std::domain_error("spot_check_rate: gamma must lie in (0, 1/2)");
  EatParams p = params;
  p.n = n;
  RateResult out;
  out.bits_in = input_randomness(ProtocolKind::SpotCheck, n, gamma);
  for (double t : anchor_grid(F, omega_exp, delta_conf)) {
    const double ft = F.eval(t);
    const double df = std::max(0.0, F.derivative(t));
    MinTradeoff mt;
    mt.d_C = 4;
    mt.max_f = ft + df * (1 - t);
    mt.min_q_f = ft + df * (kScoreMin - t);
    mt.var_bound = df * df * (1 / gamma - 1);
    const double r = ft + (omega_exp - delta_conf - t) * df;
    if (r <= 0) continue;
    const double bits = eat_generic(p, mt, r);
    if (bits > out.bits_out) {
      out.bits_out = bits;
      out.rate_r = r;
      out.best_t = t;
    }
  }
  out.net = out.bits_out - out.bits_in;
  return out;
}

RateResult recycled_rate(double n, double omega_exp, double delta_conf,
                         const EatParams& params, double slope) {
  if (slope < 0) throw std::domain_error("recycled_rate: slope must be >= 0");
  EatParams p = params;
  p.n = n;
  MinTradeoff mt;
  mt.d_C = 16;  // d_A d_B d_X d_Y
  mt.max_f = 2 + slope / 4;
  mt.min_q_f = 2 + slope * (kScoreMin - 0.75);
  mt.var_bound = slope * slope / 4;
  RateResult out;
  out.rate_r = 2 + slope * (omega_exp - delta_conf - 0.75);
  out.bits_in = input_randomness(ProtocolKind::Recycled, n);
  out.bits_out = eat_generic(p, mt, out.rate_r);
  out.net = out.bits_out - out.bits_in;
  return out;
}

RateResult biased_rate(double n, double zeta_a, double zeta_b,
                       double omega_exp, double delta_conf,
                       const EatParams& params, const BoundCurve& F) {
  if (zeta_a <= 0 || zeta_a > 0.5 || zeta_b <= 0 || zeta_b > 0.5)
    throw std::domain_error("biased_rate: zetas must lie in (0, 1/2]");
  EatParams p = params;
  p.n = n;
  RateResult out;
  out.bits_in = input_randomness(ProtocolKind::Biased, n, zeta_a, zeta_b);
  const double zz = zeta_a * zeta_b;
  for (double t : anchor_grid(F, omega_exp, delta_conf)) {
    const double ft = F.eval(t);
    const double df = std::max(0.0, F.derivative(t));
    MinTradeoff mt;
    mt.d_C = 4;
    mt.max_f = df / (4 * zz) + ft - t * df;
    mt.min_q_f = ft - df * (t - kScoreMin);
    mt.var_bound = zz < 0.125 ? df * df * (1 / (4 * zz) - 1)
                              : std::pow(df / (8 * zz), 2.0);
    const double r = ft + (omega_exp - delta_conf - t) * df;
    if (r <= 0) continue;
    const double bits = eat_generic(p, mt, r);
    if (bits > out.bits_out) {
      out.bits_out = bits;
      out.rate_r = r;
      out.best_t = t;
    }
  }
  out.net = out.bits_out - out.bits_in;
  return out;
}

double completeness(ProtocolKind kind, double n, double delta,
                    double gamma_or_zeta_a, double zeta_b) {
  if (n < 0 || delta < 0) throw std::domain_error("completeness: bad inputs");
  double exponent = 0;
  switch (kind) {
    case ProtocolKind::SpotCheck: {
      const double gamma = gamma_or_zeta_a;
      exponent = 2 * n * gamma * gamma * delta * delta;
      break;
    }
    case ProtocolKind::Recycled:
      exponent = 2 * n * delta * delta;  // spot formula at gamma = 1
      break;
    case ProtocolKind::Biased: {
      const double prod = delta * gamma_or_zeta_a * zeta_b;
      exponent = 32 * n * prod * prod;
      break;
    }
  }
  return std::min(1.0, std::exp(-exponent));
}

double input_randomness(ProtocolKind kind, double n, double gamma_or_zeta_a,
                        double zeta_b) {
  switch (kind) {
    case ProtocolKind::SpotCheck: {
      const double gamma = gamma_or_zeta_a;
      return n * (binary_entropy(gamma) + 2 * gamma) + 3;
    }
    case ProtocolKind::Recycled:
      return 2 * n;  // recycled into the output
    case ProtocolKind::Biased:
      return n * (binary_entropy(gamma_or_zeta_a) + binary_entropy(zeta_b));
  }
  return 0;
}

}  // namespace dirne
