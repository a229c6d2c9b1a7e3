#include "dirne/strategy.hpp"

#include <cmath>
#include <stdexcept>

#include "dirne/entropy.hpp"

namespace dirne {

namespace {

// canonical angle range [0, pi); every formula depends on doubled angles
inline double reduce_angle(double a) {
  double r = std::fmod(a, M_PI);
  if (r < 0) r += M_PI;
  return r;
}

inline double sq(double x) { return x * x; }

}  // namespace

void InputDist::validate() const {
  double sum = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      if (p[x][y] < 0) throw std::domain_error("InputDist: negative entry");
      sum += p[x][y];
    }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::domain_error("InputDist: entries do not sum to 1");
}

Eigen::Vector4d lambdas(double R, double theta, double delta) {
  const double c = 0.5 * R * std::cos(theta), s = 0.5 * R * std::sin(theta);
  return {0.25 + c + delta, 0.25 + s - delta, 0.25 - s - delta,
          0.25 - c + delta};
}

bool lambdas_feasible(const Eigen::Vector4d& l) {
  return l.minCoeff() >= -1e-12 && l.maxCoeff() <= 1 + 1e-12 &&
         std::abs(l.sum() - 1.0) <= 1e-12;
}

double theta_limit(double R) {
  if (R <= 1 / std::sqrt(2.0)) return M_PI / 4;
  return M_PI / 4 - std::acos(1 / (R * std::sqrt(2.0)));
}

double delta_star(double R, double theta) {
  return 0.25 * R * R * std::cos(2 * theta);
}

std::array<double, 4> epsilons(const QubitStrategy& s) {
  const double a0 = reduce_angle(s.alpha0), a1 = reduce_angle(s.alpha1);
  const double b0 = reduce_angle(s.beta0), b1 = reduce_angle(s.beta1);
  const double rc = s.R * std::cos(s.theta), rs = s.R * std::sin(s.theta);
  auto eps = [&](double a, double b, double sign) {
    return 0.25 *
           (1 + sign * (rc * std::cos(2 * (a - b)) + rs * std::cos(2 * (a + b))));
  };
  return {eps(a0, b0, 1), eps(a0, b1, 1), eps(a1, b0, 1), eps(a1, b1, -1)};
}

double score(const QubitStrategy& s, const ScoreCoeffs& c) {
  const auto e = epsilons(s);
  return 2 * (c.g00 * e[0] + c.g01 * e[1] + c.g10 * e[2] + c.g11 * e[3]);
}

namespace {

// <phi^A_{a|x}| x <phi^B_{b|y}| applied to the four Bell states, times
// sqrt(lambda_i): the conditional states |zeta^{abxy}> of the purification,
// written in the Schmidt basis of E. Components are real.
Eigen::Vector4d zeta_vec(const Eigen::Vector4d& sqrt_l, double alpha,
                         double beta) {
  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  Eigen::Vector4d ip{std::cos(beta - alpha), std::cos(beta + alpha),
                     std::sin(beta + alpha), std::sin(beta - alpha)};
  return inv_sqrt2 * sqrt_l.cwiseProduct(ip);
}

double entropy_of_mixture(const Eigen::Matrix4d& m) {
  const double tr = m.trace();
  if (tr <= 1e-15) return 0;
  Eigen::Vector4d ev = eig_sym(m) / tr;
  for (int i = 0; i < 4; ++i) ev[i] = std::max(ev[i], 0.0);
  ev /= ev.sum();
  return shannon(ev);
}

}  // namespace

double entropy(const QubitStrategy& s, EntropyKind kind, const InputDist& p) {
  p.validate();
  if (!lambdas_feasible(lambdas(s.R, s.theta, s.delta)))
    throw std::domain_error("entropy: infeasible strategy (lambdas)");
  // The score does not depend on delta, so for the four kinds whose formula
  // depends on delta only through H(lambdas) the optimization sets
  // delta = delta*; evaluating there makes these kinds delta-independent.
  const bool delta_removed =
      kind != EntropyKind::AB_E && kind != EntropyKind::A_E;
  const double delta_eff =
      delta_removed ? delta_star(s.R, s.theta) : s.delta;
  const Eigen::Vector4d l = lambdas(s.R, s.theta, delta_eff);
  Eigen::Vector4d lc = l.cwiseMax(0.0);
  lc /= lc.sum();
  const double h_lambda = shannon(lc);
  const auto e = epsilons(s);

  switch (kind) {
    case EntropyKind::AB_00E:
      return 1 + binary_entropy(std::clamp(2 * e[0], 0.0, 1.0)) - h_lambda;
    case EntropyKind::AB_XYE: {
      double avg = 0;
      const double exy[2][2] = {{e[0], e[1]}, {e[2], e[3]}};
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          avg += p(x, y) * binary_entropy(std::clamp(2 * exy[x][y], 0.0, 1.0));
      return 1 + avg - h_lambda;
    }
    case EntropyKind::A_XYE: {
      const double s2t = std::sin(2 * s.theta);
      double avg = 0;
      for (int x = 0; x < 2; ++x) {
        const double alpha = x == 0 ? s.alpha0 : s.alpha1;
        const double g = s.R * std::sqrt(std::max(0.0, 1 + s2t * std::cos(4 * alpha)));
        avg += p.px(x) * phi(std::min(g, 1.0));
      }
      return 1 + avg - h_lambda;
    }
    case EntropyKind::A_00E: {
      const double d03 = lc[0] - lc[3], d12 = lc[1] - lc[2];
      const double arg =
          2 * d03 * d12 * std::cos(4 * s.alpha0) + sq(d03) + sq(d12);
      return 1 + phi(std::min(std::sqrt(std::max(arg, 0.0)), 1.0)) - h_lambda;
    }
    case EntropyKind::AB_E:
    case EntropyKind::A_E:
      break;
  }

  // AB|E and A|E: mix the pure conditional states |zeta^{abxy}> over the
  // inputs and take eigenvalues of the 4x4 Gram mixtures.
  const Eigen::Vector4d sqrt_l = lc.cwiseSqrt();
  const double angles_a[2] = {s.alpha0, s.alpha1};
  const double angles_b[2] = {s.beta0, s.beta1};

  if (kind == EntropyKind::AB_E) {
    double h_ab_given_e = -h_lambda;
    // p_AB(0,0)=p_AB(1,1)=q and p_AB(0,1)=p_AB(1,0)=1/2-q
    const double exy[2][2] = {{e[0], e[1]}, {e[2], e[3]}};
    double q = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        q += p(x, y) * (x == 1 && y == 1 ? 0.5 - exy[x][y] : exy[x][y]);
    Eigen::Vector4d pab{q, 0.5 - q, 0.5 - q, q};
    pab = pab.cwiseMax(0.0);
    pab /= pab.sum();
    h_ab_given_e += shannon(pab);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Eigen::Matrix4d mix = Eigen::Matrix4d::Zero();
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y) {
            const Eigen::Vector4d z = zeta_vec(sqrt_l, angles_a[x] + a * M_PI_2,
                                               angles_b[y] + b * M_PI_2);
            mix += p(x, y) * z * z.transpose();
          }
        h_ab_given_e += mix.trace() * entropy_of_mixture(mix);
      }
    return h_ab_given_e;
  }

  // A|E
  double h_a_given_e = 1 - h_lambda;
  for (int a = 0; a < 2; ++a) {
    Eigen::Matrix4d mix = Eigen::Matrix4d::Zero();
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const Eigen::Vector4d z = zeta_vec(sqrt_l, angles_a[x] + a * M_PI_2,
                                             angles_b[y] + b * M_PI_2);
          mix += 2 * p(x, y) * z * z.transpose();
        }
    h_a_given_e += 0.5 * entropy_of_mixture(mix);
  }
  return h_a_given_e;
}

double entropy(const QubitStrategy& s, EntropyKind kind) {
  if (needs_input_dist(kind))
    throw std::invalid_argument(
        "entropy: this kind requires an input distribution");
  return entropy(s, kind, InputDist::uniform());
}

double f_a00e_analytic(double omega) {
  if (omega < kOmegaClassical - 1e-12 || omega > kOmegaMax + 1e-12)
    throw std::domain_error("f_a00e_analytic: omega outside [3/4, omega_max]");
  const double rad = std::max(0.0, 16 * omega * (omega - 1) + 3);
  return 1 - binary_entropy(std::min(0.5 * (1 + std::sqrt(rad)), 1.0));
}

double conjectured_curve(EntropyKind kind, double omega) {
  if (omega < kOmegaClassical - 1e-12 || omega > kOmegaMax + 1e-12)
    throw std::domain_error("conjectured_curve: omega outside [3/4, omega_max]");
  const double u = std::min(0.5 + (2 * omega - 1) / std::sqrt(2.0), 1.0);
  if (kind == EntropyKind::AB_XYE)
    return 1 + binary_entropy(std::clamp(omega, 0.0, 1.0)) -
           2 * binary_entropy(u);
  if (kind == EntropyKind::A_XYE) return 1 - binary_entropy(u);
  throw std::domain_error("conjectured_curve: only AB_XYE and A_XYE");
}

QubitStrategy optimal_strategy_at(double omega) {
  QubitStrategy s;
  s.R = std::sqrt(2.0) * (2 * omega - 1);
  s.theta = 0;
  s.delta = 0.25 * s.R * s.R;
  s.alpha0 = 0;
  s.alpha1 = M_PI / 4;
  s.beta0 = M_PI / 8;
  s.beta1 = -M_PI / 8;
  return s;
}

}  // namespace dirne
