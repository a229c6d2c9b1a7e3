#include "dirne/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dirne {

namespace {

inline double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

}  // namespace

double binary_entropy(double p) {
  if (p < -1e-12 || p > 1 + 1e-12)
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1 - p);
}

double phi(double x) {
  if (std::abs(x) > 1 + 1e-12)
    throw std::domain_error("phi: argument outside [-1,1]");
  x = std::clamp(x, -1.0, 1.0);
  return binary_entropy(0.5 + 0.5 * x);
}

double shannon(const Eigen::Ref<const Eigen::VectorXd>& p) {
  double sum = 0, h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double v = p[i];
    if (v < -1e-12) throw std::domain_error("shannon: negative entry");
    if (v < 0) v = 0;
    sum += v;
    h -= xlog2x(v);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::domain_error("shannon: probabilities do not sum to 1");
  return h;
}

namespace {

// Integrand of I_k in the z variable.
inline double i_integrand(double z, int k) {
  const double r = (1 - z) / z;
  return std::pow(r, 2 * k) / (z * M_LN2);
}

double adaptive_simpson(int k, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = i_integrand(lm, k), frm = i_integrand(rm, k);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
    return left + right + (left + right - whole) / 15;
  return adaptive_simpson(k, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(k, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double compute_i_coeff(int k) {
  const double a = 0.5, b = 1.0, m = 0.75;
  const double fa = i_integrand(a, k), fm = i_integrand(m, k),
               fb = i_integrand(b, k);
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return adaptive_simpson(k, a, b, fa, fm, fb, whole, 1e-13, 40);
}

}  // namespace

double i_coeff(int k) {
  if (k < 0) throw std::domain_error("i_coeff: negative index");
  static std::mutex mu;
  static std::vector<double> cache;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(compute_i_coeff(static_cast<int>(cache.size())));
  return cache[k];
}

double PolyMinorant::value(double x) const {
  const double y = x * x;
  double p = 0;  // sum I_k y^k by Horner
  for (int k = order; k >= 0; --k) p = p * y + coeffs[k];
  return (1 - y) * p;
}

double PolyMinorant::derivative(double x) const {
  const double y = x * x;
  double p = coeffs[order], dp = 0;  // P(y) and P'(y), simultaneous Horner
  for (int k = order - 1; k >= 0; --k) {
    dp = dp * y + p;
    p = p * y + coeffs[k];
  }
  // d/dx [(1-y)P(y)] with y=x^2
  return 2 * x * ((1 - y) * dp - p);
}

double PolyMinorant::derivative_at_one() const { return 2 * coeffs.sum(); }

PolyMinorant phi_minorant(int n) {
  if (n < 1) throw std::domain_error("phi_minorant: order must be >= 1");
  PolyMinorant m;
  m.order = n;
  m.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) m.coeffs[k] = i_coeff(k);
  m.tail = i_coeff(n + 1);
  return m;
}

Eigen::Vector2d eig_sym(const Eigen::Matrix2d& m) {
  const double half_tr = 0.5 * (m(0, 0) + m(1, 1));
  const double d = 0.5 * (m(0, 0) - m(1, 1));
  const double r = std::sqrt(d * d + m(0, 1) * m(1, 0));
  return {half_tr + r, half_tr - r};
}

Eigen::Vector4d eig_sym(const Eigen::Matrix4d& m) {
  Eigen::Matrix4d a = 0.5 * (m + m.transpose());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off < 1e-14) break;
    // row-major sweep order, fixed for cross-platform determinism
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transpose() * a * rot;
        a = 0.5 * (a + a.transpose());
      }
    }
  }
  Eigen::Vector4d ev = a.diagonal();
  std::sort(ev.data(), ev.data() + 4, std::greater<double>());
  return ev;
}

namespace {

template <typename Mat>
double helstrom_impl(const Mat& rho1, const Mat& rho2) {
  for (const Mat* rho : {&rho1, &rho2}) {
    if (std::abs(rho->trace() - 1.0) > 1e-9)
      throw std::domain_error("helstrom: state is not unit trace");
    auto ev = eig_sym(*rho);
    if (ev.minCoeff() < -1e-10)
      throw std::domain_error("helstrom: state is not positive semidefinite");
  }
  const Mat diff = rho1 - rho2;
  const double trace_norm = eig_sym(diff).cwiseAbs().sum();
  return 0.5 + 0.25 * trace_norm;
}

}  // namespace

double helstrom(const Eigen::Matrix2d& rho1, const Eigen::Matrix2d& rho2) {
  return helstrom_impl(rho1, rho2);
}

double helstrom(const Eigen::Matrix4d& rho1, const Eigen::Matrix4d& rho2) {
  return helstrom_impl(rho1, rho2);
}

}  // namespace dirne
