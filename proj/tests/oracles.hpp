#pragma once

// Independent oracles used by the tests. These deliberately avoid the code
// paths they check: eigenvalues via the characteristic polynomial,
// distinguishability via direct measurement search, hulls by brute force.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace oracles {

// Characteristic polynomial of a 4x4 matrix by Faddeev-LeVerrier:
// coefficients of x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0].
inline std::array<double, 4> charpoly4(const Eigen::Matrix4d& a) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  std::array<double, 4> c{};
  double coeff = 1;
  for (int k = 1; k <= 4; ++k) {
    m = a * m;
    coeff = -m.trace() / k;
    c[4 - k] = coeff;
    m += coeff * Eigen::Matrix4d::Identity();
  }
  return c;
}

// Real roots of the (symmetric-matrix) characteristic polynomial via sign
// scanning plus bisection. Intended for matrices with simple spectrum.
inline Eigen::Vector4d eig_via_charpoly(const Eigen::Matrix4d& a) {
  const auto c = charpoly4(a);
  auto p = [&](double x) {
    return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0];
  };
  double radius = 0;
  for (int i = 0; i < 4; ++i) radius = std::max(radius, a.cwiseAbs().row(i).sum());
  radius += 1;
  std::vector<double> roots;
  const int n = 200000;
  double prev_x = -radius, prev_p = p(prev_x);
  for (int i = 1; i <= n && roots.size() < 4; ++i) {
    const double x = -radius + 2 * radius * i / n;
    const double px = p(x);
    if (prev_p == 0) roots.push_back(prev_x);
    else if (prev_p * px < 0) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (p(lo) * p(mid) <= 0 ? hi : lo) = mid;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_p = px;
  }
  Eigen::Vector4d out;
  for (int i = 0; i < 4; ++i) out[i] = roots.at(i);
  std::sort(out.data(), out.data() + 4, std::greater<double>());
  return out;
}

// Best success probability for distinguishing two real qubit states with a
// projective measurement, by scanning the measurement angle.
inline double helstrom_bruteforce(const Eigen::Matrix2d& rho1,
                                  const Eigen::Matrix2d& rho2,
                                  int grid = 10000) {
  double best = 0.5;  // guessing without measuring
  for (int i = 0; i < grid; ++i) {
    const double a = M_PI * i / grid;
    Eigen::Vector2d v{std::cos(a), std::sin(a)};
    const Eigen::Matrix2d e1 = v * v.transpose();
    const double p = 0.5 * ((e1 * rho1).trace() +
                            ((Eigen::Matrix2d::Identity() - e1) * rho2).trace());
    best = std::max(best, std::max(p, 1 - p));
  }
  return best;
}

inline Eigen::Matrix2d random_qubit_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Matrix2d a;
  a << g(rng), g(rng), g(rng), g(rng);
  Eigen::Matrix2d s = a * a.transpose() + 1e-6 * Eigen::Matrix2d::Identity();
  return s / s.trace();
}

// O(n^3) lower convex hull: a sample is a vertex iff no chord of two other
// samples passes strictly below it at its abscissa.
inline std::vector<std::pair<double, double>> lower_hull_bruteforce(
    std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<double, double>> hull;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    bool dominated = false;
    for (int a = 0; a < n && !dominated; ++a)
      for (int b = a + 1; b < n && !dominated; ++b) {
        if (pts[a].first > pts[i].first - 1e-15 ||
            pts[b].first < pts[i].first + 1e-15)
          continue;
        const double t =
            (pts[i].first - pts[a].first) / (pts[b].first - pts[a].first);
        const double y = pts[a].second + t * (pts[b].second - pts[a].second);
        if (y < pts[i].second - 1e-12) dominated = true;
      }
    if (!dominated) hull.push_back(pts[i]);
  }
  return hull;
}

}  // namespace oracles
