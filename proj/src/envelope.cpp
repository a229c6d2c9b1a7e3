#include "dirne/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dirne {

double SampledFn1D::eval(double at) const {
  if (x.empty()) throw std::domain_error("SampledFn1D: empty");
  if (at <= x.front()) return y.front();
  if (at >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), at);
  const size_t i = static_cast<size_t>(it - x.begin());
  const double t = (at - x[i - 1]) / (x[i] - x[i - 1]);
  return y[i - 1] + t * (y[i] - y[i - 1]);
}

std::vector<std::pair<double, double>> lower_hull(
    std::vector<std::pair<double, double>> pts) {
  if (pts.empty()) throw std::domain_error("lower_hull: no points");
  std::sort(pts.begin(), pts.end());
  // for duplicate abscissae only the lowest point can be a hull vertex
  std::vector<std::pair<double, double>> uniq;
  for (const auto& p : pts) {
    if (!uniq.empty() && p.first - uniq.back().first < 1e-15) {
      uniq.back().second = std::min(uniq.back().second, p.second);
    } else {
      uniq.push_back(p);
    }
  }
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : uniq) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      const double cross = (b.first - a.first) * (p.second - a.second) -
                           (b.second - a.second) * (p.first - a.first);
      if (cross <= 1e-15 * std::max(1.0, std::abs(p.second)))
        hull.pop_back();  // b above or on the chord a->p
      else
        break;
    }
    hull.push_back(p);
  }
  return hull;
}

namespace {

// max_i (k p_i - q_i) for each k in the sorted slope list. Only hull points
// can attain the max and their argmax is nondecreasing in k, so a single
// merged pass suffices.
std::vector<double> conjugate_kernel(const std::vector<double>& pos,
                                     const std::vector<double>& val,
                                     const std::vector<double>& slopes) {
  std::vector<std::pair<double, double>> pts(pos.size());
  for (size_t i = 0; i < pos.size(); ++i) pts[i] = {pos[i], val[i]};
  const auto hull = lower_hull(std::move(pts));
  std::vector<double> out(slopes.size());
  size_t j = 0;
  for (size_t m = 0; m < slopes.size(); ++m) {
    const double k = slopes[m];
    while (j + 1 < hull.size() &&
           k * hull[j + 1].first - hull[j + 1].second >=
               k * hull[j].first - hull[j].second)
      ++j;
    out[m] = k * hull[j].first - hull[j].second;
  }
  return out;
}

std::vector<double> pairwise_slopes(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  std::vector<double> s{0.0};
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[j] - x[i] > 1e-15) s.push_back((y[j] - y[i]) / (x[j] - x[i]));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// slopes supporting the data along one axis: all pairwise sample slopes of
// every grid line (exact for piecewise-linear data along the axis)
std::vector<double> axis_slopes(const std::vector<double>& axis,
                                const Eigen::MatrixXd& v, bool rows) {
  std::set<double> s{0.0};
  const Eigen::Index lines = rows ? v.cols() : v.rows();
  const Eigen::Index n = static_cast<Eigen::Index>(axis.size());
  for (Eigen::Index l = 0; l < lines; ++l) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double dx = axis[static_cast<size_t>(j)] - axis[static_cast<size_t>(i)];
        if (dx <= 1e-15) continue;
        const double vi = rows ? v(i, l) : v(l, i);
        const double vj = rows ? v(j, l) : v(l, j);
        s.insert((vj - vi) / dx);
      }
  }
  return {s.begin(), s.end()};
}

}  // namespace

SampledFn1D lf_conjugate_1d(const SampledFn1D& f, const std::vector<double>& slopes) {
  if (!std::is_sorted(slopes.begin(), slopes.end()))
    throw std::domain_error("lf_conjugate_1d: slopes not sorted");
  SampledFn1D out;
  out.x = slopes;
  out.y = conjugate_kernel(f.x, f.y, slopes);
  return out;
}

SampledFn1D convenv_1d(const SampledFn1D& f) {
  const auto slopes = pairwise_slopes(f.x, f.y);
  const auto fstar = conjugate_kernel(f.x, f.y, slopes);
  SampledFn1D out;
  out.x = f.x;
  out.y = conjugate_kernel(slopes, fstar, f.x);
  return out;
}

namespace {

SampledFn2D biconjugate_2d(const SampledFn2D& f) {
  const auto k1 = axis_slopes(f.xs, f.v, /*rows=*/true);
  const auto k2 = axis_slopes(f.ys, f.v, /*rows=*/false);
  const Eigen::Index nx = f.v.rows(), ny = f.v.cols();
  const Eigen::Index n1 = static_cast<Eigen::Index>(k1.size());
  const Eigen::Index n2 = static_cast<Eigen::Index>(k2.size());

  // conjugate over x for each fixed y
  Eigen::MatrixXd cx(n1, ny);
  std::vector<double> col(nx);
  for (Eigen::Index j = 0; j < ny; ++j) {
    for (Eigen::Index i = 0; i < nx; ++i) col[static_cast<size_t>(i)] = f.v(i, j);
    const auto c = conjugate_kernel(f.xs, col, k1);
    for (Eigen::Index m = 0; m < n1; ++m) cx(m, j) = c[static_cast<size_t>(m)];
  }
  // conjugate over y: fstar(k1, k2) = max_j (k2 y_j + cx(k1, j))
  Eigen::MatrixXd fstar(n1, n2);
  std::vector<double> neg(ny);
  for (Eigen::Index m = 0; m < n1; ++m) {
    for (Eigen::Index j = 0; j < ny; ++j) neg[static_cast<size_t>(j)] = -cx(m, j);
    const auto c = conjugate_kernel(f.ys, neg, k2);
    for (Eigen::Index p = 0; p < n2; ++p) fstar(m, p) = c[static_cast<size_t>(p)];
  }
  // back: d(x, k2) = max_{k1} (x k1 - fstar(k1, k2))
  Eigen::MatrixXd d(nx, n2);
  std::vector<double> fcol(n1);
  for (Eigen::Index p = 0; p < n2; ++p) {
    for (Eigen::Index m = 0; m < n1; ++m) fcol[static_cast<size_t>(m)] = fstar(m, p);
    const auto c = conjugate_kernel(k1, fcol, f.xs);
    for (Eigen::Index i = 0; i < nx; ++i) d(i, p) = c[static_cast<size_t>(i)];
  }
  SampledFn2D out;
  out.xs = f.xs;
  out.ys = f.ys;
  out.v.resize(nx, ny);
  std::vector<double> negd(n2);
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (Eigen::Index p = 0; p < n2; ++p) negd[static_cast<size_t>(p)] = -d(i, p);
    const auto c = conjugate_kernel(k2, negd, f.ys);
    for (Eigen::Index j = 0; j < ny; ++j) out.v(i, j) = c[static_cast<size_t>(j)];
  }
  return out;
}

}  // namespace

SampledFn2D convenv_2d(const SampledFn2D& f) {
  // The separable biconjugate is a nonincreasing self-map on minorants of
  // the input; iterate it to its fixed point so the result is stable under
  // re-application. Each iterate is a max-affine function below f.
  SampledFn2D cur = biconjugate_2d(f);
  for (int it = 0; it < 50; ++it) {
    SampledFn2D next = biconjugate_2d(cur);
    const double drop = (cur.v - next.v).cwiseAbs().maxCoeff();
    cur = std::move(next);
    if (drop <= 1e-12) break;
  }
  return cur;
}

}  // namespace dirne
