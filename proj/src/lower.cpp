#include "dirne/lower.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dirne/entropy.hpp"
#include "dirne/envelope.hpp"
#include "dirne/parallel.hpp"

namespace dirne {

namespace {

constexpr double kEps = 1e-15;

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void check_omega(double omega, const char* who) {
  if (omega <= kOmegaClassical || omega > kOmegaMax + 1e-12)
    throw std::domain_error(std::string(who) +
                            ": omega must lie in (3/4, omega_max]");
}

// min / max of cos over the angle interval [lo, hi]
void cos_range(double lo, double hi, double& cmin, double& cmax) {
  const double clo = std::cos(lo), chi = std::cos(hi);
  cmin = std::min(clo, chi);
  cmax = std::max(clo, chi);
  if (hi - lo >= 2 * M_PI) {
    cmin = -1;
    cmax = 1;
    return;
  }
  // does [lo, hi] contain a multiple of 2*pi (cos = 1) or an odd multiple
  // of pi (cos = -1)?
  const double k_top = std::ceil(lo / (2 * M_PI)) * 2 * M_PI;
  if (k_top <= hi) cmax = 1;
  const double k_bot = std::ceil((lo - M_PI) / (2 * M_PI)) * 2 * M_PI + M_PI;
  if (k_bot <= hi) cmin = -1;
}

}  // namespace

double K(double R, double theta) {
  Eigen::Vector4d l = lambdas(R, theta, delta_star(R, theta)).cwiseMax(0.0);
  l /= l.sum();
  return 1 - shannon(l);
}

std::vector<double> GridSpec::axis(int i, double lo, double hi) const {
  const int n = cells[static_cast<size_t>(i)];
  if (n < 1) throw std::domain_error("GridSpec: cells must be positive");
  std::vector<double> pts;
  if (!breakpoints[static_cast<size_t>(i)].empty()) {
    const auto& b = breakpoints[static_cast<size_t>(i)];
    if (b.front() != 0.0 || b.back() != 1.0 ||
        !std::is_sorted(b.begin(), b.end()))
      throw std::domain_error("GridSpec: breakpoints must run from 0 to 1");
    for (double t : b) pts.push_back(lo + (hi - lo) * t);
    return pts;
  }
  pts.reserve(n + 1);
  for (int k = 0; k <= n; ++k) pts.push_back(lo + (hi - lo) * k / n);
  return pts;
}

GridSpec GridSpec::doubled() const {
  GridSpec g = *this;
  for (auto& c : g.cells) c *= 2;
  for (auto& b : g.breakpoints) {
    if (b.empty()) continue;
    std::vector<double> fine;
    for (size_t i = 0; i + 1 < b.size(); ++i) {
      fine.push_back(b[i]);
      fine.push_back(0.5 * (b[i] + b[i + 1]));
    }
    fine.push_back(b.back());
    b = fine;
  }
  return g;
}

// ---------------------------------------------------------------------------
// one-sided engine: G_{A|XYE}

CertifiedPoint one_sided_lb(double omega, const GridSpec& grid, int branch_mask) {
  check_omega(omega, "one_sided_lb");
  if (branch_mask < 1 || branch_mask > 3)
    throw std::domain_error("one_sided_lb: branch_mask must be 1, 2 or 3");
  const auto t0 = std::chrono::steady_clock::now();
  const double s2w = std::min(1.0, std::sqrt(2.0) * (2 * omega - 1));
  const double eta_max = std::acos(s2w);
  const double theta_box = M_PI / 4 - std::acos(std::min(1.0, 1 / (4 * omega - 2)));
  const auto etas = grid.axis(0, 0, eta_max);
  const auto thetas = grid.axis(1, 0, theta_box);
  const auto vs = grid.axis(2, 0, M_PI / 2);
  const int ne = static_cast<int>(etas.size()) - 1;
  const int nt = static_cast<int>(thetas.size()) - 1;
  const int nv = static_cast<int>(vs.size()) - 1;
  const double M = grid.fallback_value;

  // R(eta) and the eta-dependent theta limit of the curved domain
  std::vector<double> r_of_eta(ne + 1), theta_lim(ne + 1);
  for (int i = 0; i <= ne; ++i) {
    r_of_eta[i] = std::min(1.0, s2w / std::cos(etas[i]));
    theta_lim[i] =
        M_PI / 4 - std::acos(std::min(1.0, std::cos(etas[i]) / (4 * omega - 2)));
  }
  // K at the low corner (K is increasing in both R and theta, so the low
  // corner is exact on each cuboid)
  std::vector<double> k_corner(static_cast<size_t>(ne + 1) * (nt + 1));
  for (int i = 0; i <= ne; ++i)
    for (int j = 0; j <= nt; ++j)
      k_corner[static_cast<size_t>(i) * (nt + 1) + j] =
          thetas[j] <= theta_lim[i] + 1e-12 ? K(r_of_eta[i], thetas[j]) : M;
  // phi_uv(theta, v) = acos(sqrt((1 + cos v sin 2theta)/2)); u_pm = 2 phi_uv
  // +- 2 eta
  std::vector<double> phi_uv(static_cast<size_t>(nt + 1) * (nv + 1));
  for (int j = 0; j <= nt; ++j)
    for (int k = 0; k <= nv; ++k) {
      const double c = std::cos(vs[k]) * std::sin(2 * thetas[j]);
      phi_uv[static_cast<size_t>(j) * (nv + 1) + k] =
          std::acos(std::sqrt(std::clamp((1 + c) / 2, 0.0, 1.0)));
    }

  const int n_chunks = std::max(1, ne);
  std::vector<double> chunk_min(static_cast<size_t>(n_chunks), M);
  parallel_chunks(static_cast<size_t>(std::max(1, ne)), n_chunks,
                  [&](int chunk, size_t ib, size_t ie) {
    double local = M;
    for (size_t i = ib; i < ie && static_cast<int>(i) < ne; ++i) {
      const double d_eta = etas[i + 1] - etas[i];
      const double r_hi = r_of_eta[i + 1];
      for (int j = 0; j < nt; ++j) {
        if (thetas[j] > theta_lim[i] + 1e-12) break;  // cuboid outside domain
        const double d_theta = thetas[j + 1] - thetas[j];
        const double sin_lo = std::sin(2 * thetas[j]);
        const double sin_hi = std::sin(2 * thetas[j + 1]);
        const double k_term = k_corner[i * static_cast<size_t>(nt + 1) + j];
        for (int k = 0; k < nv; ++k) {
          const double d_v = vs[k + 1] - vs[k];
          const double u0 = 2 * phi_uv[static_cast<size_t>(j) * (nv + 1) + k];
          const double up = u0 + 2 * etas[i];
          const double um = u0 - 2 * etas[i];
          const double dpl[2] = {std::max(2 * d_theta, 2 * d_eta + 2 * d_v),
                                 std::max(2 * d_eta, 2 * d_theta + d_v)};
          const double dmi[2] = {std::max(2 * d_v, 2 * d_eta + 2 * d_theta),
                                 2 * d_eta + 2 * d_theta + d_v};
          auto phi_term = [&](double u, double delta, int y) {
            const double c = std::cos(u + (y == 0 ? vs[k] : -vs[k])) + delta;
            const double zeta = c * (c < 0 ? sin_lo : sin_hi);
            const double arg = r_hi * std::sqrt(std::max(0.0, 1 + zeta));
            return arg >= 1 ? 0.0 : phi(arg);
          };
          double f = M;
          if (branch_mask & 1)
            f = std::min(f, 0.5 * phi_term(up, dpl[0], 0) +
                                 0.5 * phi_term(up, dpl[1], 1) + k_term);
          if (branch_mask & 2)
            f = std::min(f, 0.5 * phi_term(um, dmi[0], 0) +
                                 0.5 * phi_term(um, dmi[1], 1) + k_term);
          local = std::min(local, f);
        }
      }
    }
    chunk_min[static_cast<size_t>(chunk)] = std::min(chunk_min[static_cast<size_t>(chunk)], local);
  });
  double best = M;
  for (double v : chunk_min) best = std::min(best, v);

  CertifiedPoint out;
  out.omega = omega;
  out.value = std::max(0.0, std::min(best, M));
  out.engine = "one_sided";
  out.grid = {ne, nt, nv};
  out.seconds = elapsed_since(t0);
  return out;
}

// ---------------------------------------------------------------------------
// two-sided engine for G_{AB|00E} over (lambda, v, theta)

namespace {

// z(lambda, v, theta): the denominator defining R_hat = sqrt(2)(2w-1)/z
double z_value(double sa, double ca, double lam, double v, double tb) {
  const double cvl = std::cos(v - lam), svl = std::sin(v - lam);
  const double inner = sa * std::sin(v) * std::cos(tb) + ca * std::cos(v) * std::sin(tb);
  const double root =
      std::sqrt(std::max(0.0, 1 - std::cos(2 * v) * std::sin(2 * (tb - M_PI / 4))));
  return cvl * inner - svl / std::sqrt(2.0) * root;
}

double eps_value(double alpha0, double lam, double v, double theta) {
  return std::cos(theta) * std::cos(alpha0 - 2 * v + lam) +
         std::sin(theta) * std::cos(alpha0 + 2 * v - lam);
}

}  // namespace

CertifiedPoint two_sided_00_lb(double omega, const GridSpec& grid) {
  check_omega(omega, "two_sided_00_lb");
  const auto t0 = std::chrono::steady_clock::now();
  const double r_floor = std::min(1.0, std::sqrt(2.0) * (2 * omega - 1));
  const double theta_box = M_PI / 4 - std::acos(std::min(1.0, 1 / (4 * omega - 2)));
  const auto lams = grid.axis(0, 0, M_PI);
  const auto vs = grid.axis(1, 0, M_PI);
  const auto thetas = grid.axis(2, 0, theta_box);
  const int nl = static_cast<int>(lams.size()) - 1;
  const int nv = static_cast<int>(vs.size()) - 1;
  const int nt = static_cast<int>(thetas.size()) - 1;
  const double M = grid.fallback_value;
  constexpr int kSub = 96;  // 1-D refinement subintervals in R_hat

  // per-axis trig and the alpha_hat0 sum tables: alpha_hat0(lam, v, theta) =
  // -2 atan(cot(lam) cot(tb)) + atan(cot(v) cot(tb)) with tb = pi/4 + theta
  std::vector<double> t1s((nl + 1) * static_cast<size_t>(nt + 1)),
      t1c(t1s.size());
  std::vector<double> t2s((nv + 1) * static_cast<size_t>(nt + 1)),
      t2c(t2s.size());
  for (int k = 0; k <= nt; ++k) {
    const double cot_tb = 1 / std::tan(M_PI / 4 + thetas[k]);
    for (int i = 0; i <= nl; ++i) {
      const double s = std::sin(lams[i]);
      const double cot = s == 0 ? 1e300 : std::cos(lams[i]) / s;
      const double a = -2 * std::atan(cot * cot_tb);
      t1s[static_cast<size_t>(i) * (nt + 1) + k] = std::sin(a);
      t1c[static_cast<size_t>(i) * (nt + 1) + k] = std::cos(a);
    }
    for (int j = 0; j <= nv; ++j) {
      const double s = std::sin(vs[j]);
      const double cot = s == 0 ? 1e300 : std::cos(vs[j]) / s;
      const double a = std::atan(cot * cot_tb);
      t2s[static_cast<size_t>(j) * (nt + 1) + k] = std::sin(a);
      t2c[static_cast<size_t>(j) * (nt + 1) + k] = std::cos(a);
    }
  }

  const int n_chunks = std::max(1, nl);
  std::vector<double> chunk_min(static_cast<size_t>(n_chunks), M);
  parallel_chunks(static_cast<size_t>(std::max(1, nl)), n_chunks,
                  [&](int chunk, size_t ib, size_t ie) {
    double local = M;
    for (size_t i = ib; i < ie && static_cast<int>(i) < nl; ++i) {
      const double lam = lams[i];
      const double d_lam = lams[i + 1] - lam;
      const double cl = std::cos(lam), sl = std::sin(lam);
      for (int k = 0; k < nt; ++k) {
        const double theta = thetas[k];
        const double d_theta = thetas[k + 1] - theta;
        const double tb = M_PI / 4 + theta;
        const double tb_hi = M_PI / 4 + thetas[k + 1];
        // appendix envelopes, evaluated at the worst (upper theta) corner
        const double a_lam = 2 * std::tan(tb_hi);
        const double a_v = std::tan(tb_hi);
        const double a_th = 3 / std::sin(2 * tb_hi);
        const double z_lam = std::sqrt(2.0) * (1.5 + a_lam);
        const double z_v = std::sqrt(2.0) * (2 + a_v);
        const double z_th = std::sqrt(2.0) + 1 + std::sqrt(2.0) * a_th;
        const double e_lam = std::sqrt(2.0) * (a_lam + 1);
        const double e_v = std::sqrt(2.0) * (a_v + 2);
        const double e_th = std::sqrt(2.0) * (a_th + 1);
        // validity needs theta <= pi/4 - acos(1/(sqrt2 R)), i.e. an upper
        // ceiling on R_hat; the ceiling is largest at the lower theta corner
        const double r_ceil = 1 / (std::cos(theta) + std::sin(theta));
        const double ct = std::cos(theta), st = std::sin(theta);
        for (int j = 0; j < nv; ++j) {
          const double v = vs[j];
          const double d_v = vs[j + 1] - v;
          const double dz = z_lam * d_lam + z_v * d_v + z_th * d_theta;
          const double de = e_lam * d_lam + e_v * d_v + e_th * d_theta;
          const double sa = t1s[i * static_cast<size_t>(nt + 1) + k] *
                                t2c[static_cast<size_t>(j) * (nt + 1) + k] +
                            t1c[i * static_cast<size_t>(nt + 1) + k] *
                                t2s[static_cast<size_t>(j) * (nt + 1) + k];
          const double ca = t1c[i * static_cast<size_t>(nt + 1) + k] *
                                t2c[static_cast<size_t>(j) * (nt + 1) + k] -
                            t1s[i * static_cast<size_t>(nt + 1) + k] *
                                t2s[static_cast<size_t>(j) * (nt + 1) + k];
          const double z0 = z_value(sa, ca, lam, v, tb);
          // whole cuboid outside the valid band of R_hat?
          if (z0 + dz < r_floor - kEps || z0 - dz > 1 + kEps) {
            local = std::min(local, M);
            continue;
          }
          if (z0 - dz <= 0) {  // R_max uncontrolled: global infimum
            local = 0;
            continue;
          }
          const double r_min_c = r_floor / (z0 + dz);
          const double r_max_c = r_floor / (z0 - dz);
          const double a = std::max(r_min_c, r_floor);
          const double b = std::min({r_max_c, 1.0, r_ceil});
          if (a > b + kEps) {
            local = std::min(local, M);
            continue;
          }
          // eps_tilde at the corner, via cos(alpha0 -+ (2v - lam))
          const double c2vl = std::cos(2 * v - lam), s2vl = std::sin(2 * v - lam);
          const double eps0 = ct * (ca * c2vl + sa * s2vl) + st * (ca * c2vl - sa * s2vl);
          const double eps_max = eps0 + de;
          // joint 1-D refinement in R_hat: Phi term decreasing, K increasing
          double bound = M;
          if (eps_max <= 0) {
            bound = 1 + K(a, theta);
          } else {
            const double width = (b - a) / kSub;
            for (int m = 0; m < kSub; ++m) {
              const double r_lo = a + m * width;
              const double arg = (r_lo + width) * eps_max;
              const double hterm = arg >= 1 ? 0.0 : phi(std::max(arg, 0.0));
              const double cand = hterm + K(r_lo, theta);
              bound = std::min(bound, cand);
              if (bound <= 0) break;
            }
          }
          local = std::min(local, std::min(bound, M));
        }
      }
    }
    chunk_min[static_cast<size_t>(chunk)] =
        std::min(chunk_min[static_cast<size_t>(chunk)], local);
  });
  double best = M;
  for (double v : chunk_min) best = std::min(best, v);

  CertifiedPoint out;
  out.omega = omega;
  out.value = std::max(0.0, std::min(best, M));
  out.engine = "two_sided_00";
  out.grid = {nl, nv, nt};
  out.seconds = elapsed_since(t0);
  return out;
}

// ---------------------------------------------------------------------------
// two-sided engine for G_{AB|XYE} over (R, theta) x four angles

CertifiedPoint two_sided_xye_lb(double omega, const GridSpec& rt_grid,
                                const AngleGrid& angles, int n_poly) {
  check_omega(omega, "two_sided_xye_lb");
  if (n_poly < 2) throw std::domain_error("two_sided_xye_lb: n_poly >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const int na = angles.n_alpha, nb = angles.n_beta, nbins = angles.n_bins;
  if (na < 2 || nb < 2 || nbins < 8)
    throw std::domain_error("two_sided_xye_lb: angle grid too small");
  const double cell_budget = 2e9;
  const double cost = static_cast<double>(rt_grid.cells[0]) * rt_grid.cells[1] *
                      (static_cast<double>(na) * na + static_cast<double>(na) * nb);
  if (cost > cell_budget)
    throw std::runtime_error("two_sided_xye_lb: cell budget exceeded");

  const double r_floor = std::min(1.0, std::sqrt(2.0) * (2 * omega - 1));
  const double theta_box = M_PI / 4 - std::acos(std::min(1.0, 1 / (4 * omega - 2)));
  const auto rs = rt_grid.axis(0, r_floor, 1.0);
  const auto thetas = rt_grid.axis(1, 0, theta_box);
  const int nr = static_cast<int>(rs.size()) - 1;
  const int nt = static_cast<int>(thetas.size()) - 1;
  const double M = rt_grid.fallback_value;

  const PolyMinorant minorant = phi_minorant(n_poly);
  const double dphi1 = minorant.derivative_at_one();  // |Phi_n'(1)|

  const double ha = M_PI / na, hb = M_PI / nb;
  const double bin_lo = -2.0, bin_hi = 2.0;
  const double bin_w = (bin_hi - bin_lo) / nbins;

  struct Cuboid {
    int a, b;
  };
  std::vector<Cuboid> cuboids;
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nt; ++b) cuboids.push_back({a, b});

  std::vector<double> result(cuboids.size(), M);
  parallel_chunks(cuboids.size(), std::min<int>(static_cast<int>(cuboids.size()), 8 * max_threads()),
                  [&](int, size_t cb, size_t ce) {
    // scratch tables, reused across cuboids of this chunk
    std::vector<double> phi_min(static_cast<size_t>(na) * nb);
    std::vector<double> s_min(phi_min.size()), s_max(phi_min.size());
    std::vector<double> g1(static_cast<size_t>(nbins) + 1);
    for (size_t c = cb; c < ce; ++c) {
      const int a = cuboids[c].a, bq = cuboids[c].b;
      const double r_lo = rs[a], theta_lo = thetas[bq];
      if (theta_lo > theta_limit(r_lo) + 1e-12) {
        result[c] = M;
        continue;
      }
      const double d_r = rs[a + 1] - rs[a];
      const double d_t = thetas[bq + 1] - thetas[bq];
      const double rad = std::sqrt(d_r * d_r + d_t * d_t);
      const double slack_obj = angles.diagnostic_no_slack ? 0.0 : 2 * dphi1 * rad;
      // |grad (sum eps_hat)| <= 4 over (R, theta); see the ceiling argument
      const double slack_con = angles.diagnostic_no_slack ? 0.0 : 4 * rad;
      const double c_req = 4 * (2 * omega - 1) - slack_con;
      const double rc = r_lo * std::cos(theta_lo), rsn = r_lo * std::sin(theta_lo);

      // interval tables over (alpha cell i, beta cell j) for the "+" form
      // eps = rc cos(2a-2b) + rs cos(2a+2b)
      for (int i = 0; i < na; ++i) {
        const double alo = i * ha, ahi = alo + ha;
        for (int j = 0; j < nb; ++j) {
          const double blo = j * hb, bhi = blo + hb;
          double m1, M1, m2, M2;
          cos_range(2 * alo - 2 * bhi, 2 * ahi - 2 * blo, m1, M1);
          cos_range(2 * (alo + blo), 2 * (ahi + bhi), m2, M2);
          const double lo = rc * m1 + rsn * m2;
          const double hi = rc * M1 + rsn * M2;
          const size_t idx = static_cast<size_t>(i) * nb + j;
          s_min[idx] = lo;
          s_max[idx] = hi;
          // Phi_n is even and unimodal with its max at 0, so the interval
          // minimum sits at an endpoint
          phi_min[idx] = std::min(minorant.value(std::clamp(lo, -1.0, 1.0)),
                                  minorant.value(std::clamp(hi, -1.0, 1.0)));
        }
      }

      const double k_term = K(r_lo, theta_lo);
      double best = M;
      for (int i0 = 0; i0 < na; ++i0) {
        for (int i1 = 0; i1 < na; ++i1) {
          const size_t row0 = static_cast<size_t>(i0) * nb;
          const size_t row1 = static_cast<size_t>(i1) * nb;
          // profile over beta1: objective quarter-sum of eps01 (+ form with
          // alpha0) and eps11 (- form with alpha1; Phi_n even), score
          // contribution eps01 + eps11 with max = s_max[i0] - s_min[i1]
          std::fill(g1.begin(), g1.end(), M * 4);
          for (int j = 0; j < nb; ++j) {
            const double f = phi_min[row0 + j] + phi_min[row1 + j];
            const double s = s_max[row0 + j] - s_min[row1 + j];
            int bin = static_cast<int>((s - bin_lo) / bin_w);
            bin = std::clamp(bin, 0, nbins);
            if (f < g1[static_cast<size_t>(bin)]) g1[static_cast<size_t>(bin)] = f;
          }
          for (int m = nbins - 1; m >= 0; --m)
            g1[static_cast<size_t>(m)] =
                std::min(g1[static_cast<size_t>(m)], g1[static_cast<size_t>(m) + 1]);
          // profile over beta0: eps00 (alpha0) and eps10 (alpha1), both +
          for (int j = 0; j < nb; ++j) {
            const double f0 = phi_min[row0 + j] + phi_min[row1 + j];
            const double s0 = s_max[row0 + j] + s_max[row1 + j];
            const double need = c_req - s0;
            if (need > bin_hi + bin_w) continue;  // unreachable
            const int bin = std::clamp(
                static_cast<int>(std::floor((need - bin_lo) / bin_w)), 0, nbins);
            const double f1 = g1[static_cast<size_t>(bin)];
            if (f1 >= M * 4) continue;
            const double cand = 0.25 * (f0 + f1) + k_term - slack_obj;
            if (cand < best) best = cand;
          }
        }
      }
      result[c] = std::min(best, M);
    }
  });

  double best = M;
  for (double v : result) best = std::min(best, v);
  CertifiedPoint out;
  out.omega = omega;
  out.value = std::max(0.0, std::min(best, M));
  out.engine = "two_sided_xye";
  out.grid = {nr, nt, na};
  out.seconds = elapsed_since(t0);
  return out;
}

GridSpec default_one_sided_grid() { return {}; }

GridSpec default_two_sided_00_grid() {
  GridSpec g;
  g.cells = {768, 768, 24};
  return g;
}

GridSpec default_xye_rt_grid() {
  GridSpec g;
  g.cells = {24, 16, 0};
  return g;
}

// ---------------------------------------------------------------------------

Staircase staircase(std::vector<CertifiedPoint> points) {
  if (points.empty()) throw std::domain_error("staircase: no points");
  std::sort(points.begin(), points.end(),
            [](const CertifiedPoint& a, const CertifiedPoint& b) {
              return a.omega < b.omega;
            });
  Staircase s;
  for (const auto& p : points) s.steps.push_back({p.omega, p.value});
  return s;
}

double Staircase::eval(double omega) const {
  double value = 0;
  for (const auto& s : steps) {
    if (s.first <= omega + 1e-15)
      value = s.second;
    else
      break;
  }
  return value;
}

BoundCurve shifted_convex_lb(std::vector<CertifiedPoint> points,
                             EntropyKind kind) {
  if (points.empty()) throw std::domain_error("shifted_convex_lb: no points");
  std::sort(points.begin(), points.end(),
            [](const CertifiedPoint& a, const CertifiedPoint& b) {
              return a.omega < b.omega;
            });
  if (std::abs(points.front().omega - kOmegaClassical) > 1e-9 ||
      std::abs(points.front().value) > 1e-12)
    throw std::domain_error(
        "shifted_convex_lb: first point must be (3/4, 0)");
  std::vector<std::pair<double, double>> shifted;
  shifted.push_back({points.front().omega, 0.0});
  for (size_t i = 1; i < points.size(); ++i)
    shifted.push_back({points[i].omega, points[i - 1].value});
  if (points.back().omega < kOmegaMax - 1e-12)
    shifted.push_back({kOmegaMax, points.back().value});
  const auto hull = lower_hull(shifted);
  BoundCurve curve;
  curve.kind = kind;
  curve.direction = BoundCurve::Direction::lower;
  curve.provenance = "staircase shifted one place, lower convex hull";
  curve.samples = hull;
  return curve;
}

}  // namespace dirne
