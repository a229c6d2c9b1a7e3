#include "dirne/upper.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "dirne/entropy.hpp"
#include "dirne/parallel.hpp"
#include "dirne/rng.hpp"

namespace dirne {

double BoundCurve::eval(double omega) const {
  if (samples.empty()) throw std::domain_error("BoundCurve: empty");
  if (omega <= samples.front().first) return samples.front().second;
  if (omega >= samples.back().first) return samples.back().second;
  auto it = std::upper_bound(
      samples.begin(), samples.end(), omega,
      [](double w, const std::pair<double, double>& s) { return w < s.first; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double t = (omega - a.first) / (b.first - a.first);
  return a.second + t * (b.second - a.second);
}

double BoundCurve::derivative(double omega) const {
  if (samples.size() < 2) throw std::domain_error("BoundCurve: need 2 samples");
  size_t i = 1;
  while (i + 1 < samples.size() && samples[i].first < omega) ++i;
  return (samples[i].second - samples[i - 1].second) /
         (samples[i].first - samples[i - 1].first);
}

const char* to_string(BoundCurve::Direction d) {
  switch (d) {
    case BoundCurve::Direction::upper: return "upper";
    case BoundCurve::Direction::lower: return "lower";
    case BoundCurve::Direction::analytic: return "analytic";
    case BoundCurve::Direction::conjectured: return "conjectured";
  }
  return "?";
}

namespace {

// sum of the R-free probability-table coefficients; score = 1/2 + R/8 * sum
double chat_sum(double theta, double a0, double a1, double b0, double b1) {
  const double c = std::cos(theta), s = std::sin(theta);
  auto chat = [&](double a, double b, double sign) {
    return sign * (c * std::cos(2 * (a - b)) + s * std::cos(2 * (a + b)));
  };
  return chat(a0, b0, 1) + chat(a0, b1, 1) + chat(a1, b0, 1) + chat(a1, b1, -1);
}

struct Problem {
  EntropyKind kind;
  double omega;
  const InputDist* p;
  double weight;
  bool free_delta;  // AB|E and A|E keep delta as a 7th parameter

  int dims() const { return free_delta ? 7 : 6; }

  // x = (R, theta, a0, a1, b0, b1 [, delta_frac])
  QubitStrategy strategy(const double* x) const {
    QubitStrategy s;
    s.R = x[0];
    s.theta = x[1];
    s.alpha0 = x[2];
    s.alpha1 = x[3];
    s.beta0 = x[4];
    s.beta1 = x[5];
    const double lo = -0.25 + 0.5 * s.R * std::cos(s.theta);
    const double hi = 0.25 - 0.5 * s.R * std::sin(s.theta);
    if (free_delta) {
      const double f = std::clamp(x[6], 0.0, 1.0);
      s.delta = lo + f * (hi - lo);
    } else {
      s.delta = std::clamp(delta_star(s.R, s.theta), lo, hi);
    }
    return s;
  }

  double penalized(const double* x) const {
    if (x[0] < 0 || x[0] > 1 || x[1] < 0 || x[1] > M_PI / 4)
      return 1e3 + std::abs(x[0] - 0.5) + std::abs(x[1]);
    const double tl = theta_limit(x[0]);
    if (x[1] > tl) return 1e3 + 100 * (x[1] - tl);
    const QubitStrategy s = strategy(x);
    if (!lambdas_feasible(lambdas(s.R, s.theta, s.delta))) return 1e3;
    return entropy(s, kind, *p) + weight * std::abs(score(s) - omega);
  }

  // Exact score restoration: solve 1/2 + R/8 * chat = omega for R and
  // re-evaluate. Returns false when no feasible R exists for these angles.
  bool restore(QubitStrategy& s, double& value) const {
    const double cs = chat_sum(s.theta, s.alpha0, s.alpha1, s.beta0, s.beta1);
    if (cs <= 1e-12) return false;
    const double r = 8 * (omega - 0.5) / cs;
    if (r < -1e-12 || r > 1 + 1e-9) return false;
    s.R = std::clamp(r, 0.0, 1.0);
    if (s.theta > theta_limit(s.R) + 1e-12) return false;
    const double lo = -0.25 + 0.5 * s.R * std::cos(s.theta);
    const double hi = 0.25 - 0.5 * s.R * std::sin(s.theta);
    s.delta = std::clamp(free_delta ? s.delta : delta_star(s.R, s.theta), lo, hi);
    if (!lambdas_feasible(lambdas(s.R, s.theta, s.delta))) return false;
    if (std::abs(score(s) - omega) > 1e-8) return false;
    value = entropy(s, kind, *p);
    return true;
  }
};

struct Candidate {
  double value = 1e300;
  QubitStrategy strategy;
  bool ok = false;
};

// generic Nelder-Mead over d dimensions
template <typename Fn>
std::vector<double> nelder_mead(std::vector<std::vector<double>> simplex,
                                const OptimizerConfig& cfg, int iters, Fn&& f) {
  const int d = static_cast<int>(simplex.size()) - 1;
  std::vector<double> fx(d + 1);
  for (int i = 0; i <= d; ++i) fx[i] = f(simplex[i].data());
  std::vector<double> centroid(d), xr(d), xe(d), xc(d);
  for (int iter = 0; iter < iters; ++iter) {
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    {
      std::vector<std::vector<double>> s2(d + 1);
      std::vector<double> f2(d + 1);
      for (int i = 0; i <= d; ++i) {
        s2[i] = simplex[idx[i]];
        f2[i] = fx[idx[i]];
      }
      simplex.swap(s2);
      fx.swap(f2);
    }
    if (fx[d] - fx[0] < 1e-13) break;
    for (int k = 0; k < d; ++k) {
      centroid[k] = 0;
      for (int i = 0; i < d; ++i) centroid[k] += simplex[i][k];
      centroid[k] /= d;
    }
    auto blend = [&](std::vector<double>& out, double coef) {
      for (int k = 0; k < d; ++k)
        out[k] = centroid[k] + coef * (centroid[k] - simplex[d][k]);
    };
    blend(xr, cfg.reflect);
    const double fr = f(xr.data());
    if (fr < fx[0]) {
      blend(xe, cfg.expand);
      const double fe = f(xe.data());
      simplex[d] = fe < fr ? xe : xr;
      fx[d] = std::min(fe, fr);
    } else if (fr < fx[d - 1]) {
      simplex[d] = xr;
      fx[d] = fr;
    } else {
      blend(xc, -cfg.contract);
      const double fc = f(xc.data());
      if (fc < fx[d]) {
        simplex[d] = xc;
        fx[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          for (int k = 0; k < d; ++k)
            simplex[i][k] = simplex[0][k] + cfg.shrink * (simplex[i][k] - simplex[0][k]);
          fx[i] = f(simplex[i].data());
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i <= d; ++i)
    if (fx[i] < fx[best]) best = i;
  return simplex[best];
}

Candidate run_restart(const Problem& prob, const OptimizerConfig& cfg,
                      uint64_t restart) {
  CounterRng rng(cfg.seed, restart);
  const int d = prob.dims();
  const double r_min = std::max(0.0, std::sqrt(2.0) * (2 * prob.omega - 1));

  std::vector<double> x0(d);
  if (restart == 0) {
    // canonical witness family: theta = 0, angles (0, pi/4, pi/8, -pi/8)
    x0 = {std::min(1.0, r_min + 1e-6), 0.0, 0.0, M_PI / 4, M_PI / 8, M_PI - M_PI / 8};
    if (d == 7) x0.push_back(0.5);
  } else {
    x0[0] = r_min + (1 - r_min) * rng.uniform();
    x0[1] = rng.uniform() * theta_limit(x0[0]);
    for (int i = 2; i < 6; ++i) x0[i] = rng.uniform() * M_PI;
    if (d == 7) x0[6] = rng.uniform();
  }

  // exploration on the penalized objective over the full vector
  std::vector<std::vector<double>> simplex(d + 1, x0);
  const double steps[7] = {0.08, 0.05, 0.4, 0.4, 0.4, 0.4, 0.2};
  for (int i = 0; i < d; ++i)
    simplex[i + 1][i] += steps[i] * (rng.uniform() + 0.1);
  const auto coarse = nelder_mead(simplex, cfg, cfg.max_iters, [&](const double* x) {
    return prob.penalized(x);
  });

  // polish with R eliminated through exact score restoration
  const int dr = d - 1;
  auto reduced = [&](const double* x) {
    QubitStrategy s;
    s.theta = x[0];
    s.alpha0 = x[1];
    s.alpha1 = x[2];
    s.beta0 = x[3];
    s.beta1 = x[4];
    if (s.theta < 0 || s.theta > M_PI / 4) return 1e3 + std::abs(s.theta);
    const double cs = chat_sum(s.theta, s.alpha0, s.alpha1, s.beta0, s.beta1);
    if (cs <= 1e-12) return 1e3;
    s.R = std::clamp(8 * (prob.omega - 0.5) / cs, 0.0, 1.0);
    if (s.theta > theta_limit(s.R)) return 1e3 + 100 * (s.theta - theta_limit(s.R));
    const double lo = -0.25 + 0.5 * s.R * std::cos(s.theta);
    const double hi = 0.25 - 0.5 * s.R * std::sin(s.theta);
    if (prob.free_delta)
      s.delta = lo + std::clamp(x[5], 0.0, 1.0) * (hi - lo);
    else
      s.delta = std::clamp(delta_star(s.R, s.theta), lo, hi);
    if (!lambdas_feasible(lambdas(s.R, s.theta, s.delta))) return 1e3;
    return entropy(s, prob.kind, *prob.p) + 1e4 * std::abs(score(s) - prob.omega);
  };
  std::vector<double> y0(dr);
  y0[0] = coarse[1];
  for (int i = 1; i < 5; ++i) y0[i] = coarse[i + 1];
  if (prob.free_delta) y0[5] = coarse[6];
  std::vector<std::vector<double>> simplex2(dr + 1, y0);
  const double steps2[6] = {0.01, 0.05, 0.05, 0.05, 0.05, 0.05};
  for (int i = 0; i < dr; ++i) simplex2[i + 1][i] += steps2[i];
  const auto fine = nelder_mead(simplex2, cfg, cfg.max_iters, reduced);

  // restore the score exactly on each candidate point and keep the best
  auto try_candidate = [&](double theta, double a0, double a1, double b0,
                           double b1, double dfrac, Candidate& best) {
    QubitStrategy s;
    s.theta = std::clamp(theta, 0.0, M_PI / 4);
    s.alpha0 = a0;
    s.alpha1 = a1;
    s.beta0 = b0;
    s.beta1 = b1;
    const double cs = chat_sum(s.theta, s.alpha0, s.alpha1, s.beta0, s.beta1);
    if (cs <= 1e-12) return;
    const double r = 8 * (prob.omega - 0.5) / cs;
    if (r < -1e-9 || r > 1 + 1e-7) return;
    s.R = std::clamp(r, 0.0, 1.0);
    if (prob.free_delta) {
      const double lo = -0.25 + 0.5 * s.R * std::cos(s.theta);
      const double hi = 0.25 - 0.5 * s.R * std::sin(s.theta);
      s.delta = lo + std::clamp(dfrac, 0.0, 1.0) * (hi - lo);
    }
    double value = 0;
    if (prob.restore(s, value) && value < best.value) {
      best.value = value;
      best.strategy = s;
      best.ok = true;
    }
  };

  Candidate cand;
  try_candidate(fine[0], fine[1], fine[2], fine[3], fine[4],
                prob.free_delta ? fine[5] : 0.5, cand);
  try_candidate(coarse[1], coarse[2], coarse[3], coarse[4], coarse[5],
                prob.free_delta ? coarse[6] : 0.5, cand);
  if (restart == 0)  // canonical witness family always reaches the score
    try_candidate(0.0, 0.0, M_PI / 4, M_PI / 8, M_PI - M_PI / 8, 0.5, cand);
  return cand;
}

}  // namespace

HeuristicResult heuristic_min(EntropyKind kind, double omega,
                              const InputDist& p, const OptimizerConfig& cfg) {
  if (omega < kOmegaClassical - 1e-12 || omega > kOmegaMax + 1e-12)
    throw std::domain_error("heuristic_min: omega outside [3/4, omega_max]");
  Problem prob{kind, omega, &p, cfg.penalty_weight,
               kind == EntropyKind::AB_E || kind == EntropyKind::A_E};

  std::vector<Candidate> results(cfg.restarts);
  parallel_chunks(cfg.restarts, std::min(cfg.restarts, 8 * max_threads()),
                  [&](int, size_t b, size_t e) {
                    for (size_t r = b; r < e; ++r)
                      results[r] = run_restart(prob, cfg, r);
                  });
  // deterministic reduction: best value, restart index breaking ties
  int best = -1;
  for (int r = 0; r < cfg.restarts; ++r)
    if (results[r].ok && (best < 0 || results[r].value < results[best].value))
      best = r;
  if (best < 0)
    throw std::runtime_error("heuristic_min: no restart reached the score");
  return {results[best].value, results[best].strategy};
}

BoundCurve curve_upper(EntropyKind kind, const std::vector<double>& omegas,
                       const InputDist& p, const OptimizerConfig& cfg) {
  if (!std::is_sorted(omegas.begin(), omegas.end()))
    throw std::domain_error("curve_upper: grid not sorted");
  BoundCurve curve;
  curve.kind = kind;
  curve.direction = BoundCurve::Direction::upper;
  curve.provenance = "heuristic multistart Nelder-Mead";
  int skipped = 0;
  for (size_t i = 0; i < omegas.size(); ++i) {
    OptimizerConfig point_cfg = cfg;
    point_cfg.seed = cfg.seed + 0x100000ull * (i + 1);
    try {
      const HeuristicResult r = heuristic_min(kind, omegas[i], p, point_cfg);
      curve.samples.push_back({omegas[i], r.value});
    } catch (const std::runtime_error&) {
      ++skipped;
    }
  }
  if (skipped)
    curve.provenance += "; skipped " + std::to_string(skipped) + " points";
  return curve;
}

namespace {

// piecewise-cubic Hermite interpolation with central-difference knot slopes
struct HermiteCurve {
  std::vector<double> x, y, m;

  explicit HermiteCurve(const BoundCurve& c) {
    for (const auto& s : c.samples) {
      x.push_back(s.first);
      y.push_back(s.second);
    }
    const size_t n = x.size();
    m.resize(n);
    for (size_t i = 0; i < n; ++i) {
      const size_t lo = i == 0 ? 0 : i - 1;
      const size_t hi = i + 1 == n ? i : i + 1;
      m[i] = (y[hi] - y[lo]) / (x[hi] - x[lo]);
    }
  }

  std::pair<double, double> eval(double at) const {
    size_t i = 1;
    while (i + 1 < x.size() && x[i] < at) ++i;
    const double h = x[i] - x[i - 1];
    const double t = std::clamp((at - x[i - 1]) / h, 0.0, 1.0);
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * y[i - 1] + (t3 - 2 * t2 + t) * h * m[i - 1] +
                     (-2 * t3 + 3 * t2) * y[i] + (t3 - t2) * h * m[i];
    const double dv = ((6 * t2 - 6 * t) * y[i - 1] + (3 * t2 - 4 * t + 1) * h * m[i - 1] +
                       (-6 * t2 + 6 * t) * y[i] + (3 * t2 - 2 * t) * h * m[i]) / h;
    return {v, dv};
  }
};

}  // namespace

double tangent_point(const BoundCurve& curve) {
  if (curve.samples.size() < 5)
    throw std::domain_error("tangent_point: need at least 5 samples");
  const HermiteCurve g(curve);
  auto f = [&](double w) {
    const auto [v, dv] = g.eval(w);
    return (w - kOmegaClassical) * dv - v;
  };
  const double lo = curve.samples.front().first;
  const double hi = curve.samples.back().first;
  const int n = 4000;
  double prev_w = lo, prev_f = f(lo);
  // exactly linear through (3/4, 0): every point is a root, return the
  // smallest grid omega
  bool all_tiny = true;
  for (int i = 0; i <= n && all_tiny; ++i)
    all_tiny = std::abs(f(lo + (hi - lo) * i / n)) <= 1e-11;
  if (all_tiny) return lo;
  for (int i = 1; i <= n; ++i) {
    const double w = lo + (hi - lo) * i / n;
    const double fw = f(w);
    if (prev_f == 0) return prev_w;
    if (prev_f * fw < 0) {
      double a = prev_w, b = w;
      while (b - a > 1e-8) {
        const double mid = 0.5 * (a + b);
        (f(a) * f(mid) <= 0 ? b : a) = mid;
      }
      return 0.5 * (a + b);
    }
    prev_w = w;
    prev_f = fw;
  }
  throw std::runtime_error("tangent_point: no root (curve already convex through (3/4,0))");
}

BoundCurve convexify_through_origin(const BoundCurve& curve) {
  BoundCurve out = curve;
  out.provenance = "convexified: " + curve.provenance;
  double wstar, slope;
  try {
    wstar = tangent_point(curve);
    slope = HermiteCurve(curve).eval(wstar).second;
  } catch (const std::runtime_error&) {
    return out;  // F = G
  }
  for (auto& s : out.samples)
    if (s.first <= wstar) s.second = slope * (s.first - kOmegaClassical);
  return out;
}

BoundCurve analytic_a00e_curve(int n_samples) {
  BoundCurve c;
  c.kind = EntropyKind::A_00E;
  c.direction = BoundCurve::Direction::analytic;
  c.provenance = "closed form 1 - H_bin((1+sqrt(16w(w-1)+3))/2)";
  for (int i = 0; i <= n_samples; ++i) {
    const double w = kOmegaClassical + (kOmegaMax - kOmegaClassical) * i / n_samples;
    c.samples.push_back({w, f_a00e_analytic(w)});
  }
  return c;
}

BoundCurve conjectured_curve_sampled(EntropyKind kind, int n_samples) {
  BoundCurve c;
  c.kind = kind;
  c.direction = BoundCurve::Direction::conjectured;
  c.provenance = kind == EntropyKind::AB_XYE ? "g1" : "g2";
  for (int i = 0; i <= n_samples; ++i) {
    const double w = kOmegaClassical + (kOmegaMax - kOmegaClassical) * i / n_samples;
    c.samples.push_back({w, conjectured_curve(kind, w)});
  }
  return c;
}

}  // namespace dirne
