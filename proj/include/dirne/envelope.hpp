#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

// Convex lower envelopes: 1-D lower hulls and the discrete Legendre-Fenchel
// double transform in one and two dimensions. The double conjugate of
// sampled data is a max-affine minorant, so every output here is certified
// to lie at or below the input samples.

namespace dirne {

struct SampledFn1D {
  std::vector<double> x;  // strictly increasing
  std::vector<double> y;
  double eval(double at) const;  // piecewise-linear interpolation
};

struct SampledFn2D {
  std::vector<double> xs, ys;  // strictly increasing axes
  Eigen::MatrixXd v;           // v(i,j) is the value at (xs[i], ys[j])
};

// Lower convex hull by monotone chain; collinear interior points removed.
std::vector<std::pair<double, double>> lower_hull(
    std::vector<std::pair<double, double>> points);

// f*(k) = max_i (k x_i - y_i) over the given sorted slope list, linear time
// in the merged sequences after a hull pass.
SampledFn1D lf_conjugate_1d(const SampledFn1D& f, const std::vector<double>& slopes);

// Double conjugate on a slope grid built from the pairwise sample slopes;
// equals the lower hull at the sample abscissae.
SampledFn1D convenv_1d(const SampledFn1D& f);

// Double 2-D conjugate computed as sequential per-axis 1-D conjugates.
SampledFn2D convenv_2d(const SampledFn2D& f);

}  // namespace dirne
