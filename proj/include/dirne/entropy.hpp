#pragma once

#include <Eigen/Dense>

// Scalar entropy functions, small symmetric eigensolves, state
// distinguishability, and the certified polynomial minorants of the
// binary entropy.

namespace dirne {

// H_bin(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 := 0.
// Throws std::domain_error if p is outside [0,1] by more than 1e-12.
double binary_entropy(double p);

// Phi(x) = H_bin(1/2 + x/2), even on [-1,1].
double phi(double x);

// Shannon entropy in bits of a probability vector. Entries below zero by
// at most 1e-12 are clamped to 0; the sum must be within 1e-9 of 1.
double shannon(const Eigen::Ref<const Eigen::VectorXd>& p);

// I_k = \int_{1/2}^1 (1/(z ln2)) ((1-z)/z)^{2k} dz, adaptive quadrature to
// 1e-13, memoized (first call per k computes, later calls read).
double i_coeff(int k);

// Certified polynomial minorant Phi_n(x) = sum_{k=0..n} I_k x^{2k} (1-x^2),
// with Phi_n <= Phi <= Phi_n + tail * x^{2(n+1)} on [-1,1].
struct PolyMinorant {
  int order = 0;              // n
  Eigen::VectorXd coeffs;     // I_0 .. I_n
  double tail = 0;            // I_{n+1}

  double value(double x) const;
  double derivative(double x) const;
  // max_{|x|<=1} |Phi_n'(x)| = |Phi_n'(1)| = 2 sum I_k
  double derivative_at_one() const;
};
PolyMinorant phi_minorant(int n);

// Eigenvalues of a real symmetric matrix, descending. The 2x2 case is the
// closed form; the 4x4 case runs row-major cyclic Jacobi sweeps until the
// largest off-diagonal entry is below 1e-14.
Eigen::Vector2d eig_sym(const Eigen::Matrix2d& m);
Eigen::Vector4d eig_sym(const Eigen::Matrix4d& m);

// Holevo-Helstrom success probability 1/2 + ||rho1 - rho2||_1 / 4 for
// distinguishing two states given with equal priors. Inputs must be unit
// trace (1e-9) and positive semidefinite (eigenvalues >= -1e-10).
double helstrom(const Eigen::Matrix2d& rho1, const Eigen::Matrix2d& rho2);
double helstrom(const Eigen::Matrix4d& rho1, const Eigen::Matrix4d& rho2);

}  // namespace dirne
