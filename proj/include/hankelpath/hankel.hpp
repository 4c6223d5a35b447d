#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hankelpath {

/// Side length p of the square Hankel matrix built from n = 2p-1 samples.
/// Throws for even or non-positive n (a non-square Hankel map is unsupported).
inline Eigen::Index half_order(Eigen::Index n) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("impulse response length must be odd and positive, got " +
                                std::to_string(n));
  return (n + 1) / 2;
}

inline void validate_impulse_response(const Eigen::VectorXd& g) {
  half_order(g.size());
  if (!g.allFinite())
    throw std::invalid_argument("impulse response contains non-finite entries");
}

/// H(g): the p x p Hankel matrix with entry (i, j) = g(i + j), 0-based.
inline Eigen::MatrixXd hankel_map(const Eigen::VectorXd& g) {
  const Eigen::Index p = half_order(g.size());
  Eigen::MatrixXd H(p, p);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index i = 0; i < p; ++i) H(i, j) = g(i + j);
  return H;
}

/// Adjoint H*(X): sums the anti-diagonals of a square X, x_k = sum_{i+j=k} X(i,j)
/// (0-based k; the 1-based convention shifts the index by one).
inline Eigen::VectorXd hankel_adjoint(const Eigen::MatrixXd& X) {
  const Eigen::Index p = X.rows();
  if (p == 0 || X.cols() != p)
    throw std::invalid_argument("hankel_adjoint expects a nonempty square matrix");
  Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * p - 1);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index i = 0; i < p; ++i) x(i + j) += X(i, j);
  return x;
}

/// Anti-diagonal multiplicities (1, 2, ..., p, ..., 2, 1); equals H*(1_{p x p}).
inline Eigen::VectorXd antidiagonal_counts(Eigen::Index p) {
  if (p < 1) throw std::invalid_argument("antidiagonal_counts requires p >= 1");
  const Eigen::Index n = 2 * p - 1;
  Eigen::VectorXd m(n);
  for (Eigen::Index k = 0; k < n; ++k)
    m(k) = static_cast<double>(std::min({k + 1, p, n - k}));
  return m;
}

/// c_n = ||H*(1_{p x p})||_2 = sqrt(2 sum_{k=1}^{p-1} k^2 + p^2).
inline double cn_constant(Eigen::Index p) {
  if (p < 1) throw std::invalid_argument("cn_constant requires p >= 1");
  double s = 0.0;
  for (Eigen::Index k = 1; k < p; ++k) s += static_cast<double>(k) * static_cast<double>(k);
  return std::sqrt(2.0 * s + static_cast<double>(p) * static_cast<double>(p));
}

enum class FrobeniusMode { paper, tight };

/// Constant C_A with ||H(x)||_F^2 <= C_A ||x||_2^2 for all x of odd length n.
/// paper mode returns n; tight mode returns p = (n+1)/2, the largest
/// anti-diagonal multiplicity, which already satisfies the inequality.
inline double frobenius_constant(Eigen::Index n, FrobeniusMode mode = FrobeniusMode::paper) {
  const Eigen::Index p = half_order(n);
  return mode == FrobeniusMode::paper ? static_cast<double>(n) : static_cast<double>(p);
}

}  // namespace hankelpath
