#pragma once

#include <random>

#include "projpoly/matcore.hpp"
#include "projpoly/polar.hpp"

namespace projpoly::testing {

inline ComplexMatrix complex_gaussian(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix G(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = normal(gen);
      const double im = normal(gen);
      G(i, j) = Complex(re, im);
    }
  return G;
}

inline ComplexMatrix random_unitary(int m, std::uint64_t seed) {
  return thin_qr(complex_gaussian(m, m, seed)).Q;
}

// Full-rank matrix with prescribed extreme singular values sigma_1 = 1 and
// sigma_p = 1/condition, the rest log-uniform in between.
inline ComplexMatrix random_conditioned(int m, int p, double condition,
                                        std::uint64_t seed) {
  const ComplexMatrix U = thin_qr(complex_gaussian(m, p, seed)).Q;
  const ComplexMatrix V = random_unitary(p, seed + 1);
  std::mt19937_64 gen(seed + 2);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXcd sigma(p);
  for (int i = 0; i < p; ++i) {
    const double expo = (i == 0) ? 0.0 : (i == p - 1 ? 1.0 : unif(gen));
    sigma(i) = std::pow(condition, -expo);
  }
  return U * sigma.asDiagonal() * V.adjoint();
}

inline ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  ComplexMatrix A(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& v : row)
      A(i, j++) = v;
    ++i;
  }
  return A;
}

}  // namespace projpoly::testing
