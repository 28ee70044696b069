#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "projpoly/matcore.hpp"

namespace projpoly {

using Rational = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over the rationals, coefficients ascending.
using RationalPoly = std::vector<Rational>;

// Coefficients a_0..a_n of Theta_n(z) = sum_k binom(n,k) (2n-k)!/(2n)! (2z)^k,
// i.e. a_k = binom(n,k) (2n-k)!/(2n)! 2^k.  Always a_0 = 1, and a_1 = 1 for
// n >= 1, so Theta_n matches e^z only to first order.
struct BesselCoeffs {
  int n = 0;
  std::vector<Rational> a;
};

// Even/odd split of Theta_n: alpha_n(z) = sum_j a_{2j} (-z)^j and
// beta_n(z) = sum_j a_{2j+1} (-z)^j, with the alternating signs folded into
// the stored coefficients so plain Horner evaluation applies.
struct AlphaBeta {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

// Polynomial in the non-commuting variables x and y.  Words are strings over
// the alphabet {'x','y'}; evaluation substitutes matrices preserving word
// order (the word "xy" evaluates to X*Y, never Y*X).
struct NoncommutativePoly {
  struct Term {
    Rational coeff;
    std::string word;
  };
  std::vector<Term> terms;
};

struct GammaDelta {
  NoncommutativePoly gamma;
  NoncommutativePoly delta;
};

// Supported range: 0 <= n <= 12 (exact rationals; no overflow concerns since
// the arithmetic is arbitrary-precision, the cap keeps the API honest about
// what is tested).
inline constexpr int kMaxBesselOrder = 12;

BesselCoeffs bessel_coeffs(int n);

// Horner evaluation of Theta_n at a square matrix argument; coefficients are
// converted from exact rationals to doubles once.
ComplexMatrix theta_apply(int n, const ComplexMatrix& X);

AlphaBeta alpha_beta_coeffs(int n);

// The Stiefel correction polynomials for n in {1,2,3}:
//   gamma_1 = 1,                                      delta_1 = 1
//   gamma_2 = 1 - x/3 - y^2/2,                        delta_2 = 1 + y/2
//   gamma_3 = 1 - 2x/5 - y^2/2 - y^3/6 - xy/6,        delta_3 = 1 - x/15 + y/2
GammaDelta gamma_delta(int n);

ComplexMatrix eval_noncommutative(const NoncommutativePoly& poly,
                                  const ComplexMatrix& X, const ComplexMatrix& Y);

// ---- exact-rational helpers (identity checks live on these) ----

// Theta_n as a univariate rational polynomial.
RationalPoly theta_poly(int n);

// alpha_n(-z^2) + z*beta_n(-z^2), which must equal Theta_n(z) exactly.
RationalPoly parity_recombine(const AlphaBeta& ab);

// Restriction p(x, 0): words containing y vanish, pure powers of x remain.
RationalPoly restrict_to_x(const NoncommutativePoly& poly);

// Collapse to one commuting variable via x -> -z^2, y -> z.
RationalPoly collapse_xy(const NoncommutativePoly& poly);

double to_double(const Rational& r);
std::vector<double> to_double(const std::vector<Rational>& coeffs);

// Horner evaluation of a univariate polynomial at a square matrix.
ComplexMatrix eval_poly(const std::vector<double>& coeffs, const ComplexMatrix& X);

}  // namespace projpoly
