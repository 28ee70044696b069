#include "projpoly/polynomials.hpp"

namespace projpoly {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void require_order(int n, const char* op) {
  if (n < 0 || n > kMaxBesselOrder)
    throw DomainError(std::string(op) + ": order n must lie in [0, " +
                      std::to_string(kMaxBesselOrder) + "]");
}

BigInt binomial(int n, int k) {
  BigInt num = 1, den = 1;
  for (int j = 1; j <= k; ++j) {
    num *= n - k + j;
    den *= j;
  }
  return num / den;
}

void add_term(RationalPoly& poly, int degree, const Rational& coeff) {
  if (poly.size() <= static_cast<std::size_t>(degree))
    poly.resize(degree + 1, Rational(0));
  poly[degree] += coeff;
}

void trim(RationalPoly& poly) {
  while (!poly.empty() && poly.back() == 0)
    poly.pop_back();
}

}  // namespace

BesselCoeffs bessel_coeffs(int n) {
  require_order(n, "bessel_coeffs");
  BesselCoeffs out;
  out.n = n;
  out.a.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    // (2n-k)!/(2n)! = 1 / ((2n)(2n-1)...(2n-k+1))
    BigInt falling = 1;
    for (int j = 0; j < k; ++j)
      falling *= 2 * n - j;
    BigInt two_k = BigInt(1) << k;
    out.a.emplace_back(binomial(n, k) * two_k, falling);
  }
  return out;
}

ComplexMatrix theta_apply(int n, const ComplexMatrix& X) {
  require_order(n, "theta_apply");
  if (X.rows() != X.cols())
    throw DimensionError("theta_apply: requires a square matrix");
  return eval_poly(to_double(bessel_coeffs(n).a), X);
}

AlphaBeta alpha_beta_coeffs(int n) {
  require_order(n, "alpha_beta_coeffs");
  const BesselCoeffs theta = bessel_coeffs(n);
  AlphaBeta out;
  for (int j = 0; 2 * j <= n; ++j)
    out.alpha.push_back(j % 2 == 0 ? theta.a[2 * j] : -theta.a[2 * j]);
  for (int j = 0; 2 * j + 1 <= n; ++j)
    out.beta.push_back(j % 2 == 0 ? theta.a[2 * j + 1] : -theta.a[2 * j + 1]);
  return out;
}

GammaDelta gamma_delta(int n) {
  if (n < 1 || n > 3)
    throw DomainError("gamma_delta: only orders n in {1,2,3} are supported");
  GammaDelta out;
  switch (n) {
    case 1:
      out.gamma.terms = {{Rational(1), ""}};
      out.delta.terms = {{Rational(1), ""}};
      break;
    case 2:
      out.gamma.terms = {{Rational(1), ""},
                         {Rational(-1, 3), "x"},
                         {Rational(-1, 2), "yy"}};
      out.delta.terms = {{Rational(1), ""}, {Rational(1, 2), "y"}};
      break;
    default:
      // The mixed word is "xy": it realizes (t^2 H*H)(t Y*H), matching the
      // explicit matrix form -(1/6) H*H Y*H of the degree-3 correction.
      out.gamma.terms = {{Rational(1), ""},
                         {Rational(-2, 5), "x"},
                         {Rational(-1, 2), "yy"},
                         {Rational(-1, 6), "yyy"},
                         {Rational(-1, 6), "xy"}};
      out.delta.terms = {{Rational(1), ""},
                         {Rational(-1, 15), "x"},
                         {Rational(1, 2), "y"}};
      break;
  }
  return out;
}

ComplexMatrix eval_noncommutative(const NoncommutativePoly& poly,
                                  const ComplexMatrix& X, const ComplexMatrix& Y) {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw DimensionError("eval_noncommutative: X and Y must be square and equal-sized");
  const auto p = X.rows();
  ComplexMatrix acc = ComplexMatrix::Zero(p, p);
  for (const auto& term : poly.terms) {
    ComplexMatrix word_value = ComplexMatrix::Identity(p, p);
    for (char letter : term.word) {
      if (letter == 'x')
        word_value = word_value * X;
      else if (letter == 'y')
        word_value = word_value * Y;
      else
        throw DomainError("eval_noncommutative: word letters must be 'x' or 'y'");
    }
    acc += to_double(term.coeff) * word_value;
  }
  return acc;
}

RationalPoly theta_poly(int n) {
  require_order(n, "theta_poly");
  return bessel_coeffs(n).a;
}

RationalPoly parity_recombine(const AlphaBeta& ab) {
  RationalPoly out;
  // alpha(-z^2) contributes even degrees: alpha_j * (-1)^j * z^{2j}.
  for (std::size_t j = 0; j < ab.alpha.size(); ++j)
    add_term(out, static_cast<int>(2 * j),
             j % 2 == 0 ? ab.alpha[j] : -ab.alpha[j]);
  // z*beta(-z^2) contributes odd degrees.
  for (std::size_t j = 0; j < ab.beta.size(); ++j)
    add_term(out, static_cast<int>(2 * j + 1),
             j % 2 == 0 ? ab.beta[j] : -ab.beta[j]);
  trim(out);
  return out;
}

RationalPoly restrict_to_x(const NoncommutativePoly& poly) {
  RationalPoly out;
  for (const auto& term : poly.terms) {
    if (term.word.find('y') != std::string::npos)
      continue;
    add_term(out, static_cast<int>(term.word.size()), term.coeff);
  }
  trim(out);
  return out;
}

RationalPoly collapse_xy(const NoncommutativePoly& poly) {
  RationalPoly out;
  for (const auto& term : poly.terms) {
    int degree = 0;
    int sign = 1;
    for (char letter : term.word) {
      if (letter == 'x') {
        degree += 2;
        sign = -sign;
      } else {
        degree += 1;
      }
    }
    add_term(out, degree, sign > 0 ? term.coeff : -term.coeff);
  }
  trim(out);
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::vector<double> to_double(const std::vector<Rational>& coeffs) {
  std::vector<double> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs)
    out.push_back(to_double(c));
  return out;
}

ComplexMatrix eval_poly(const std::vector<double>& coeffs, const ComplexMatrix& X) {
  if (X.rows() != X.cols())
    throw DimensionError("eval_poly: requires a square matrix");
  const auto p = X.rows();
  if (coeffs.empty())
    return ComplexMatrix::Zero(p, p);
  ComplexMatrix acc =
      coeffs.back() * ComplexMatrix::Identity(p, p);
  for (auto k = static_cast<std::ptrdiff_t>(coeffs.size()) - 2; k >= 0; --k) {
    acc = acc * X;
    acc.diagonal().array() += coeffs[static_cast<std::size_t>(k)];
  }
  return acc;
}

}  // namespace projpoly
