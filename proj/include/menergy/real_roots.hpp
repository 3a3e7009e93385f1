#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

namespace menergy {

using Rational = boost::multiprecision::cpp_rational;
using WideFloat = boost::multiprecision::cpp_bin_float_50;

/// Polynomial with rational coefficients, lowest degree first. The zero
/// polynomial is the empty vector.
using RationalPoly = std::vector<Rational>;

RationalPoly trimmed(RationalPoly p);
RationalPoly derivative(const RationalPoly& p);
/// Quotient and remainder of a / b; b must be nonzero.
std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& a, const RationalPoly& b);
/// Monic greatest common divisor.
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// A real root bracketed by [lower, upper] with its multiplicity in the
/// original polynomial.
struct RootBracket {
  WideFloat lower;
  WideFloat upper;
  int multiplicity = 1;

  WideFloat midpoint() const { return (lower + upper) / 2; }
};

/// Yun's square-free factorization: p = c * prod_i factors[i]^(i+1).
/// Entries may be the constant 1.
std::vector<RationalPoly> square_free_factors(const RationalPoly& p);

/// Number of distinct real roots of p in the half-open interval (a, b],
/// counted exactly with a Sturm sequence.
int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b);

/// Every real root of p in (0, bound] where bound is the Cauchy bound.
/// Roots come from companion-matrix eigenvalues, are bracketed by sign
/// changes of the square-free factors, and bisected in 50-digit arithmetic
/// until brackets are narrower than `width`. Falls back to Sturm isolation
/// when the eigenvalue brackets do not separate the roots.
/// p must be real-rooted with no root at 0 or below; otherwise
/// std::domain_error is thrown.
std::vector<RootBracket> positive_real_roots(const RationalPoly& p, double width = 1e-30);

/// Same as positive_real_roots but always isolates with Sturm sequences.
std::vector<RootBracket> positive_real_roots_sturm(const RationalPoly& p, double width = 1e-30);

}  // namespace menergy
