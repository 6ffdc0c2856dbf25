#pragma once

#include <map>
#include <string>
#include <vector>

#include "horn/types.hpp"

namespace horn {

using Exponents = std::vector<long>;

// Graded lexicographic order: compare total degree first, then entries
// left to right.  Gives every polynomial a canonical term sequence.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (long e : a) da += e;
    for (long e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Sparse multivariate polynomial over the rationals.  Terms with zero
// coefficients are never stored; the variable count is fixed per value.
class MultiPoly {
public:
  using TermMap = std::map<Exponents, Rat, GrlexLess>;

  MultiPoly() : nvars_(0) {}
  explicit MultiPoly(Index nvars) : nvars_(nvars) {}

  static MultiPoly constant(Index nvars, const Rat& c);
  static MultiPoly variable(Index nvars, Index i);

  Index vars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rat constantValue() const;  // coefficient of the zero exponent vector

  // Adds coeff * x^exps into this polynomial.
  void addTerm(const Exponents& exps, const Rat& coeff);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Rat eval(const RatVector& point) const;
  MultiPoly partial(Index var) const;
  MultiPoly pow(long e) const;

  long degreeIn(Index var) const;   // -1 for the zero polynomial
  long totalDegree() const;         // -1 for the zero polynomial

  // Index of the unique variable with positive degree, or -1 when constant.
  // Throws InputError if two or more variables occur.
  Index soleVariable() const;

  // Dense coefficient list with respect to one variable: entry k is the
  // coefficient of var^k, a polynomial with degree 0 in var.
  std::vector<MultiPoly> coefficientsIn(Index var) const;

  // Ring homomorphism sending variable i to images[i].
  MultiPoly substitute(const std::vector<MultiPoly>& images, Index newVars) const;

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  Index nvars_;
  TermMap terms_;
};

inline MultiPoly operator*(const Rat& c, const MultiPoly& p) { return p * c; }

// Monic gcd of two polynomials in (at most) one common variable.
MultiPoly gcdUnivariate(const MultiPoly& a, const MultiPoly& b);

// Monic product of the distinct irreducible factors: a / gcd(a, a').
MultiPoly squarefreePart(const MultiPoly& a);

// Determinant of the Sylvester matrix of a and b with respect to one
// variable; the result has degree 0 in that variable.  Both inputs must
// have positive degree in it.
MultiPoly sylvesterResultant(const MultiPoly& a, const MultiPoly& b, Index elim);

// Exact quotient a / b; throws when b does not divide a.
MultiPoly polyDivExact(const MultiPoly& a, const MultiPoly& b);

// Largest monomial dividing every term (per-variable minimum exponents).
Exponents monomialContent(const MultiPoly& p);
MultiPoly removeMonomialContent(const MultiPoly& p);

// Scales by a positive rational so coefficients are coprime integers;
// the sign of the polynomial is preserved.
MultiPoly integerPrimitivePart(const MultiPoly& p);

}  // namespace horn
