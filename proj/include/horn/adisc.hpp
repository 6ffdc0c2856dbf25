#pragma once

#include <horn/certificate.hpp>
#include <horn/poly.hpp>
#include <horn/types.hpp>

namespace horn {

// Exponent configuration of a Laurent family F(q, t) = sum_i q_i t^{w_i}.
// The columns w_i of A are the exponent vectors; the all-ones first row makes
// the family homogeneous in q, and the columns must generate the full integer
// lattice.  B is the kernel of A in its canonical primitive form.
struct PointConfig {
  IntMatrix A;  // k x n exponent matrix
  IntMatrix B;  // n x (n - k), A * B = 0

  Index k() const { return A.rows(); }
  Index n() const { return A.cols(); }
};

// Validates the all-ones row and lattice-generation invariants, then attaches
// the kernel matrix.
PointConfig makePointConfig(IntMatrix A);

// Coefficient vector q_i = (Bv)_i * t^{-w_i} at the torus point t = (1, tRest).
// By construction F(q, .) and every weighted derivative of F vanish at t, so
// {F = 0} is singular there.
RatVector singularPointParam(const PointConfig& P, const RatVector& v,
                             const RatVector& tRest);

// Exact vanishing checks for F(q, .) and all its torus-logarithmic derivatives
// at t = (1, tRest).
Certificate verifySingularPoint(const PointConfig& P, const RatVector& q,
                                const RatVector& tRest);

// (Bv)^B: the singular coefficient vector pushed into the kernel torus.  The
// torus parameter cancels because A * B = 0, so the value depends only on v,
// and only through its class under scaling.
RatVector reducedHornPoint(const PointConfig& P, const RatVector& v);

// For one-variable families (k = 2): the resultant of F and dF/dt with respect
// to t, divided by the leading coefficient and sign-normalized as the classical
// discriminant, with monomial content stripped and integer coefficients made
// primitive.  Repeated exponent columns are grouped for the elimination and the
// grouping is undone by linear substitution, so the result lives in the
// original n coefficient variables.  Configurations of degree at most one have
// no discriminant; the unit polynomial is returned.
MultiPoly discriminantUnivariate(const PointConfig& P);

}  // namespace horn
