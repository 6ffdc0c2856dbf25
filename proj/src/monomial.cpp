#include "horn/monomial.hpp"

#include <string>

#include "horn/errors.hpp"
#include "horn/rng.hpp"

namespace horn {

RatVector monomialApply(const IntMatrix& C, const RatVector& p) {
  if (p.size() != C.rows()) throw ShapeError("monomialApply: point length must match matrix rows");
  for (Index i = 0; i < p.size(); ++i)
    if (p(i).isZero()) throw InputError("monomialApply: zero coordinate " + std::to_string(i) + " (not a torus point)");
  RatVector out(C.cols());
  for (Index j = 0; j < C.cols(); ++j) {
    Rat acc(1);
    for (Index i = 0; i < C.rows(); ++i) acc *= pow(p(i), C(i, j).toLong());
    out(j) = acc;
  }
  return out;
}

RatMatrix monomialApply(const IntMatrix& C, const RatMatrix& P) {
  RatMatrix out(C.cols(), P.cols());
  for (Index s = 0; s < P.cols(); ++s) out.col(s) = monomialApply(C, RatVector(P.col(s)));
  return out;
}

RatVector linearApply(const IntMatrix& C, const RatVector& v) {
  if (v.size() != C.cols()) throw ShapeError("linearApply: vector length must match matrix cols");
  return C.cast<Rat>() * v;
}

RatMatrix linearApply(const IntMatrix& C, const RatMatrix& V) {
  if (V.rows() != C.cols()) throw ShapeError("linearApply: row count must match matrix cols");
  return C.cast<Rat>() * V;
}

RatVector hadamard(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ShapeError("hadamard: length mismatch");
  return a.cwiseProduct(b);
}

RatMatrix hadamard(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("hadamard: shape mismatch");
  return a.cwiseProduct(b);
}

namespace {

bool matEq(const RatMatrix& a, const RatMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

// Runs the three identities for one dataset and appends tagged results.
void checkOnce(Certificate& cert, const std::string& tag, const IntMatrix& B, const IntMatrix& C,
               const RatMatrix& V, const RatMatrix& R, const RatMatrix& D) {
  const IntMatrix BC = B * C;
  cert.add("linear_composition" + tag, matEq(linearApply(B, linearApply(C, V)), linearApply(BC, V)));
  cert.add("monomial_composition" + tag,
           matEq(monomialApply(C, monomialApply(B, R)), monomialApply(BC, R)));
  const RatMatrix rB = monomialApply(B, R);
  cert.add("hadamard_distribution" + tag,
           matEq(monomialApply(C, hadamard(D, rB)), hadamard(monomialApply(C, D), monomialApply(C, rB))));
}

RatMatrix torusMatrix(Rng& rng, Index rows, Index cols) {
  RatMatrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = Rat(Int(rng.nonzeroIntIn(-6, 6)), Int(rng.intIn(1, 4)));
  return M;
}

}  // namespace

Certificate checkCompositionIdentities(const IntMatrix& B, const IntMatrix& C, const RatVector& v,
                                       const RatVector& r, const RatVector& d,
                                       std::uint64_t seed) {
  const Index n = B.rows(), m = B.cols(), l = C.cols();
  if (C.rows() != m) throw ShapeError("checkCompositionIdentities: C must have m rows");
  if (v.size() != l || r.size() != n || d.size() != m)
    throw ShapeError("checkCompositionIdentities: vector length mismatch");

  Certificate cert;
  checkOnce(cert, "/given", B, C, RatMatrix(v), RatMatrix(r), RatMatrix(d));
  checkOnce(cert, "/identity_C", B, IntMatrix(IntMatrix::Identity(m, m)), RatMatrix(d), RatMatrix(r),
            RatMatrix(d));

  Rng rng(seed);
  for (int round = 1; round <= 4; ++round) {
    const Index rn = rng.intIn(1, 4), rm = rng.intIn(1, 4), rl = rng.intIn(1, 4);
    const IntMatrix RB = rng.intMatrix(rn, rm, -4, 4);
    const IntMatrix RC = rng.intMatrix(rm, rl, -4, 4);
    const std::string tag = "/round" + std::to_string(round);
    // Matrix arguments with two columns exercise the matrix-variant forms.
    checkOnce(cert, tag, RB, RC, torusMatrix(rng, rl, 2), torusMatrix(rng, rn, 2),
              torusMatrix(rng, rm, 2));
  }
  return cert;
}

}  // namespace horn
