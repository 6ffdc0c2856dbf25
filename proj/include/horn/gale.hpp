#pragma once

#include "horn/certificate.hpp"
#include "horn/types.hpp"

namespace horn {

// Gale-dual presentation of an exponent matrix B (n x m with zero column
// sums): Bsat spans the saturation of B's column span, B = Bsat * C, and the
// rows of A are a basis of the left kernel of Bsat with first row all ones,
// so that 0 -> Z^(n-k) --Bsat--> Z^n --A--> Z^k -> 0 is exact.
struct GaleData {
  IntMatrix B;     // n x m
  IntMatrix Bsat;  // n x (n-k)
  IntMatrix C;     // (n-k) x m
  IntMatrix A;     // k x n

  Index n() const { return B.rows(); }
  Index m() const { return B.cols(); }
  Index k() const { return A.rows(); }
};

// Builds GaleData from B.  The all-ones vector lies in the left kernel of
// Bsat because column sums vanish; it is completed to a kernel basis and the
// remaining rows are canonicalized (first coordinate cleared, then HNF), so
// the output is deterministic.
GaleData galeFromB(const IntMatrix& B);

// The Gale dual of a configuration matrix A (first row all ones, columns
// generating Z^k): basis of ker(A) as columns.  Columns sum to zero.
IntMatrix kernelGale(const IntMatrix& A);

// Checks every GaleData invariant and rank additivity; reports each one.
Certificate verifyExactness(const GaleData& G);

}  // namespace horn
