#pragma once

#include <cstdint>

#include "horn/certificate.hpp"
#include "horn/types.hpp"
#include "horn/version.hpp"

namespace horn {

// Torus monomial map p ^ C for an m x l exponent matrix: consumes a
// length-m point with nonzero coordinates, produces the length-l point
// whose j-th coordinate is prod_i p_i^{C(i,j)}.
RatVector monomialApply(const IntMatrix& C, const RatVector& p);

// Columnwise extension: each column of P is a torus point.
RatMatrix monomialApply(const IntMatrix& C, const RatMatrix& P);

// Linear projection v -> C v.
RatVector linearApply(const IntMatrix& C, const RatVector& v);
RatMatrix linearApply(const IntMatrix& C, const RatMatrix& V);

// Entrywise product.
RatVector hadamard(const RatVector& a, const RatVector& b);
RatMatrix hadamard(const RatMatrix& a, const RatMatrix& b);

// Verifies the composition calculus tying the three maps together,
//   B (C v) = (B C) v,   (r^B)^C = r^(BC),   (d o r)^C = d^C o r^C,
// on the given data, on the C = identity degenerate case, on matrix-argument
// variants, and on seeded random instances.  Shapes: B is n x m, C is m x l,
// v has length l, r is a torus point of length n, d a torus point of length m.
Certificate checkCompositionIdentities(const IntMatrix& B, const IntMatrix& C, const RatVector& v,
                                       const RatVector& r, const RatVector& d,
                                       std::uint64_t seed = kDefaultSeed);

}  // namespace horn
