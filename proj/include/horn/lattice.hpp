#pragma once

#include <optional>

#include "horn/types.hpp"

namespace horn {

// Row-style Hermite normal form: H = U * M with U unimodular, H in row
// echelon staircase with positive pivots and entries above each pivot
// reduced into [0, pivot).
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
};
HnfResult hnf(const IntMatrix& M);

// Smith normal form: S = U * M * V with U, V unimodular, S diagonal with
// nonnegative invariant factors s1 | s2 | ... .
struct SnfResult {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
};
SnfResult snf(const IntMatrix& M);

// Basis (as columns) of {x : M x = 0} over the integers; always a basis of
// the full (saturated) kernel lattice, in column HNF so it is canonical.
IntMatrix rightKernelBasis(const IntMatrix& M);

// Basis (as rows) of {y : y^T M = 0}, canonical via row HNF.
IntMatrix leftKernelBasis(const IntMatrix& M);

// Saturation of the column span: basis (n x r) of the smallest saturated
// lattice containing the columns of M, plus integer coordinates C (r x c)
// with basis * C = M.
struct SaturationResult {
  IntMatrix basis;
  IntMatrix coords;
};
SaturationResult saturateColumnSpan(const IntMatrix& M);

// Given a lattice basis L (columns) and a primitive vector w in that lattice,
// returns a new basis of the same lattice whose first column is w.
// Throws InputError if w is outside the lattice or not primitive in it.
IntMatrix extendPrimitiveToBasis(const IntMatrix& L, const IntVector& w);

// Fraction-free determinant (Bareiss).
Int detBareiss(const IntMatrix& M);

// Rank over the rationals, computed fraction-free.
Index rank(const IntMatrix& M);

// Solve A x = b over the rationals exactly; nullopt when inconsistent.
// Underdetermined systems return the particular solution with free
// variables set to zero.
std::optional<RatVector> solveExact(const RatMatrix& A, const RatVector& b);
std::optional<RatVector> solveExact(const IntMatrix& A, const RatVector& b);

// Same with a matrix right-hand side (columnwise).
std::optional<RatMatrix> solveExactMatrix(const RatMatrix& A, const RatMatrix& B);

// Exact inverse of a unimodular integer matrix.
IntMatrix unimodularInverse(const IntMatrix& U);

// Canonical basis of the column lattice: column-HNF with zero columns dropped.
IntMatrix hnfColumnLattice(const IntMatrix& M);

// Canonical basis of the row lattice: row-HNF with zero rows dropped.
IntMatrix hnfRowLattice(const IntMatrix& M);

// True iff the Smith normal form has min(rows, cols) invariant factors all
// equal to 1, i.e. the matrix has full rank and its span is saturated
// (for a k x n matrix with k <= n: the columns generate all of Z^k).
bool isPrimitiveLattice(const IntMatrix& M);

}  // namespace horn
