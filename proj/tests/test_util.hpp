#pragma once

// Shared helpers for the unit tests: brute-force oracles and generators kept
// deliberately independent of the library implementations they check.

#include "horn/lattice.hpp"
#include "horn/rng.hpp"
#include "horn/types.hpp"

namespace horn::testutil {

// Cofactor-expansion determinant; exponential, for matrices up to ~4x4.
inline Int detCofactor(const IntMatrix& M) {
  const Index n = M.rows();
  if (n == 0) return Int(1);
  if (n == 1) return M(0, 0);
  Int acc(0);
  for (Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = M(i, c);
      }
    }
    const Int term = M(0, j) * detCofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Rank via plain rational Gaussian elimination (independent of the
// fraction-free implementation under test).
inline Index rankRational(const IntMatrix& M) {
  RatMatrix W = M.cast<Rat>();
  const Index r = W.rows(), c = W.cols();
  Index row = 0;
  for (Index col = 0; col < c && row < r; ++col) {
    Index p = -1;
    for (Index i = row; i < r; ++i)
      if (!W(i, col).isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) W.row(p).swap(W.row(row));
    for (Index i = row + 1; i < r; ++i) {
      const Rat f = W(i, col) / W(row, col);
      for (Index j = col; j < c; ++j) W(i, j) -= f * W(row, j);
    }
    ++row;
  }
  return row;
}

// Checks the staircase shape: pivots strictly to the right as rows descend,
// pivots positive, entries above each pivot in [0, pivot), zero rows last.
inline bool isHnfStaircase(const IntMatrix& H) {
  Index lastPivot = -1;
  bool sawZeroRow = false;
  for (Index i = 0; i < H.rows(); ++i) {
    Index p = -1;
    for (Index j = 0; j < H.cols(); ++j)
      if (!H(i, j).isZero()) {
        p = j;
        break;
      }
    if (p < 0) {
      sawZeroRow = true;
      continue;
    }
    if (sawZeroRow) return false;
    if (p <= lastPivot) return false;
    if (H(i, p).sign() <= 0) return false;
    for (Index k = 0; k < i; ++k)
      if (H(k, p).sign() < 0 || H(k, p) >= H(i, p)) return false;
    lastPivot = p;
  }
  return true;
}

inline bool sameRowLattice(const IntMatrix& A, const IntMatrix& B) {
  const IntMatrix ha = hnfRowLattice(A), hb = hnfRowLattice(B);
  return ha.rows() == hb.rows() && ha.cols() == hb.cols() && ha == hb;
}

inline bool sameColumnLattice(const IntMatrix& A, const IntMatrix& B) {
  const IntMatrix ha = hnfColumnLattice(A), hb = hnfColumnLattice(B);
  return ha.rows() == hb.rows() && ha.cols() == hb.cols() && ha == hb;
}

// Random n x m integer matrix with every column summing to zero, never
// identically zero; the raw material for Horn maps and Gale data.
inline IntMatrix randomZeroColsumB(Rng& rng, Index n, Index m, long range) {
  IntMatrix B(n, m);
  do {
    for (Index k = 0; k < m; ++k) {
      Int s(0);
      for (Index i = 0; i + 1 < n; ++i) {
        B(i, k) = Int(rng.intIn(-range, range));
        s += B(i, k);
      }
      B(n - 1, k) = -s;
    }
  } while (isZero(B));
  return B;
}

inline RatVector randomTorusVector(Rng& rng, Index m) {
  RatVector d(m);
  for (Index k = 0; k < m; ++k) d(k) = Rat(Int(rng.nonzeroIntIn(-9, 9)), Int(rng.intIn(1, 9)));
  return d;
}

// Integer point with u != 0 and (Bu)_i != 0 on every row of B that is not
// identically zero.
inline RatVector randomOffBaseLocus(Rng& rng, const IntMatrix& B, long lo, long hi) {
  const Index m = B.cols();
  for (int tries = 0; tries < 5000; ++tries) {
    RatVector u(m);
    for (Index j = 0; j < m; ++j) u(j) = Rat(Int(rng.intIn(lo, hi)));
    if (isZero(u)) continue;
    const RatVector w = B.cast<Rat>() * u;
    bool ok = true;
    for (Index i = 0; i < B.rows() && ok; ++i)
      if (w(i).isZero() && !isZero(B.row(i))) ok = false;
    if (ok) return u;
  }
  throw std::runtime_error("randomOffBaseLocus: rejection sampling failed");
}

// The 5x4 exponent matrix of the two-binary-variables independence model and
// its 2x5 companion configuration; used as fixtures across modules.
inline IntMatrix independenceB() {
  return intMat(5, 4,
                {1, 1, 0, 0,
                 0, 0, 1, 1,
                 -2, -2, -2, -2,
                 1, 0, 1, 0,
                 0, 1, 0, 1});
}

inline IntMatrix independenceA() {
  return intMat(2, 5, {1, 1, 1, 1, 1, 0, 0, 1, 2, 2});
}

}  // namespace horn::testutil
