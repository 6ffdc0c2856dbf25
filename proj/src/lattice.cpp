#include "horn/lattice.hpp"

#include <vector>

#include "horn/errors.hpp"

namespace horn {

namespace {

// Left-multiply rows (r0, r1) of M by [[a, b], [c, d]] in place.
void rowCombine(IntMatrix& M, Index r0, Index r1, const Int& a, const Int& b, const Int& c,
                const Int& d) {
  for (Index j = 0; j < M.cols(); ++j) {
    const Int x = M(r0, j), y = M(r1, j);
    M(r0, j) = a * x + b * y;
    M(r1, j) = c * x + d * y;
  }
}

// Right-multiply columns (c0, c1) of M by [[a, c], [b, d]] in place.
void colCombine(IntMatrix& M, Index c0, Index c1, const Int& a, const Int& b, const Int& c,
                const Int& d) {
  for (Index i = 0; i < M.rows(); ++i) {
    const Int x = M(i, c0), y = M(i, c1);
    M(i, c0) = a * x + b * y;
    M(i, c1) = c * x + d * y;
  }
}

}  // namespace

HnfResult hnf(const IntMatrix& M) {
  const Index r = M.rows(), c = M.cols();
  HnfResult res{M, IntMatrix::Identity(r, r)};
  IntMatrix& H = res.H;
  IntMatrix& U = res.U;

  Index row = 0;
  for (Index col = 0; col < c && row < r; ++col) {
    // Fold everything below (row, col) into the pivot with unimodular 2x2 ops.
    for (Index i = row + 1; i < r; ++i) {
      if (H(i, col).isZero()) continue;
      const auto [g, s, t] = gcdext(H(row, col), H(i, col));
      const Int hr = divExact(H(row, col), g), hi = divExact(H(i, col), g);
      // det [[s, t], [-hi, hr]] = s*hr + t*hi = 1
      rowCombine(H, row, i, s, t, -hi, hr);
      rowCombine(U, row, i, s, t, -hi, hr);
    }
    if (H(row, col).isZero()) continue;  // entire column segment was zero
    if (H(row, col).sign() < 0) {
      for (Index j = 0; j < c; ++j) H(row, j) = -H(row, j);
      for (Index j = 0; j < r; ++j) U(row, j) = -U(row, j);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (Index i = 0; i < row; ++i) {
      const Int q = fdivQ(H(i, col), H(row, col));
      if (q.isZero()) continue;
      for (Index j = 0; j < c; ++j) H(i, j) -= q * H(row, j);
      for (Index j = 0; j < r; ++j) U(i, j) -= q * U(row, j);
    }
    ++row;
  }
  return res;
}

SnfResult snf(const IntMatrix& M) {
  const Index r = M.rows(), c = M.cols();
  SnfResult res{M, IntMatrix::Identity(r, r), IntMatrix::Identity(c, c)};
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  Index t = 0;
  while (t < r && t < c) {
    // Move a nonzero entry of smallest magnitude in the trailing block to (t, t).
    Index pi = -1, pj = -1;
    for (Index i = t; i < r; ++i)
      for (Index j = t; j < c; ++j) {
        if (S(i, j).isZero()) continue;
        if (pi < 0 || abs(S(i, j)) < abs(S(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) {
      S.row(pi).swap(S.row(t));
      U.row(pi).swap(U.row(t));
    }
    if (pj != t) {
      S.col(pj).swap(S.col(t));
      V.col(pj).swap(V.col(t));
    }

    for (;;) {
      // Clear column t below and row t to the right.  When the pivot divides
      // the target a plain subtraction leaves the pivot row/column intact;
      // otherwise a gcd combine strictly shrinks |S(t,t)|, so the alternation
      // terminates.
      for (Index i = t + 1; i < r; ++i) {
        if (S(i, t).isZero()) continue;
        mpz_class rem = S(i, t).raw() % S(t, t).raw();
        if (sgn(rem) == 0) {
          const Int q = divExact(S(i, t), S(t, t));
          rowCombine(S, t, i, Int(1), Int(0), -q, Int(1));
          rowCombine(U, t, i, Int(1), Int(0), -q, Int(1));
        } else {
          const auto [g, s, u] = gcdext(S(t, t), S(i, t));
          const Int a = divExact(S(t, t), g), b = divExact(S(i, t), g);
          rowCombine(S, t, i, s, u, -b, a);
          rowCombine(U, t, i, s, u, -b, a);
        }
      }
      for (Index j = t + 1; j < c; ++j) {
        if (S(t, j).isZero()) continue;
        mpz_class rem = S(t, j).raw() % S(t, t).raw();
        if (sgn(rem) == 0) {
          const Int q = divExact(S(t, j), S(t, t));
          colCombine(S, t, j, Int(1), Int(0), -q, Int(1));
          colCombine(V, t, j, Int(1), Int(0), -q, Int(1));
        } else {
          const auto [g, s, u] = gcdext(S(t, t), S(t, j));
          const Int a = divExact(S(t, t), g), b = divExact(S(t, j), g);
          colCombine(S, t, j, s, u, -b, a);
          colCombine(V, t, j, s, u, -b, a);
        }
      }
      bool clean = true;
      for (Index i = t + 1; i < r && clean; ++i) clean = S(i, t).isZero();
      for (Index j = t + 1; j < c && clean; ++j) clean = S(t, j).isZero();
      if (clean) break;
    }

    // Enforce divisibility: if some trailing entry is not a multiple of the
    // pivot, fold its row into row t and re-eliminate.
    bool redo = false;
    for (Index i = t + 1; i < r && !redo; ++i)
      for (Index j = t + 1; j < c && !redo; ++j) {
        mpz_class rem = S(i, j).raw() % S(t, t).raw();
        if (sgn(rem) != 0) {
          for (Index jj = 0; jj < c; ++jj) S(t, jj) += S(i, jj);
          for (Index jj = 0; jj < r; ++jj) U(t, jj) += U(i, jj);
          redo = true;
        }
      }
    if (redo) continue;

    if (S(t, t).sign() < 0) {
      for (Index j = 0; j < c; ++j) S(t, j) = -S(t, j);
      for (Index j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
    ++t;
  }
  return res;
}

IntMatrix hnfColumnLattice(const IntMatrix& M) {
  const HnfResult h = hnf(M.transpose());
  Index nz = 0;
  for (Index i = 0; i < h.H.rows(); ++i)
    if (!isZero(h.H.row(i))) ++nz;
  IntMatrix out(M.rows(), nz);
  // Staircase form puts all nonzero rows first.
  for (Index i = 0; i < nz; ++i) out.col(i) = h.H.row(i).transpose();
  return out;
}

IntMatrix hnfRowLattice(const IntMatrix& M) {
  const HnfResult h = hnf(M);
  Index nz = 0;
  for (Index i = 0; i < h.H.rows(); ++i)
    if (!isZero(h.H.row(i))) ++nz;
  return h.H.topRows(nz);
}

IntMatrix rightKernelBasis(const IntMatrix& M) {
  // Rows of U at zero rows of hnf(M^T) are left-kernel vectors of M^T,
  // i.e. right-kernel vectors of M; they form a basis of the saturated
  // kernel lattice because U is unimodular.
  const HnfResult h = hnf(M.transpose());
  std::vector<Index> zrows;
  for (Index i = 0; i < h.H.rows(); ++i)
    if (isZero(h.H.row(i))) zrows.push_back(i);
  IntMatrix K(M.cols(), static_cast<Index>(zrows.size()));
  for (Index j = 0; j < K.cols(); ++j) K.col(j) = h.U.row(zrows[j]).transpose();
  return hnfColumnLattice(K);
}

IntMatrix leftKernelBasis(const IntMatrix& M) {
  const HnfResult h = hnf(M);
  std::vector<Index> zrows;
  for (Index i = 0; i < h.H.rows(); ++i)
    if (isZero(h.H.row(i))) zrows.push_back(i);
  IntMatrix K(static_cast<Index>(zrows.size()), M.rows());
  for (Index i = 0; i < K.rows(); ++i) K.row(i) = h.U.row(zrows[i]);
  return hnfRowLattice(K);
}

Int detBareiss(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw ShapeError("determinant of a non-square matrix");
  const Index n = M.rows();
  if (n == 0) return Int(1);
  IntMatrix W = M;
  Int denom(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (W(k, k).isZero()) {
      Index p = -1;
      for (Index i = k + 1; i < n; ++i)
        if (!W(i, k).isZero()) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      W.row(k).swap(W.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        W(i, j) = divExact(W(i, j) * W(k, k) - W(i, k) * W(k, j), denom);
    denom = W(k, k);
  }
  return sign > 0 ? W(n - 1, n - 1) : -W(n - 1, n - 1);
}

Index rank(const IntMatrix& M) {
  // Fraction-free elimination with column skipping; after each step the
  // active entries are minors built from the pivot rows/columns used so far,
  // so division by the previous pivot stays exact.
  IntMatrix W = M;
  const Index r = W.rows(), c = W.cols();
  Index row = 0;
  Int prev(1);
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
      for (Index j = col + 1; j < c; ++j)
        W(i, j) = divExact(W(i, j) * W(row, col) - W(i, col) * W(row, j), prev);
      W(i, col) = Int(0);
    }
    prev = W(row, col);
    ++row;
  }
  return row;
}

std::optional<RatMatrix> solveExactMatrix(const RatMatrix& A, const RatMatrix& B) {
  if (A.rows() != B.rows()) throw ShapeError("solve: row count mismatch");
  const Index r = A.rows(), c = A.cols(), w = B.cols();
  RatMatrix M(r, c + w);
  M.leftCols(c) = A;
  M.rightCols(w) = B;

  // Gauss-Jordan to reduced row echelon form.
  std::vector<Index> pivotCol;
  Index row = 0;
  for (Index col = 0; col < c && row < r; ++col) {
    Index p = -1;
    for (Index i = row; i < r; ++i)
      if (!M(i, col).isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) M.row(p).swap(M.row(row));
    const Rat inv = inverse(M(row, col));
    for (Index j = col; j < c + w; ++j) M(row, j) *= inv;
    for (Index i = 0; i < r; ++i) {
      if (i == row || M(i, col).isZero()) continue;
      const Rat f = M(i, col);
      for (Index j = col; j < c + w; ++j) M(i, j) -= f * M(row, j);
    }
    pivotCol.push_back(col);
    ++row;
  }
  for (Index i = row; i < r; ++i)
    if (!isZero(M.row(i).rightCols(w))) return std::nullopt;  // 0 = nonzero

  RatMatrix X = RatMatrix::Constant(c, w, Rat(0));
  for (Index i = 0; i < static_cast<Index>(pivotCol.size()); ++i)
    X.row(pivotCol[i]) = M.row(i).rightCols(w);
  return X;
}

std::optional<RatVector> solveExact(const RatMatrix& A, const RatVector& b) {
  auto X = solveExactMatrix(A, RatMatrix(b));
  if (!X) return std::nullopt;
  return RatVector(X->col(0));
}

std::optional<RatVector> solveExact(const IntMatrix& A, const RatVector& b) {
  return solveExact(RatMatrix(A.cast<Rat>()), b);
}

IntMatrix unimodularInverse(const IntMatrix& U) {
  if (U.rows() != U.cols()) throw ShapeError("inverse of a non-square matrix");
  const Index n = U.rows();
  auto X = solveExactMatrix(U.cast<Rat>(), RatMatrix(RatMatrix::Identity(n, n)));
  if (!X) throw Error("matrix is singular, expected unimodular");
  IntMatrix R(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (!(*X)(i, j).isInteger()) throw Error("matrix is not unimodular");
      R(i, j) = (*X)(i, j).num();
    }
  return R;
}

SaturationResult saturateColumnSpan(const IntMatrix& M) {
  // S = U M V; the first r columns of U^{-1} span the saturation of the
  // column span of M (they generate the same subspace and the SNF of that
  // block is the identity).
  const SnfResult s = snf(M);
  Index rk = 0;
  while (rk < s.S.rows() && rk < s.S.cols() && !s.S(rk, rk).isZero()) ++rk;
  const IntMatrix Uinv = unimodularInverse(s.U);
  SaturationResult out;
  out.basis = hnfColumnLattice(Uinv.leftCols(rk));
  auto C = solveExactMatrix(out.basis.cast<Rat>(), M.cast<Rat>());
  if (!C) throw Error("saturation: coordinate solve failed");
  out.coords = IntMatrix(rk, M.cols());
  for (Index i = 0; i < rk; ++i)
    for (Index j = 0; j < M.cols(); ++j) {
      if (!(*C)(i, j).isInteger()) throw Error("saturation: non-integral coordinates");
      out.coords(i, j) = (*C)(i, j).num();
    }
  return out;
}

IntMatrix extendPrimitiveToBasis(const IntMatrix& L, const IntVector& w) {
  if (L.rows() != w.size()) throw ShapeError("extendPrimitiveToBasis: dimension mismatch");
  const Index s = L.cols();
  auto xq = solveExact(L, w.cast<Rat>());
  if (!xq) throw InputError("target vector is outside the spanned subspace");
  IntVector x(s);
  Int g(0);
  for (Index i = 0; i < s; ++i) {
    if (!(*xq)(i).isInteger()) throw InputError("target vector is not in the lattice");
    x(i) = (*xq)(i).num();
    g = gcd(g, x(i));
  }
  if (!(g == Int(1))) throw InputError("target vector is not primitive in the lattice");
  // Unimodular Uc with Uc x = e1, so the columns of L * Uc^{-1} form a basis
  // of the same lattice whose first member is L x = w.
  const HnfResult h = hnf(IntMatrix(x));
  return L * unimodularInverse(h.U);
}

bool isPrimitiveLattice(const IntMatrix& M) {
  const Index k = M.rows() < M.cols() ? M.rows() : M.cols();
  const SnfResult s = snf(M);
  for (Index i = 0; i < k; ++i)
    if (!(s.S(i, i) == Int(1))) return false;
  return true;
}

}  // namespace horn
