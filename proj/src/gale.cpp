#include "horn/gale.hpp"

#include <cassert>
#include <string>

#include "horn/errors.hpp"
#include "horn/lattice.hpp"

namespace horn {

GaleData galeFromB(const IntMatrix& B) {
  const Index n = B.rows();
  if (isZero(B)) throw InputError("galeFromB: B must be nonzero");
  for (Index k = 0; k < B.cols(); ++k) {
    Int s(0);
    for (Index i = 0; i < n; ++i) s += B(i, k);
    if (!s.isZero())
      throw InputError("galeFromB: column " + std::to_string(k) + " of B sums to " + s.str() +
                       ", expected 0");
  }

  GaleData G;
  G.B = B;
  auto sat = saturateColumnSpan(B);
  G.Bsat = sat.basis;
  G.C = sat.coords;

  // Left kernel of Bsat, with the all-ones row first.  Zero column sums put
  // (1,...,1) in the kernel; it is primitive, so the completion cannot fail.
  const IntMatrix L = leftKernelBasis(G.Bsat);
  const Index k = L.rows();
  assert(k >= 1);
  const IntVector ones = IntVector::Constant(n, Int(1));
  const IntMatrix basis = extendPrimitiveToBasis(L.transpose(), ones).transpose();

  // Canonicalize the complement: clear the first coordinate of every other
  // row (they then span {v in kernel : v_1 = 0}), and HNF-reduce those rows.
  IntMatrix rest(k - 1, n);
  for (Index i = 1; i < k; ++i) rest.row(i - 1) = basis.row(i) - basis(i, 0) * basis.row(0);
  const IntMatrix restHnf = hnfRowLattice(rest);
  assert(restHnf.rows() == k - 1);
  G.A = IntMatrix(k, n);
  G.A.row(0) = ones.transpose();
  G.A.bottomRows(k - 1) = restHnf;
  return G;
}

IntMatrix kernelGale(const IntMatrix& A) {
  const Index n = A.cols();
  for (Index j = 0; j < n; ++j)
    if (!(A(0, j) == Int(1)))
      throw InputError("kernelGale: first row of A must be all ones");
  if (!isPrimitiveLattice(A))
    throw InputError("kernelGale: columns of A must generate the full integer lattice");
  return rightKernelBasis(A);
}

Certificate verifyExactness(const GaleData& G) {
  Certificate cert;
  const Index n = G.n(), k = G.k(), nk = G.Bsat.cols();

  cert.add("shape_consistency",
           G.Bsat.rows() == n && G.C.rows() == nk && G.C.cols() == G.m() && G.A.cols() == n,
           "B " + std::to_string(n) + "x" + std::to_string(G.m()) + ", Bsat " +
               std::to_string(G.Bsat.rows()) + "x" + std::to_string(nk) + ", C " +
               std::to_string(G.C.rows()) + "x" + std::to_string(G.C.cols()) + ", A " +
               std::to_string(k) + "x" + std::to_string(G.A.cols()));
  if (!cert.pass()) return cert;  // remaining products would be malformed

  cert.add("A_times_B_zero", isZero(G.A * G.B));
  cert.add("A_times_Bsat_zero", isZero(G.A * G.Bsat));
  cert.add("B_factors_through_saturation", G.Bsat * G.C == G.B);

  bool ones = true;
  for (Index j = 0; j < n; ++j)
    if (!(G.A(0, j) == Int(1))) ones = false;
  cert.add("A_first_row_all_ones", ones);

  bool colSums = true;
  for (Index j = 0; j < nk; ++j) {
    Int s(0);
    for (Index i = 0; i < n; ++i) s += G.Bsat(i, j);
    if (!s.isZero()) colSums = false;
  }
  cert.add("Bsat_columns_sum_zero", colSums);

  cert.add("A_generates_full_lattice", isPrimitiveLattice(G.A));
  cert.add("Bsat_saturated", isPrimitiveLattice(G.Bsat));
  cert.add("Bsat_full_rank", rank(G.Bsat) == nk,
           "rank " + std::to_string(rank(G.Bsat)) + " of " + std::to_string(nk));
  cert.add("rank_additivity", k + nk == n,
           std::to_string(k) + " + " + std::to_string(nk) + " vs n = " + std::to_string(n));
  return cert;
}

}  // namespace horn
