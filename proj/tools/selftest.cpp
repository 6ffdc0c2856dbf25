#include "selftest.hpp"

#include <functional>
#include <string>

#include "horn/adisc.hpp"
#include "horn/gale.hpp"
#include "horn/horn_map.hpp"
#include "horn/lattice.hpp"
#include "horn/mldeg.hpp"
#include "horn/mle.hpp"
#include "horn/monomial.hpp"
#include "horn/poly.hpp"
#include "horn/rng.hpp"
#include "horn/types.hpp"

namespace horn {

namespace {

void run(Certificate& cert, const std::string& name, const std::function<bool()>& body) {
  try {
    cert.add(name, body());
  } catch (const std::exception& e) {
    cert.add(name, false, e.what());
  }
}

// Expects `body` itself to throw; the check passes exactly when it does.
void runThrows(Certificate& cert, const std::string& name, const std::function<void()>& body) {
  try {
    body();
    cert.add(name, false, "expected an error, none was raised");
  } catch (const Error&) {
    cert.add(name, true);
  } catch (const std::exception& e) {
    cert.add(name, false, e.what());
  }
}

IntMatrix identity(Index n) {
  IntMatrix I(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) I(i, j) = Int(i == j ? 1 : 0);
  return I;
}

MultiPoly circle() {
  MultiPoly f(2);
  f.addTerm({2, 0}, 1);
  f.addTerm({0, 2}, 1);
  f.addTerm({0, 0}, -1);
  return f;
}

bool nearCx(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-8; }

}  // namespace

Certificate runSelftest(unsigned long seed) {
  Certificate cert;
  Rng rng(seed);

  // --- integer lattice kernels and normal forms ---
  run(cert, "hnf_identity", [&] {
    const HnfResult r = hnf(identity(3));
    return r.H == identity(3) && r.U == identity(3);
  });
  run(cert, "hnf_zero", [&] {
    IntMatrix Z(2, 2);
    Z.setConstant(Int(0));
    const HnfResult r = hnf(Z);
    return r.H == Z && r.U == identity(2);
  });
  run(cert, "snf_identity", [&] {
    const SnfResult r = snf(identity(3));
    return r.S == identity(3) && r.U == identity(3) && r.V == identity(3);
  });
  run(cert, "right_kernel_row_of_ones", [&] {
    const IntMatrix K = rightKernelBasis(intMat(1, 2, {1, 1}));
    if (K.rows() != 2 || K.cols() != 1) return false;
    return abs(K(0, 0)) == Int(1) && K(0, 0) + K(1, 0) == Int(0);
  });
  run(cert, "right_kernel_identity_empty", [&] {
    return rightKernelBasis(identity(3)).cols() == 0;
  });
  run(cert, "left_kernel_two_point_column", [&] {
    return leftKernelBasis(intMat(2, 1, {1, -1})) == intMat(1, 2, {1, 1});
  });
  run(cert, "saturation_idempotent", [&] {
    const IntMatrix M = intMat(3, 2, {2, 0, 0, 2, -2, -2});
    const SaturationResult s1 = saturateColumnSpan(M);
    const SaturationResult s2 = saturateColumnSpan(s1.basis);
    return hnfColumnLattice(s1.basis) == hnfColumnLattice(s2.basis) && s1.basis * s1.coords == M;
  });
  run(cert, "basis_extension_keeps_first_column", [&] {
    const IntMatrix L = intMat(3, 2, {1, 0, 2, 1, 0, 3});
    const IntVector w = L.col(0);
    const IntMatrix E = extendPrimitiveToBasis(L, w);
    return E.col(0) == w && hnfColumnLattice(E) == hnfColumnLattice(L);
  });
  runThrows(cert, "basis_extension_rejects_imprimitive", [&] {
    const IntMatrix L = intMat(3, 2, {1, 0, 2, 1, 0, 3});
    extendPrimitiveToBasis(L, IntVector(L.col(0) * Int(2)));
  });
  run(cert, "determinant_known_values", [&] {
    return detBareiss(identity(4)) == Int(1) &&
           detBareiss(intMat(2, 2, {1, 2, 3, 4})) == Int(-2);
  });

  // --- polynomial ring ---
  run(cert, "poly_additive_inverse", [&] { return (circle() + (-circle())).isZero(); });
  run(cert, "poly_difference_of_squares", [&] {
    const MultiPoly p1 = MultiPoly::variable(2, 0), p2 = MultiPoly::variable(2, 1);
    return (p1 + p2) * (p1 - p2) == p1 * p1 - p2 * p2;
  });
  run(cert, "poly_eval_on_circle", [&] {
    return circle().eval(ratVec({Rat(3, 5), Rat(4, 5)})).isZero();
  });
  run(cert, "poly_partials", [&] {
    const MultiPoly p1 = MultiPoly::variable(2, 0), p2 = MultiPoly::variable(2, 1);
    MultiPoly cubic(2);
    cubic.addTerm({3, 1}, 1);
    return circle().partial(0) == p1 * Rat(2) &&
           MultiPoly::constant(2, 5).partial(0).isZero() &&
           cubic.partial(1) == p1 * p1 * p1;
  });
  run(cert, "univariate_gcd_and_squarefree", [&] {
    const MultiPoly t = MultiPoly::variable(1, 0);
    const MultiPoly tm1 = t - MultiPoly::constant(1, 1);
    const MultiPoly tm2 = t - MultiPoly::constant(1, 2);
    return gcdUnivariate(t * t - MultiPoly::constant(1, 1), tm1) == tm1 &&
           squarefreePart(tm2 * tm2 * tm2) == tm2;
  });
  run(cert, "resultant_of_two_linear", [&] {
    // ring (t, a, b): Res_t(t - a, t - b) = +/-(b - a)
    const MultiPoly t = MultiPoly::variable(3, 0);
    const MultiPoly a = MultiPoly::variable(3, 1);
    const MultiPoly b = MultiPoly::variable(3, 2);
    const MultiPoly r = sylvesterResultant(t - a, t - b, 0);
    return r == b - a || r == a - b;
  });

  // --- scaled linear-form power maps ---
  run(cert, "constant_map_value_and_flat_jacobian", [&] {
    const HornMap H = makeHornMap(ratVec({5}), intMat(2, 1, {1, -1}));
    const RatVector u = ratVec({3});
    return hornEval(H, u) == ratVec({-5}) && logJacobian(H, u)(0, 0).isZero() &&
           certifyCriticality(H, u).pass();
  });
  run(cert, "log_jacobian_symmetric_random", [&] {
    IntMatrix B(4, 3);
    do {
      for (Index k = 0; k < 3; ++k) {
        Int s(0);
        for (Index i = 0; i < 3; ++i) {
          B(i, k) = Int(rng.intIn(-4, 4));
          s += B(i, k);
        }
        B(3, k) = -s;
      }
    } while (isZero(B));
    RatVector d(3), u(3);
    for (Index i = 0; i < 3; ++i) d(i) = Rat(Int(rng.nonzeroIntIn(-9, 9)));
    for (int tries = 0;; ++tries) {
      for (Index i = 0; i < 3; ++i) u(i) = Rat(Int(rng.intIn(1, 50)));
      const RatVector w = linearApply(B, u);
      bool ok = true;
      for (Index i = 0; i < 4; ++i)
        if (w(i).isZero() && !isZero(IntVector(B.row(i)))) ok = false;
      if (ok || tries > 100) break;
    }
    const HornMap H = makeHornMap(d, B);
    const RatMatrix J = logJacobian(H, u);
    return J == RatMatrix(J.transpose()) && certifyCriticality(H, u).pass();
  });
  run(cert, "pushforward_identity_preserves_map", [&] {
    const HornMap H = makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1}));
    HornMap doubled = H;
    doubled.d = RatVector(H.d * Rat(2));
    return semanticEq(H, pushforward(H, identity(2)), seed) && !semanticEq(H, doubled, seed);
  });
  run(cert, "pushforward_commutes_with_reparametrization", [&] {
    const HornMap H = makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1}));
    const IntMatrix C = intMat(2, 3, {1, 0, 1, 0, 1, 1});
    const RatVector v = ratVec({3, 2, 1});
    const HornMap Hp = pushforward(H, C);
    return hornEval(Hp, v) == monomialApply(C, hornEval(H, linearApply(C, v)));
  });

  // --- monomial / linear / scaling calculus ---
  run(cert, "monomial_identity_exponents", [&] {
    const RatVector p = ratVec({2, 3});
    return monomialApply(identity(2), p) == p && monomialApply(intMat(2, 1, {1, 1}), p) == ratVec({6});
  });
  run(cert, "linear_apply_zero_and_identity", [&] {
    const RatVector z = ratVec({0, 0});
    const RatVector p = ratVec({5, -7});
    return linearApply(identity(2), p) == p && linearApply(intMat(2, 2, {1, 2, 3, 4}), z) == z;
  });
  run(cert, "hadamard_units_and_inverses", [&] {
    const RatVector a = ratVec({2, 3});
    return hadamard(a, ratVec({1, 1})) == a &&
           hadamard(a, ratVec({Rat(1, 2), Rat(1, 3)})) == ratVec({1, 1});
  });
  run(cert, "composition_calculus_random", [&] {
    const IntMatrix B = intMat(3, 2, {1, 0, 0, 1, -1, -1});
    const IntMatrix C = intMat(2, 2, {1, 1, 0, 1});
    const RatVector v = ratVec({2, 3});
    const RatVector r = ratVec({2, 3, 5});
    const RatVector d = ratVec({7, Rat(1, 2)});
    return checkCompositionIdentities(B, C, v, r, d, seed).pass();
  });

  // --- kernel duality ---
  run(cert, "duality_two_point_fixture", [&] {
    const GaleData G = galeFromB(intMat(2, 1, {1, -1}));
    return verifyExactness(G).pass() && G.A == intMat(1, 2, {1, 1}) &&
           hnfColumnLattice(G.Bsat) == hnfColumnLattice(intMat(2, 1, {1, -1}));
  });
  run(cert, "kernel_of_ones_row", [&] {
    const IntMatrix K = kernelGale(intMat(1, 2, {1, 1}));
    if (K.rows() != 2 || K.cols() != 1) return false;
    return abs(K(0, 0)) == Int(1) && K(0, 0) + K(1, 0) == Int(0);
  });

  // --- singular-point families ---
  run(cert, "single_row_family_sums_to_zero", [&] {
    const PointConfig P = makePointConfig(intMat(1, 3, {1, 1, 1}));
    const RatVector v = ratVec({2, -5});
    const RatVector q = singularPointParam(P, v, RatVector(0));
    Rat sum(0);
    for (Index i = 0; i < q.size(); ++i) sum += q(i);
    return sum.isZero() && verifySingularPoint(P, q, RatVector(0)).pass();
  });
  run(cert, "reduced_point_ignores_torus_factor", [&] {
    const PointConfig P = makePointConfig(intMat(2, 5, {1, 1, 1, 1, 1, 0, 0, 1, 2, 2}));
    // small kernel parameters until one misses the base locus
    for (long a = 1; a <= 9; ++a) {
      const RatVector v = ratVec({Rat(a), Rat(2 * a + 1), Rat(3)});
      try {
        const RatVector q1 = singularPointParam(P, v, ratVec({2}));
        const RatVector q2 = singularPointParam(P, v, ratVec({Rat(-3, 7)}));
        return monomialApply(P.B, q1) == monomialApply(P.B, q2) &&
               reducedHornPoint(P, v) == reducedHornPoint(P, RatVector(v * Rat(2)));
      } catch (const BaseLocusError&) {
        continue;
      }
    }
    return false;
  });

  // --- numeric roots ---
  run(cert, "roots_of_quadratics", [&] {
    const MultiPoly t = MultiPoly::variable(1, 0);
    const auto r1 = complexRoots(t * t - MultiPoly::constant(1, 1), 1e-10, seed);
    const auto r2 = complexRoots(t * t + MultiPoly::constant(1, 1), 1e-10, seed);
    if (r1.size() != 2 || r2.size() != 2) return false;
    const std::complex<double> i(0, 1);
    const bool realPair = nearCx(r1[0], {-1, 0}) && nearCx(r1[1], {1, 0});
    const bool imagPair = (nearCx(r2[0], i) && nearCx(r2[1], -i)) ||
                          (nearCx(r2[0], -i) && nearCx(r2[1], i));
    return realPair && imagPair;
  });

  // --- closed-form estimators ---
  run(cert, "uniform_counts_uniform_estimate", [&] {
    const ModelSpec& M = findModel("independence");
    const RatVector p = estimate(M, makeCountVector(intVec({1, 1, 1, 1})));
    for (Index i = 0; i < 4; ++i)
      if (p(i) != Rat(1, 4)) return false;
    return true;
  });
  run(cert, "uniform_estimate_dominates_samples", [&] {
    const ModelSpec& M = findModel("independence");
    const CountVector u = makeCountVector(intVec({1, 1, 1, 1}));
    return loglikCompare(M, u, estimate(M, u), seed).pass();
  });

  return cert;
}

}  // namespace horn
