// Acceptance suite: ten timed end-to-end criteria, one PASS/FAIL line each.
// Exit code is the number of failed criteria, so 0 means full acceptance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>
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
#include "test_util.hpp"

using namespace horn;
using testutil::randomOffBaseLocus;
using testutil::randomTorusVector;
using testutil::randomZeroColsumB;
using testutil::sameRowLattice;

namespace {

int failures = 0;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

double secondsSince(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(const std::string& name, double limitSec, const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string err;
  try {
    body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const double dt = secondsSince(t0);
  const bool ok = err.empty() && dt < limitSec;
  if (!ok) ++failures;
  std::printf("%s  %-52s (%.3f s, limit %g s)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), dt,
              limitSec, err.empty() ? "" : " -- ", err.c_str());
  std::fflush(stdout);
}

MultiPoly circleCurve() {
  MultiPoly f(2);
  f.addTerm({2, 0}, 1);
  f.addTerm({0, 2}, 1);
  f.addTerm({0, 0}, -1);
  return f;
}

MultiPoly lineCurve() {
  MultiPoly f(2);
  f.addTerm({1, 0}, 1);
  f.addTerm({0, 1}, 1);
  f.addTerm({0, 0}, -1);
  return f;
}

// p1 - (p2 + 1)^2, the curve swept out by the degree-one parabola model
MultiPoly parabolaCurve() {
  MultiPoly f(2);
  f.addTerm({1, 0}, 1);
  f.addTerm({0, 2}, -1);
  f.addTerm({0, 1}, -2);
  f.addTerm({0, 0}, -1);
  return f;
}

RatVector independenceOracle(const IntVector& u) {
  const Rat r0 = Rat(u(0)) + Rat(u(1)), r1 = Rat(u(2)) + Rat(u(3));
  const Rat c0 = Rat(u(0)) + Rat(u(2)), c1 = Rat(u(1)) + Rat(u(3));
  const Rat tot = r0 + r1;
  RatVector p(4);
  p(0) = r0 * c0 / (tot * tot);
  p(1) = r0 * c1 / (tot * tot);
  p(2) = r1 * c0 / (tot * tot);
  p(3) = r1 * c1 / (tot * tot);
  return p;
}

// kernel parameter for a configuration, retried off the base locus
RatVector sampleKernelParam(const PointConfig& P, Rng& rng) {
  const Index dim = P.B.cols();
  for (int tries = 0; tries < 5000; ++tries) {
    RatVector v(dim);
    for (Index i = 0; i < dim; ++i) v(i) = Rat(Int(rng.intIn(-9, 9)), Int(rng.intIn(1, 5)));
    const RatVector r = linearApply(P.B, v);
    bool ok = true;
    for (Index i = 0; i < r.size() && ok; ++i)
      if (r(i).isZero()) ok = false;
    if (ok) return v;
  }
  throw std::runtime_error("could not sample a kernel parameter off the base locus");
}

HornMap constantMapTwoRows(const RatVector& p) {
  const Index m = p.size();
  IntMatrix B(2, m);
  RatVector d(m);
  for (Index k = 0; k < m; ++k) {
    B(0, k) = Int(1);
    B(1, k) = Int(-1);
    d(k) = -p(k);
  }
  return makeHornMap(d, B);
}

HornMap constantMapThreeRows(const RatVector& p) {
  const Index m = p.size();
  IntMatrix B(3, m);
  RatVector d(m);
  for (Index k = 0; k < m; ++k) {
    B(0, k) = Int(1);
    B(1, k) = Int(2);
    B(2, k) = Int(-3);
    d(k) = Rat(-27, 4) * p(k);
  }
  return makeHornMap(d, B);
}

}  // namespace

int main() {
  std::printf("acceptance suite (library version %s, seed %lu)\n", kVersion,
              static_cast<unsigned long>(kDefaultSeed));

  criterion("01 circle curve has likelihood degree four", 1.0, [] {
    const MlDegreeReport rep = mlDegreePlane(circleCurve());
    require(rep.mlDegree == 4, "expected modal count 4, got " + std::to_string(rep.mlDegree));
    for (long c : rep.drawCounts)
      require(c == 4, "a data draw produced " + std::to_string(c) + " critical points");
    require(rep.unanimous, "draws disagree");
  });

  criterion("02 degree-one curves: line and parabola images", 2.0, [] {
    const auto t0 = std::chrono::steady_clock::now();
    const MlDegreeReport line = mlDegreePlane(lineCurve());
    require(secondsSince(t0) < 1.0, "line curve exceeded its one-second budget");
    require(line.mlDegree == 1,
            "line curve: expected count 1, got " + std::to_string(line.mlDegree));
    require(line.unanimous, "line curve draws disagree");

    const auto t1 = std::chrono::steady_clock::now();
    const MlDegreeReport par = mlDegreePlane(parabolaCurve());
    require(secondsSince(t1) < 1.0, "parabola curve exceeded its one-second budget");
    require(par.mlDegree == 1,
            "parabola curve: expected count 1, got " + std::to_string(par.mlDegree));
    require(par.unanimous, "parabola curve draws disagree");
  });

  criterion("03 independence estimator: closed form, 50-table oracle", 0.1, [] {
    const ModelSpec& M = findModel("independence");
    const IntVector u = intVec({4, 2, 3, 1});
    const RatVector p = estimate(M, makeCountVector(u));
    require(p == ratVec({Rat(21, 50), Rat(9, 50), Rat(7, 25), Rat(3, 25)}),
            "estimate differs from the published closed form");
    Rat sum(0);
    for (Index i = 0; i < 4; ++i) sum += p(i);
    require(sum == Rat(1), "estimate does not lie on the simplex");
    require((p(0) * p(3) - p(1) * p(2)).isZero(), "determinant equation does not vanish");
    require(certifyCriticality(M.horn, ratCast(u)).pass(), "criticality certificate failed");

    Rng rng(kDefaultSeed);
    for (int round = 0; round < 50; ++round) {
      IntVector w(4);
      for (Index i = 0; i < 4; ++i) w(i) = Int(rng.intIn(1, 200));
      require(estimate(M, makeCountVector(w)) == independenceOracle(w),
              "estimate differs from the marginal formula on a random table");
    }
  });

  criterion("04 criticality identities: 100 random maps, 5 points", 5.0, [] {
    Rng rng(kDefaultSeed);
    for (int it = 0; it < 100; ++it) {
      const Index m = rng.intIn(1, 6), n = rng.intIn(2, 8);
      const IntMatrix B = randomZeroColsumB(rng, n, m, 5);
      const HornMap H = makeHornMap(randomTorusVector(rng, m), B);
      for (int rep = 0; rep < 5; ++rep) {
        const RatVector u = randomOffBaseLocus(rng, B, -9, 9);
        const RatMatrix J = logJacobian(H, u);
        require(J == RatMatrix(J.transpose()), "log-Jacobian is not symmetric");
        require(certifyCriticality(H, u).pass(), "a criticality identity failed");
      }
    }
  });

  criterion("05 composition calculus: 100 random instances", 2.0, [] {
    Rng rng(kDefaultSeed);
    for (int it = 0; it < 100; ++it) {
      const Index n = rng.intIn(1, 5), m = rng.intIn(1, 4), l = rng.intIn(1, 4);
      const IntMatrix B = rng.intMatrix(n, m, -4, 4);
      const IntMatrix C = rng.intMatrix(m, l, -3, 3);
      const RatVector v = randomTorusVector(rng, l);
      const RatVector r = randomTorusVector(rng, n);
      const RatVector d = randomTorusVector(rng, m);
      require(checkCompositionIdentities(B, C, v, r, d, rng.u64()).pass(),
              "a composition identity failed");
    }
  });

  criterion("06 kernel duality: 50 round trips + factorization", 10.0, [] {
    Rng rng(kDefaultSeed);
    for (int it = 0; it < 50; ++it) {
      const Index n = rng.intIn(2, 7), m = rng.intIn(1, 4);
      const IntMatrix B = randomZeroColsumB(rng, n, m, 4);
      const GaleData G = galeFromB(B);
      require(verifyExactness(G).pass(), "duality certificate failed");
      const HornMap H = makeHornMap(randomTorusVector(rng, m), B);
      const HornMap Hsat =
          makeHornMap(RatVector(RatVector::Constant(G.Bsat.cols(), Rat(1))), G.Bsat);
      for (int rep = 0; rep < 5; ++rep) {
        const RatVector u = randomOffBaseLocus(rng, B, -9, 9);
        require(hornEval(H, u) ==
                    hadamard(H.d, monomialApply(G.C, hornEval(Hsat, linearApply(G.C, u)))),
                "the map does not factor through its saturated model");
      }
    }
    const GaleData G = galeFromB(testutil::independenceB());
    require(sameRowLattice(G.A, testutil::independenceA()),
            "computed configuration spans a different row lattice than the reference");
  });

  criterion("07 discriminants: quadratic, grouped marginals, cubic", 2.0, [] {
    MultiPoly quad(3);
    quad.addTerm({0, 2, 0}, 1);
    quad.addTerm({1, 0, 1}, -4);
    require(discriminantUnivariate(makePointConfig(intMat(2, 3, {1, 1, 1, 0, 1, 2}))) == quad,
            "quadratic discriminant is not b^2 - 4ac");

    // five coefficients with exponents (0,0,1,2,2): the middle one squared
    // minus four times (first + second) * (fourth + fifth), verbatim
    MultiPoly marg(5);
    marg.addTerm({0, 0, 2, 0, 0}, 1);
    marg.addTerm({1, 0, 0, 1, 0}, -4);
    marg.addTerm({1, 0, 0, 0, 1}, -4);
    marg.addTerm({0, 1, 0, 1, 0}, -4);
    marg.addTerm({0, 1, 0, 0, 1}, -4);
    const PointConfig M = makePointConfig(intMat(2, 5, {1, 1, 1, 1, 1, 0, 0, 1, 2, 2}));
    require(discriminantUnivariate(M) == marg,
            "grouped discriminant does not reproduce the marginal-sum polynomial");

    const PointConfig C = makePointConfig(intMat(2, 4, {1, 1, 1, 1, 0, 1, 2, 3}));
    const MultiPoly disc = discriminantUnivariate(C);
    Rng rng(kDefaultSeed);
    for (int round = 0; round < 20; ++round) {
      const RatVector v = sampleKernelParam(C, rng);
      const RatVector t = ratVec({Rat(Int(rng.nonzeroIntIn(-9, 9)), Int(rng.intIn(1, 5)))});
      require(disc.eval(singularPointParam(C, v, t)).isZero(),
              "cubic discriminant does not vanish on a singular family member");
    }
  });

  criterion("08 singular families: exactness at 20 parameters", 2.0, [] {
    const PointConfig P = makePointConfig(intMat(2, 5, {1, 1, 1, 1, 1, 0, 0, 1, 2, 2}));
    Rng rng(kDefaultSeed);
    for (int round = 0; round < 20; ++round) {
      const RatVector v = sampleKernelParam(P, rng);
      const RatVector t1 = ratVec({Rat(Int(rng.nonzeroIntIn(-9, 9)), Int(rng.intIn(1, 5)))});
      const RatVector t2 = ratVec({Rat(Int(rng.nonzeroIntIn(-9, 9)), Int(rng.intIn(1, 5)))});
      const RatVector q1 = singularPointParam(P, v, t1);
      require(verifySingularPoint(P, q1, t1).pass(),
              "family or derivative fails to vanish at the singular point");
      const RatVector q2 = singularPointParam(P, v, t2);
      require(monomialApply(P.B, q1) == monomialApply(P.B, q2),
              "kernel-torus image depends on the torus parameter");
      const Rat c = Rat(Int(rng.nonzeroIntIn(-9, 9)), Int(rng.intIn(1, 5)));
      require(reducedHornPoint(P, v) == reducedHornPoint(P, RatVector(v * c)),
              "kernel-torus image is not scale-invariant in the parameter");
    }
  });

  criterion("09 constant map: both presentations recognized equal", 0.5, [] {
    const RatVector p = ratVec({Rat(3), Rat(5, 2)});
    const auto R1 = recognize(presentAsFactored(constantMapTwoRows(p)));
    const auto R2 = recognize(presentAsFactored(constantMapThreeRows(p)));
    require(R1.has_value() && R2.has_value(), "a constant-map presentation was not recognized");
    require(R1->d == p && R2->d == p, "recognized constant differs from the target point");
    require(R1->n() == 0 && R2->n() == 0, "recognized map is not constant");
    require(semanticEq(*R1, *R2), "the two presentations disagree as maps");

    std::vector<FactoredComponent> comps(2);
    comps[0].constant = Rat(1);
    comps[0].factors = {{intVec({1, 0}), 1}, {intVec({0, 1}), -1}};
    comps[1] = comps[0];
    require(!recognize(makeFactoredMap(2, comps)).has_value(),
            "an asymmetric map was wrongly recognized");
  });

  criterion("10 pushforward diagram: 50 instances + rank guard", 2.0, [] {
    Rng rng(kDefaultSeed);
    for (int it = 0; it < 50; ++it) {
      const Index m = rng.intIn(1, 4), l = m + rng.intIn(0, 2), n = rng.intIn(2, 6);
      const IntMatrix B = randomZeroColsumB(rng, n, m, 4);
      const HornMap H = makeHornMap(randomTorusVector(rng, m), B);
      IntMatrix C;
      do {
        C = rng.intMatrix(m, l, -3, 3);
      } while (rank(C) != m);
      const HornMap Hp = pushforward(H, C);
      const IntMatrix BC = B * C;
      const RatVector v = randomOffBaseLocus(rng, BC, -9, 9);
      require(hornEval(Hp, v) == monomialApply(C, hornEval(H, linearApply(C, v))),
              "pushforward disagrees with reparametrized evaluation");
    }
    const HornMap H = makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1}));
    try {
      pushforward(H, intMat(2, 2, {1, 1, 1, 1}));
      require(false, "rank-deficient reparametrization was accepted");
    } catch (const InputError&) {
    }
  });

  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
