#include <horn/adisc.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <horn/gale.hpp>
#include <horn/monomial.hpp>
#include <horn/rng.hpp>
#include <horn/scalar.hpp>

namespace horn {
namespace {

// Full torus point (1, tRest), rejecting zero coordinates.
RatVector torusPoint(const PointConfig& P, const RatVector& tRest) {
  if (tRest.size() != P.k() - 1)
    throw ShapeError("torus point needs one coordinate per non-homogeneous row");
  RatVector t(P.k());
  t(0) = 1;
  for (Index j = 1; j < P.k(); ++j) {
    if (tRest(j - 1).isZero()) throw InputError("torus point has a zero coordinate");
    t(j) = tRest(j - 1);
  }
  return t;
}

// t^{w_i} for column i of A.
Rat columnMonomial(const RatVector& t, const IntMatrix& A, Index i) {
  Rat out = 1;
  for (Index j = 0; j < t.size(); ++j) out = out * pow(t(j), A(j, i));
  return out;
}

RatVector kernelImage(const PointConfig& P, const RatVector& v) {
  if (v.size() != P.n() - P.k())
    throw ShapeError("kernel coordinate vector has wrong length");
  RatVector r = linearApply(P.B, v);
  for (Index i = 0; i < P.n(); ++i)
    if (r(i).isZero())
      throw BaseLocusError("kernel point lies on the base locus at coordinate " +
                           std::to_string(i));
  return r;
}

// A univariate restriction along a random line certifies squarefreeness: if
// the restriction keeps the full total degree and has no repeated root, no
// square can divide the polynomial.
bool squarefreeOnLine(const MultiPoly& p, Rng& rng) {
  std::vector<MultiPoly> images;
  images.reserve(p.vars());
  for (Index j = 0; j < p.vars(); ++j) {
    MultiPoly line = MultiPoly::constant(1, Rat(rng.intIn(-9, 9)));
    line.addTerm({1}, Rat(rng.nonzeroIntIn(-9, 9)));
    images.push_back(line);
  }
  const MultiPoly r = p.substitute(images, 1);
  if (r.totalDegree() != p.totalDegree()) return false;
  return squarefreePart(r).totalDegree() == r.totalDegree();
}

}  // namespace

PointConfig makePointConfig(IntMatrix A) {
  IntMatrix B = kernelGale(A);  // validates the all-ones row and primitivity
  return PointConfig{std::move(A), std::move(B)};
}

RatVector singularPointParam(const PointConfig& P, const RatVector& v,
                             const RatVector& tRest) {
  const RatVector t = torusPoint(P, tRest);
  const RatVector r = kernelImage(P, v);
  RatVector q(P.n());
  for (Index i = 0; i < P.n(); ++i) q(i) = r(i) / columnMonomial(t, P.A, i);
  return q;
}

Certificate verifySingularPoint(const PointConfig& P, const RatVector& q,
                                const RatVector& tRest) {
  if (q.size() != P.n()) throw ShapeError("coefficient vector has wrong length");
  const RatVector t = torusPoint(P, tRest);
  Certificate cert;
  Rat family = 0;
  for (Index i = 0; i < P.n(); ++i) family = family + q(i) * columnMonomial(t, P.A, i);
  cert.add("family_vanishes", family.isZero(), family.isZero() ? "" : "value " + family.str());
  for (Index j = 1; j < P.k(); ++j) {
    Rat acc = 0;
    for (Index i = 0; i < P.n(); ++i)
      acc = acc + Rat(P.A(j, i)) * q(i) * columnMonomial(t, P.A, i);
    cert.add("log_derivative_vanishes_row_" + std::to_string(j), acc.isZero(),
             acc.isZero() ? "" : "value " + acc.str());
  }
  return cert;
}

RatVector reducedHornPoint(const PointConfig& P, const RatVector& v) {
  return monomialApply(P.B, kernelImage(P, v));
}

MultiPoly discriminantUnivariate(const PointConfig& P) {
  if (P.k() != 2) throw InputError("explicit discriminants cover one-variable families only");
  const Index n = P.n();

  // Translate exponents so the smallest is zero and group repeated columns.
  long shift = P.A(1, 0).toLong();
  for (Index i = 1; i < n; ++i) shift = std::min(shift, P.A(1, i).toLong());
  std::map<long, std::vector<Index>> groups;
  for (Index i = 0; i < n; ++i) groups[P.A(1, i).toLong() - shift].push_back(i);
  const Index s = static_cast<Index>(groups.size());
  const long deg = groups.rbegin()->first;
  if (deg <= 1) return MultiPoly::constant(n, 1);

  // Grouped family in coefficient variables 0..s-1 and root variable s.
  MultiPoly family(s + 1);
  Index g = 0;
  for (const auto& [e, cols] : groups) {
    Exponents mono(static_cast<size_t>(s) + 1, 0);
    mono[g] = 1;
    mono[s] = e;
    family.addTerm(mono, 1);
    ++g;
  }

  const MultiPoly res = sylvesterResultant(family, family.partial(s), s);
  const Rat sign = (deg * (deg - 1) / 2) % 2 == 0 ? 1 : -1;
  MultiPoly disc = polyDivExact(res, MultiPoly::variable(s + 1, s - 1)) * sign;
  disc = integerPrimitivePart(removeMonomialContent(disc));
  if (disc.totalDegree() <= 0) return MultiPoly::constant(n, 1);

  // The monomial-stripped primitive resultant must itself be squarefree; a
  // full-degree squarefree line restriction proves it.  Grouping substitutes
  // independent variables, which preserves squarefreeness.
  Rng rng(kDefaultSeed);
  bool squarefree = false;
  for (int attempt = 0; attempt < 5 && !squarefree; ++attempt)
    squarefree = squarefreeOnLine(disc, rng);
  if (!squarefree) throw Error("discriminant resultant has a repeated factor");

  std::vector<MultiPoly> images;
  images.reserve(static_cast<size_t>(s) + 1);
  for (const auto& [e, cols] : groups) {
    MultiPoly sum(n);
    for (Index i : cols) sum = sum + MultiPoly::variable(n, i);
    images.push_back(sum);
  }
  images.push_back(MultiPoly::constant(n, 0));  // root variable is eliminated
  return integerPrimitivePart(disc.substitute(images, n));
}

}  // namespace horn
