#include <horn/mldeg.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include <horn/rng.hpp>
#include <horn/scalar.hpp>

namespace horn {

using Cx = std::complex<double>;

namespace {

constexpr double kPairTol = 1e-6;    // pairing / zero / smoothness thresholds
constexpr double kRootTol = 1e-10;   // accepted root residual
constexpr double kPolishTol = 1e-8;  // residual bound after one Newton step

Cx powCx(Cx z, long e) {
  Cx out = 1;
  while (e > 0) {
    if (e & 1) out *= z;
    z *= z;
    e >>= 1;
  }
  return out;
}

double oneNorm(const MultiPoly& p) {
  double s = 0;
  for (const auto& [e, c] : p.terms()) s += std::abs(c.toDouble());
  return s;
}

// |p(z)| / (norm1 * max coordinate^deg): bounded by 1, insensitive to scaling
// of either the polynomial or the point.
double relResidual(const MultiPoly& p, double norm1, const std::vector<Cx>& z) {
  if (p.isZero()) return 0;
  double m = 1;
  for (const Cx& zi : z) m = std::max(m, std::abs(zi));
  return std::abs(evalComplex(p, z)) / (std::max(norm1, 1e-300) * std::pow(m, p.totalDegree()));
}

// Exact squarefreeness, split into the univariate content and the primitive
// part: the content must have no repeated root and the primitive part must
// have a nonzero discriminant with respect to the second variable.
void requireSquarefree(const MultiPoly& f) {
  const auto coeffs = f.coefficientsIn(1);
  MultiPoly cont(f.vars());
  for (const MultiPoly& c : coeffs) {
    if (c.isZero()) continue;
    cont = cont.isZero() ? c : gcdUnivariate(cont, c);
  }
  if (cont.totalDegree() > 0 &&
      squarefreePart(cont).totalDegree() != cont.totalDegree())
    throw InputError("curve polynomial has a repeated factor");
  const MultiPoly prim = polyDivExact(f, cont);
  if (prim.degreeIn(1) >= 2 &&
      sylvesterResultant(prim, prim.partial(1), 1).isZero())
    throw InputError("curve polynomial has a repeated factor");
}

struct DrawSetup {
  const MultiPoly& f;
  const MultiPoly& g;
  MultiPoly f1, f2, g1, g2;  // partials
  double fNorm, gNorm, f1Norm, f2Norm;
};

std::vector<Cx> pointAt(Index keep, Cx alpha, Cx beta) {
  // place the kept coordinate and the solved coordinate into (p1, p2)
  std::vector<Cx> z(2);
  z[keep] = alpha;
  z[1 - keep] = beta;
  return z;
}

// Dense complex coefficients of s viewed as a polynomial in `solve` with the
// other coordinate frozen at alpha; near-zero leading entries are stripped.
std::vector<Cx> frozenCoeffs(const MultiPoly& s, Index solve, Index keep, Cx alpha) {
  std::vector<Cx> out;
  for (const MultiPoly& c : s.coefficientsIn(solve))
    out.push_back(evalComplex(c, pointAt(keep, alpha, 0)));
  double m = 0;
  for (const Cx& c : out) m = std::max(m, std::abs(c));
  while (!out.empty() && std::abs(out.back()) <= 1e-12 * std::max(1.0, m)) out.pop_back();
  return out;
}

// One Newton step on the square system (f, g), then a strict residual check.
bool polish(const DrawSetup& d, std::vector<Cx>& z) {
  const Cx a = evalComplex(d.f1, z), b = evalComplex(d.f2, z);
  const Cx c = evalComplex(d.g1, z), e = evalComplex(d.g2, z);
  const Cx det = a * e - b * c;
  if (std::abs(det) > 1e-300) {
    const Cx fv = evalComplex(d.f, z), gv = evalComplex(d.g, z);
    const Cx d1 = (fv * e - b * gv) / det, d2 = (a * gv - fv * c) / det;
    z[0] -= d1;
    z[1] -= d2;
  }
  return relResidual(d.f, d.fNorm, z) < kPolishTol && relResidual(d.g, d.gNorm, z) < kPolishTol;
}

std::vector<CriticalPoint> solveDraw(const DrawSetup& d, Index eliminate, unsigned long seed,
                                     double pairTol) {
  const Index keep = 1 - eliminate;

  // Eliminate one variable.  When f or g does not involve it, the resultant
  // degenerates: a curve with no dependence on the eliminated coordinate has
  // its keep-values cut out by f itself, and the other equation is solved
  // along the fibers.
  MultiPoly elimPoly(2);
  const MultiPoly* fiber = &d.f;
  if (d.f.degreeIn(eliminate) < 1) {
    elimPoly = d.f;
    fiber = &d.g;
  } else if (d.g.degreeIn(eliminate) < 1) {
    elimPoly = d.g;
  } else {
    elimPoly = sylvesterResultant(d.f, d.g, eliminate);
  }
  if (elimPoly.isZero())
    throw Error("critical scheme is not finite: the eliminant vanishes identically");
  elimPoly = removeMonomialContent(elimPoly);
  if (elimPoly.totalDegree() < 1) return {};
  elimPoly = squarefreePart(elimPoly);

  Rng rng(seed);
  std::vector<CriticalPoint> kept;
  for (const Cx& alpha : complexRoots(elimPoly, kRootTol, rng.u64())) {
    if (std::abs(alpha) < pairTol) continue;
    const std::vector<Cx> coeffs = frozenCoeffs(*fiber, eliminate, keep, alpha);
    if (coeffs.size() <= 1) continue;
    for (const Cx& beta : rootsFromCoeffs(coeffs, kRootTol, rng.u64())) {
      if (std::abs(beta) < pairTol) continue;
      std::vector<Cx> z = pointAt(keep, alpha, beta);
      if (relResidual(d.f, d.fNorm, z) > pairTol) continue;
      if (relResidual(d.g, d.gNorm, z) > pairTol) continue;
      // singular points of the curve are not critical points
      if (std::max(relResidual(d.f1, d.f1Norm, z), relResidual(d.f2, d.f2Norm, z)) < pairTol)
        continue;
      if (!polish(d, z)) continue;
      kept.push_back({z[0], z[1], relResidual(d.f, d.fNorm, z), relResidual(d.g, d.gNorm, z)});
    }
  }

  // cluster-collapse numerically identical pairs, then order deterministically
  std::vector<CriticalPoint> out;
  for (const CriticalPoint& p : kept) {
    bool dup = false;
    for (const CriticalPoint& q : out) {
      const double scale = std::max({1.0, std::abs(p.p1), std::abs(p.p2)});
      if (std::abs(p.p1 - q.p1) < pairTol * scale && std::abs(p.p2 - q.p2) < pairTol * scale)
        dup = true;
    }
    if (!dup) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return std::make_tuple(a.p1.real(), a.p1.imag(), a.p2.real(), a.p2.imag()) <
           std::make_tuple(b.p1.real(), b.p1.imag(), b.p2.real(), b.p2.imag());
  });
  return out;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> criticalSystem(const MultiPoly& f, long u1, long u2) {
  if (f.vars() != 2) throw ShapeError("critical system needs a curve in two variables");
  if (f.totalDegree() < 1) throw InputError("curve polynomial must be non-constant");
  if (u1 == 0 || u2 == 0) throw InputError("data vector entries must be nonzero");
  const MultiPoly g = MultiPoly::variable(2, 0) * f.partial(0) * Rat(u2) +
                      MultiPoly::variable(2, 1) * f.partial(1) * Rat(-u1);
  return {f, g};
}

std::complex<double> evalComplex(const MultiPoly& p, const std::vector<Cx>& z) {
  if (static_cast<Index>(z.size()) != p.vars())
    throw ShapeError("evaluation point has wrong length");
  Cx acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Cx t = c.toDouble();
    for (size_t i = 0; i < e.size(); ++i) t *= powCx(z[i], e[i]);
    acc += t;
  }
  return acc;
}

std::vector<Cx> rootsFromCoeffs(const std::vector<Cx>& coeffs, double tol, unsigned long seed) {
  std::vector<Cx> a(coeffs);
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  if (a.empty()) throw InputError("zero polynomial has no well-defined root set");
  const long d = static_cast<long>(a.size()) - 1;
  if (d == 0) return {};
  for (long i = 0; i < d; ++i) a[i] /= a[d];
  a[d] = 1;
  std::vector<Cx> z(d);
  if (d == 1) {
    z[0] = -a[0];
    return z;
  }

  double radius = 0;
  for (long i = 0; i < d; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = 1 + radius;

  Rng rng(seed);
  const double phase = 6.283185307179586 * rng.real01();
  for (long i = 0; i < d; ++i) {
    const double angle = 6.283185307179586 * i / d + phase;
    const double r = radius * (0.55 + 0.4 * ((i * 7919) % 97) / 96.0);
    z[i] = Cx(r * std::cos(angle), r * std::sin(angle));
  }

  // scale: evaluation of sum |a_k| |x|^k, the standard backward-error unit
  const auto horner = [&](Cx x, Cx& val, Cx& der, double& scale) {
    val = a[d];
    der = 0;
    scale = 1;
    const double ax = std::abs(x);
    for (long i = d - 1; i >= 0; --i) {
      der = der * x + val;
      val = val * x + a[i];
      scale = scale * ax + std::abs(a[i]);
    }
  };

  double worst = 0;
  for (int iter = 0; iter < 400; ++iter) {
    worst = 0;
    for (long i = 0; i < d; ++i) {
      Cx val, der;
      double scale;
      horner(z[i], val, der, scale);
      worst = std::max(worst, std::abs(val) / std::max(scale, 1e-300));
    }
    if (worst <= tol) break;
    for (long i = 0; i < d; ++i) {
      Cx val, der;
      double scale;
      horner(z[i], val, der, scale);
      if (std::abs(val) == 0.0) continue;
      if (std::abs(der) < 1e-300) {
        z[i] += Cx(1e-6 * radius, 1e-6 * radius);
        continue;
      }
      const Cx w = val / der;
      Cx s = 0;
      for (long j = 0; j < d; ++j) {
        if (j == i) continue;
        Cx diff = z[i] - z[j];
        if (std::abs(diff) < 1e-300) diff = Cx(1e-12 * radius, 0);
        s += Cx(1, 0) / diff;
      }
      const Cx denom = Cx(1, 0) - w * s;
      z[i] -= std::abs(denom) < 1e-300 ? w : w / denom;
    }
  }
  if (worst > tol)
    throw ConvergenceError("root finding stalled at residual " + std::to_string(worst) +
                           " for degree " + std::to_string(d));
  std::sort(z.begin(), z.end(), [](const Cx& x, const Cx& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return z;
}

std::vector<Cx> complexRoots(const MultiPoly& a, double tol, unsigned long seed) {
  if (a.isZero()) throw InputError("zero polynomial has no well-defined root set");
  const Index v = a.soleVariable();
  if (v < 0) return {};
  std::vector<Cx> coeffs;
  for (const MultiPoly& c : a.coefficientsIn(v)) coeffs.emplace_back(c.constantValue().toDouble(), 0);
  return rootsFromCoeffs(coeffs, tol, seed);
}

MlDegreeReport mlDegreePlane(const MultiPoly& fIn, unsigned long seed, Index eliminate,
                             long trials, double pairTol) {
  if (fIn.vars() != 2) throw ShapeError("plane curve polynomial must have two variables");
  if (eliminate != 0 && eliminate != 1) throw InputError("eliminated variable must be 0 or 1");
  if (trials < 1) throw InputError("draw count must be positive");
  if (!(pairTol > 0)) throw InputError("pairing tolerance must be positive");
  const MultiPoly f = removeMonomialContent(fIn);
  if (f.terms().size() < 2)
    throw InputError("curve polynomial is a monomial: empty torus zero locus");
  requireSquarefree(f);

  Rng rng(seed);
  MlDegreeReport rep;
  std::vector<std::vector<CriticalPoint>> perDraw;
  for (long draw = 0; draw < trials; ++draw) {
    const long u1 = rng.intIn(1, 100), u2 = rng.intIn(1, 100);
    const MultiPoly g = criticalSystem(f, u1, u2).second;
    DrawSetup d{f,          g,          f.partial(0),     f.partial(1),
                g.partial(0), g.partial(1), 0, 0, 0, 0};
    d.fNorm = oneNorm(f);
    d.gNorm = oneNorm(g);
    d.f1Norm = oneNorm(d.f1);
    d.f2Norm = oneNorm(d.f2);
    perDraw.push_back(solveDraw(d, eliminate, rng.u64(), pairTol));
    rep.draws.push_back({u1, u2});
    rep.drawCounts.push_back(static_cast<long>(perDraw.back().size()));
  }

  std::map<long, long> freq;
  for (long c : rep.drawCounts) ++freq[c];
  long best = -1, bestFreq = 0;
  for (const auto& [count, times] : freq)
    if (times > bestFreq) {
      best = count;
      bestFreq = times;
    }
  if (trials > 1 && bestFreq <= 1) {
    std::string detail;
    for (long c : rep.drawCounts) detail += std::to_string(c) + " ";
    throw ConvergenceError("critical-point counts disagree across all draws: " + detail);
  }
  rep.mlDegree = best;
  rep.agreeing = bestFreq;
  rep.unanimous = freq.size() == 1;
  for (size_t i = 0; i < perDraw.size(); ++i)
    if (rep.drawCounts[i] == best) {
      rep.solutions = perDraw[i];
      break;
    }
  return rep;
}

Certificate crossCheckHorn(const HornMap& H, const MultiPoly& f, unsigned long seed) {
  if (H.m() != 2) throw ShapeError("cross-check needs a map with two components");
  if (f.vars() != 2) throw ShapeError("curve polynomial must have two variables");
  Certificate cert;
  Rng rng(seed);
  bool contained = true, critical = true;
  std::string containDetail, criticalDetail;
  int done = 0, tries = 0;
  while (done < 20 && tries < 4000) {
    ++tries;
    const long u1 = rng.intIn(1, 100), u2 = rng.intIn(1, 100);
    RatVector u(2);
    u(0) = Rat(u1);
    u(1) = Rat(u2);
    RatVector p;
    try {
      p = hornEval(H, u);
    } catch (const BaseLocusError&) {
      continue;
    }
    ++done;
    if (!f.eval(p).isZero() && contained) {
      contained = false;
      containDetail = "f != 0 at data vector (" + std::to_string(u1) + ", " + std::to_string(u2) + ")";
    }
    const MultiPoly g = criticalSystem(f, u1, u2).second;
    if (!g.eval(p).isZero() && critical) {
      critical = false;
      criticalDetail =
          "critical equation fails at data vector (" + std::to_string(u1) + ", " + std::to_string(u2) + ")";
    }
  }
  cert.add("image_in_curve", contained && done == 20,
           done == 20 ? containDetail : "only " + std::to_string(done) + " samples evaluated");
  cert.add("estimator_critical", critical && done == 20,
           done == 20 ? criticalDetail : "only " + std::to_string(done) + " samples evaluated");
  const MlDegreeReport rep = mlDegreePlane(f, seed);
  cert.add("ml_degree_one", rep.mlDegree == 1, "computed " + std::to_string(rep.mlDegree));
  return cert;
}

}  // namespace horn
