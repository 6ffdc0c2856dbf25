#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <horn/certificate.hpp>
#include <horn/horn_map.hpp>
#include <horn/poly.hpp>
#include <horn/types.hpp>
#include <horn/version.hpp>

namespace horn {

// g = u2 p1 df/dp1 - u1 p2 df/dp2.  Together with f itself this cuts out the
// critical points of u1 log p1 + u2 log p2 on the curve {f = 0} in the
// 2-torus: the gradient of the log-likelihood is proportional to u exactly
// when g vanishes.
std::pair<MultiPoly, MultiPoly> criticalSystem(const MultiPoly& f, long u1, long u2);

// All complex roots of the dense coefficient list a[0] + a[1] t + ... by
// simultaneous Aberth iteration from a deterministic seeded start.  Roots are
// accepted when |p(z)| <= tol * norm1(p) * max(1, |z|)^deg and returned sorted
// by real then imaginary part.
std::vector<std::complex<double>> rootsFromCoeffs(const std::vector<std::complex<double>>& coeffs,
                                                  double tol, unsigned long seed);

// Root finding for a univariate polynomial value (at most one active
// variable); a nonzero constant has an empty root set.
std::vector<std::complex<double>> complexRoots(const MultiPoly& a, double tol = 1e-10,
                                               unsigned long seed = kDefaultSeed);

// Numeric evaluation of a polynomial at a complex point.
std::complex<double> evalComplex(const MultiPoly& p, const std::vector<std::complex<double>>& z);

struct CriticalPoint {
  std::complex<double> p1, p2;
  double fResidual, gResidual;  // scaled residuals after one Newton step
};

struct MlDegreeReport {
  long mlDegree = 0;                      // modal critical-point count
  std::vector<std::array<long, 2>> draws; // the sampled data vectors
  std::vector<long> drawCounts;           // critical-point count per draw
  long agreeing = 0;                      // draws attaining the modal count
  bool unanimous = false;
  std::vector<CriticalPoint> solutions;   // from the first modal draw
};

// Critical-point count of the log-likelihood on {f = 0} in the 2-torus for
// `trials` seeded random data vectors, counted by resultant elimination and
// root pairing; the modal count is returned and disagreement across draws is
// reported.  `eliminate` picks which variable the resultant removes first;
// `pairTol` is the relative tolerance for accepting, pairing, and
// deduplicating numeric critical points.
MlDegreeReport mlDegreePlane(const MultiPoly& f, unsigned long seed = kDefaultSeed,
                             Index eliminate = 1, long trials = 5, double pairTol = 1e-6);

// For a map with a two-dimensional image claimed to parametrize {f = 0}:
// checks exactly, at seeded data vectors u, that the image lies in the curve
// and satisfies the critical equation for the same u, and numerically that the
// curve has maximum likelihood degree one.
Certificate crossCheckHorn(const HornMap& H, const MultiPoly& f,
                           unsigned long seed = kDefaultSeed);

}  // namespace horn
