#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "horn/certificate.hpp"
#include "horn/types.hpp"
#include "horn/version.hpp"

namespace horn {

// The map Psi(u) = d o (Bu)^B from the u-space torus (projectively) to the
// m-torus: Psi_k(u) = d_k * prod_i (sum_j b_ij u_j)^(b_ik).  The fields are
// public so tests can build deliberately broken instances; makeHornMap is
// the validating constructor.
struct HornMap {
  RatVector d;  // length m, all entries nonzero
  IntMatrix B;  // n x m, every column sums to zero

  Index m() const { return B.cols(); }
  Index n() const { return B.rows(); }
};

// Validates the invariants (shape, nonzero d, zero column sums) and throws
// InputError with a description of the first violation.
HornMap makeHornMap(RatVector d, IntMatrix B);

// Per-invariant report used by makeHornMap and the CLI.
Certificate validateHornMap(const RatVector& d, const IntMatrix& B);

// Exact evaluation.  Identically-zero rows of B contribute the factor 1
// (zero to the power zero); a zero value of any other row is a base-locus
// error naming the offending linear form, as is u = 0.
RatVector hornEval(const HornMap& H, const RatVector& u);

// The m x m matrix J with J_kj = d log Psi_k / du_j = sum_i b_ik b_ij/(Bu)_i.
RatMatrix logJacobian(const HornMap& H, const RatVector& u);

// Exact checks that the evaluation point is critical for its own likelihood:
// J symmetric, J^T u = 0, and J u = 0 (Euler's relation).  All three hold
// identically for a genuine HornMap; corrupted column sums break the last two.
Certificate certifyCriticality(const HornMap& H, const RatVector& u);

// A coordinate map presented as scaled products of powers of linear forms:
// component_k(u) = constant_k * prod_i (coeffs_i . u)^(exponent_i).
struct LinearFactor {
  IntVector coeffs;  // length m, not all zero
  long exponent = 0;
};
struct FactoredComponent {
  Rat constant;  // nonzero
  std::vector<LinearFactor> factors;
};
struct FactoredMap {
  Index m = 0;  // number of variables = number of components
  std::vector<FactoredComponent> components;
};

// Validates shape, nonzero forms/constants, and per-component homogeneity
// of degree zero (factor exponents sum to zero).
FactoredMap makeFactoredMap(Index m, std::vector<FactoredComponent> components);

RatVector evalFactored(const FactoredMap& F, const RatVector& u);

// Decides whether F is a Horn map in disguise: merges proportional linear
// forms, tests the log-derivative symmetry d log F_k/du_j = d log F_j/du_k
// as an exact polynomial identity, and if it holds assembles (d, B) with
// rows of B the merged exponent vectors.  Returns nullopt when the symmetry
// fails (F is then not a Horn map).
std::optional<HornMap> recognize(const FactoredMap& F);

// Composition with the monomial map of C (m x l, rank m): the map
// v -> (d^C) o ((BC) v)^(BC).  Throws InputError when rank(C) < m.
HornMap pushforward(const HornMap& H, const IntMatrix& C);

// Equality of maps, not of presentations: evaluates both at 16 seeded
// rational points off both base loci.  One-sided error: may only wrongly
// report equal, with vanishing probability at these degrees.
bool semanticEq(const HornMap& H1, const HornMap& H2, std::uint64_t seed = kDefaultSeed);

// Presents H verbatim as a FactoredMap (row i of B yields the factor with
// coefficients row i and exponent B(i, k) in component k).
FactoredMap presentAsFactored(const HornMap& H);

}  // namespace horn
