#pragma once

#include <string>
#include <vector>

#include <horn/certificate.hpp>
#include <horn/horn_map.hpp>
#include <horn/poly.hpp>
#include <horn/types.hpp>
#include <horn/version.hpp>

namespace horn {

// A statistical model with a closed-form maximum-likelihood estimator: the
// estimator is the model's map applied to the count vector.  Equations are
// optional membership checks in the m probability coordinates.
struct ModelSpec {
  std::string name;
  HornMap horn;
  bool simplex = false;  // model lies in the hyperplane sum(p) = 1
  std::vector<MultiPoly> equations;
};

// Observed counts per outcome cell.
struct CountVector {
  IntVector u;
};

// Non-negative entries, at least one positive.
CountVector makeCountVector(IntVector u);

// Validates the declared invariants at seeded sample points: the image sums
// to one when `simplex` is set and every equation vanishes on the image.
ModelSpec makeModelSpec(std::string name, HornMap horn, bool simplex,
                        std::vector<MultiPoly> equations,
                        unsigned long seed = kDefaultSeed);

// Shipped fixtures: "independence" (2x2 table with independent row and column
// factors; coordinates p00, p01, p10, p11) and "line" (the complete model on
// two outcomes).  For both, strictly positive counts stay off the base locus.
const std::vector<ModelSpec>& builtinModels();
const ModelSpec& findModel(const std::string& name);

// The maximum-likelihood estimate: the model map evaluated at the counts.
// Postconditions are re-checked exactly on every call: simplex sum, model
// equations, and the criticality certificate of the map at u.
RatVector estimate(const ModelSpec& M, const CountVector& u);

// Likelihood-dominance evidence: samples 200 points of the model (product of
// independent marginals for the independence fixture, image points of the
// model map otherwise) and reports the minimum log-likelihood margin of pHat
// over the samples.  Float comparison; evidence, not proof.
Certificate loglikCompare(const ModelSpec& M, const CountVector& u, const RatVector& pHat,
                          unsigned long seed = kDefaultSeed);

}  // namespace horn
