#include <horn/mle.hpp>

#include <cmath>
#include <utility>

#include <horn/rng.hpp>
#include <horn/scalar.hpp>

namespace horn {
namespace {

// Seeded positive data vectors with the map evaluated at them; base-locus
// hits are skipped.
std::vector<std::pair<RatVector, RatVector>> samplePoints(const HornMap& H, int want,
                                                          Rng& rng) {
  std::vector<std::pair<RatVector, RatVector>> out;
  for (int tries = 0; tries < 50 * want && static_cast<int>(out.size()) < want; ++tries) {
    RatVector u(H.m());
    for (Index j = 0; j < H.m(); ++j) u(j) = Rat(rng.intIn(1, 1000));
    try {
      RatVector p = hornEval(H, u);
      out.emplace_back(std::move(u), std::move(p));
    } catch (const BaseLocusError&) {
    }
  }
  return out;
}

MultiPoly tableDeterminant() {
  MultiPoly det(4);
  det.addTerm({1, 0, 0, 1}, 1);
  det.addTerm({0, 1, 1, 0}, -1);
  return det;
}

MultiPoly simplexEquation(Index m) {
  MultiPoly s(m);
  for (Index i = 0; i < m; ++i) s = s + MultiPoly::variable(m, i);
  return s + MultiPoly::constant(m, -1);
}

}  // namespace

CountVector makeCountVector(IntVector u) {
  if (u.size() == 0) throw InputError("count vector is empty");
  bool positive = false;
  for (Index i = 0; i < u.size(); ++i) {
    if (u(i).sign() < 0) throw InputError("count vector has a negative entry");
    if (u(i).sign() > 0) positive = true;
  }
  if (!positive) throw InputError("count vector is identically zero");
  return CountVector{std::move(u)};
}

ModelSpec makeModelSpec(std::string name, HornMap horn, bool simplex,
                        std::vector<MultiPoly> equations, unsigned long seed) {
  for (const MultiPoly& eq : equations)
    if (eq.vars() != horn.m())
      throw ShapeError("model equation variable count differs from the map's components");
  Rng rng(seed);
  const auto samples = samplePoints(horn, 8, rng);
  if (samples.size() < 8)
    throw InputError("model '" + name + "' cannot be sampled off the base locus");
  for (const auto& [u, p] : samples) {
    if (simplex) {
      Rat s = 0;
      for (Index i = 0; i < p.size(); ++i) s = s + p(i);
      if (s != Rat(1))
        throw InputError("model '" + name + "' marked simplex but the image sums to " + s.str());
    }
    for (size_t k = 0; k < equations.size(); ++k)
      if (!equations[k].eval(p).isZero())
        throw InputError("model '" + name + "' violates equation " + std::to_string(k) +
                         " on its image");
  }
  return ModelSpec{std::move(name), std::move(horn), simplex, std::move(equations)};
}

const std::vector<ModelSpec>& builtinModels() {
  static const std::vector<ModelSpec> models = [] {
    std::vector<ModelSpec> out;

    // 2x2 independence: cells (p00, p01, p10, p11); the five forms are the
    // two row marginals, the doubled total with exponent -2, and the two
    // column marginals, so the estimate is (row sum)(column sum)/(total)^2.
    const IntMatrix B = intMat(5, 4,
                               {1, 1, 0, 0,
                                0, 0, 1, 1,
                                -2, -2, -2, -2,
                                1, 0, 1, 0,
                                0, 1, 0, 1});
    out.push_back(makeModelSpec("independence", makeHornMap(ratVec({4, 4, 4, 4}), B), true,
                                {tableDeterminant(), simplexEquation(4)}));

    // complete model on two outcomes: the segment p1 + p2 = 1
    out.push_back(makeModelSpec(
        "line", makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1})), true,
        {simplexEquation(2)}));
    return out;
  }();
  return models;
}

const ModelSpec& findModel(const std::string& name) {
  for (const ModelSpec& m : builtinModels())
    if (m.name == name) return m;
  throw InputError("unknown model '" + name + "'");
}

RatVector estimate(const ModelSpec& M, const CountVector& c) {
  if (c.u.size() != M.horn.m())
    throw ShapeError("count vector length differs from the model's cell count");
  const RatVector u = ratCast(c.u);
  const RatVector p = hornEval(M.horn, u);
  if (M.simplex) {
    Rat s = 0;
    for (Index i = 0; i < p.size(); ++i) s = s + p(i);
    if (s != Rat(1)) throw Error("estimate does not sum to one on a simplex model");
  }
  for (const MultiPoly& eq : M.equations)
    if (!eq.eval(p).isZero()) throw Error("estimate violates a model equation");
  if (!certifyCriticality(M.horn, u).pass())
    throw Error("criticality certificate failed at the data vector");
  return p;
}

Certificate loglikCompare(const ModelSpec& M, const CountVector& c, const RatVector& pHat,
                          unsigned long seed) {
  if (c.u.size() != M.horn.m() || pHat.size() != M.horn.m())
    throw ShapeError("count vector and estimate must match the model's cell count");
  for (Index i = 0; i < pHat.size(); ++i)
    if (!(Rat(0) < pHat(i)))
      throw InputError("likelihood comparison needs a strictly positive estimate");

  const auto loglik = [&](const std::vector<double>& p) {
    double s = 0;
    for (Index i = 0; i < c.u.size(); ++i) s += c.u(i).toDouble() * std::log(p[i]);
    return s;
  };
  std::vector<double> best(pHat.size());
  for (Index i = 0; i < pHat.size(); ++i) best[i] = pHat(i).toDouble();
  const double base = loglik(best);

  Rng rng(seed);
  int used = 0;
  double worstMargin = base - loglik(best);  // the degenerate sample: margin zero
  if (M.name == "independence") {
    while (used < 200) {
      const double a = 0.01 + 0.98 * rng.real01(), b = 0.01 + 0.98 * rng.real01();
      worstMargin = std::min(
          worstMargin, base - loglik({a * b, a * (1 - b), (1 - a) * b, (1 - a) * (1 - b)}));
      ++used;
    }
  } else {
    for (const auto& [u, q] : samplePoints(M.horn, 200, rng)) {
      std::vector<double> p(q.size());
      bool positive = true;
      for (Index i = 0; i < q.size(); ++i) {
        p[i] = q(i).toDouble();
        positive = positive && p[i] > 0;
      }
      if (!positive) continue;
      worstMargin = std::min(worstMargin, base - loglik(p));
      ++used;
    }
  }

  Certificate cert;
  cert.add("estimate_dominates_samples", used == 200 && worstMargin >= -1e-9,
           std::to_string(used) + " samples, minimum log-likelihood margin " +
               std::to_string(worstMargin));
  return cert;
}

}  // namespace horn
