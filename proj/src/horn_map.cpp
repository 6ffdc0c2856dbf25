#include "horn/horn_map.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "horn/errors.hpp"
#include "horn/lattice.hpp"
#include "horn/monomial.hpp"
#include "horn/poly.hpp"
#include "horn/rng.hpp"

namespace horn {

namespace {

std::string rowString(const IntMatrix& B, Index i) {
  std::ostringstream os;
  os << "[";
  for (Index j = 0; j < B.cols(); ++j) os << (j ? "," : "") << B(i, j);
  os << "]";
  return os.str();
}

std::string vecString(const IntVector& v) {
  std::ostringstream os;
  os << "[";
  for (Index j = 0; j < v.size(); ++j) os << (j ? "," : "") << v(j);
  os << "]";
  return os.str();
}

}  // namespace

Certificate validateHornMap(const RatVector& d, const IntMatrix& B) {
  Certificate cert;
  cert.add("d_length_matches_B_cols", d.size() == B.cols(),
           "d has length " + std::to_string(d.size()) + ", B has " + std::to_string(B.cols()) + " columns");
  bool dNonzero = true;
  for (Index k = 0; k < d.size(); ++k)
    if (d(k).isZero()) dNonzero = false;
  cert.add("d_entries_nonzero", dNonzero);
  bool sums = true;
  std::string bad;
  for (Index k = 0; k < B.cols(); ++k) {
    Int s(0);
    for (Index i = 0; i < B.rows(); ++i) s += B(i, k);
    if (!s.isZero()) {
      sums = false;
      bad = "column " + std::to_string(k) + " sums to " + s.str();
      break;
    }
  }
  cert.add("B_columns_sum_zero", sums, bad);
  return cert;
}

HornMap makeHornMap(RatVector d, IntMatrix B) {
  const Certificate cert = validateHornMap(d, B);
  if (!cert.pass()) throw InputError("invalid Horn map: " + cert.firstFailure());
  return HornMap{std::move(d), std::move(B)};
}

RatVector hornEval(const HornMap& H, const RatVector& u) {
  const Index n = H.n(), m = H.m();
  if (u.size() != m) throw ShapeError("hornEval: u must have length " + std::to_string(m));
  if (isZero(u)) throw InputError("hornEval: u = 0 is not a point of the projective domain");
  const RatVector w = H.B.cast<Rat>() * u;
  for (Index i = 0; i < n; ++i) {
    if (!w(i).isZero()) continue;
    if (isZero(H.B.row(i))) continue;  // 0^0 = 1 on identically-zero rows
    throw BaseLocusError("hornEval: u lies on the base locus: linear form " + rowString(H.B, i) +
                         " (row " + std::to_string(i) + " of B) vanishes at u");
  }
  RatVector psi(m);
  for (Index k = 0; k < m; ++k) {
    Rat acc = H.d(k);
    for (Index i = 0; i < n; ++i) {
      const long e = H.B(i, k).toLong();
      if (e != 0) acc *= pow(w(i), e);
    }
    psi(k) = acc;
  }
  return psi;
}

RatMatrix logJacobian(const HornMap& H, const RatVector& u) {
  const Index n = H.n(), m = H.m();
  if (u.size() != m) throw ShapeError("logJacobian: u must have length " + std::to_string(m));
  if (isZero(u)) throw InputError("logJacobian: u = 0 is not a point of the projective domain");
  const RatVector w = H.B.cast<Rat>() * u;
  RatVector winv(n);
  for (Index i = 0; i < n; ++i) {
    if (w(i).isZero()) {
      if (!isZero(H.B.row(i)))
        throw BaseLocusError("logJacobian: u lies on the base locus: linear form " +
                             rowString(H.B, i) + " (row " + std::to_string(i) + " of B) vanishes at u");
      winv(i) = Rat(0);  // identically-zero row contributes nothing
    } else {
      winv(i) = inverse(w(i));
    }
  }
  return H.B.cast<Rat>().transpose() * winv.asDiagonal() * H.B.cast<Rat>();
}

Certificate certifyCriticality(const HornMap& H, const RatVector& u) {
  const RatMatrix J = logJacobian(H, u);
  Certificate cert;

  bool sym = true;
  std::string symDetail;
  for (Index k = 0; k < J.rows() && sym; ++k)
    for (Index j = k + 1; j < J.cols() && sym; ++j)
      if (J(k, j) != J(j, k)) {
        sym = false;
        symDetail = "J(" + std::to_string(k) + "," + std::to_string(j) + ") != J(" +
                    std::to_string(j) + "," + std::to_string(k) + ")";
      }
  cert.add("log_jacobian_symmetric", sym, symDetail);

  const RatVector JTu = J.transpose() * u;
  const RatVector Ju = J * u;
  auto firstNonzero = [](const RatVector& v) {
    for (Index i = 0; i < v.size(); ++i)
      if (!v(i).isZero()) return "entry " + std::to_string(i) + " = " + v(i).str();
    return std::string();
  };
  cert.add("transpose_log_jacobian_annihilates_u", isZero(JTu), firstNonzero(JTu));
  cert.add("log_jacobian_annihilates_u", isZero(Ju), firstNonzero(Ju));
  return cert;
}

FactoredMap makeFactoredMap(Index m, std::vector<FactoredComponent> components) {
  if (m < 1) throw InputError("factored map needs at least one variable");
  if (static_cast<Index>(components.size()) != m)
    throw InputError("factored map must have exactly one component per variable");
  for (size_t k = 0; k < components.size(); ++k) {
    const auto& comp = components[k];
    if (comp.constant.isZero())
      throw InputError("component " + std::to_string(k) + " has zero constant");
    long degree = 0;
    for (const auto& f : comp.factors) {
      if (f.coeffs.size() != m)
        throw ShapeError("component " + std::to_string(k) + ": linear form has wrong length");
      if (isZero(f.coeffs))
        throw InputError("component " + std::to_string(k) + " contains a zero linear form");
      degree += f.exponent;
    }
    if (degree != 0)
      throw InputError("component " + std::to_string(k) +
                       " is not homogeneous of degree zero (exponents sum to " +
                       std::to_string(degree) + ")");
  }
  return FactoredMap{m, std::move(components)};
}

RatVector evalFactored(const FactoredMap& F, const RatVector& u) {
  if (u.size() != F.m) throw ShapeError("evalFactored: u must have length " + std::to_string(F.m));
  if (isZero(u)) throw InputError("evalFactored: u = 0 is not a point of the projective domain");
  RatVector out(F.m);
  for (Index k = 0; k < F.m; ++k) {
    Rat acc = F.components[static_cast<size_t>(k)].constant;
    for (const auto& f : F.components[static_cast<size_t>(k)].factors) {
      Rat val(0);
      for (Index j = 0; j < F.m; ++j) val += Rat(f.coeffs(j)) * u(j);
      if (val.isZero())
        throw BaseLocusError("evalFactored: linear form " + vecString(f.coeffs) + " vanishes at u");
      acc *= pow(val, f.exponent);
    }
    out(k) = acc;
  }
  return out;
}

FactoredMap presentAsFactored(const HornMap& H) {
  std::vector<FactoredComponent> comps(static_cast<size_t>(H.m()));
  for (Index k = 0; k < H.m(); ++k) {
    comps[static_cast<size_t>(k)].constant = H.d(k);
    for (Index i = 0; i < H.n(); ++i) {
      const long e = H.B(i, k).toLong();
      if (e == 0) continue;
      comps[static_cast<size_t>(k)].factors.push_back({IntVector(H.B.row(i).transpose()), e});
    }
  }
  return makeFactoredMap(H.m(), std::move(comps));
}

namespace {

// Primitive representative of a nonzero integer vector: divided by the gcd
// of its entries, scaled so the first nonzero entry is positive.  Returns
// the scalar s with original = s * primitive.
std::pair<IntVector, Rat> primitiveForm(const IntVector& v) {
  Int g(0);
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  int sign = 0;
  for (Index i = 0; i < v.size() && sign == 0; ++i) sign = v(i).sign();
  Int scale = sign < 0 ? -g : g;
  IntVector prim(v.size());
  for (Index i = 0; i < v.size(); ++i) prim(i) = divExact(v(i), scale);
  return {prim, Rat(scale)};
}

MultiPoly linearFormPoly(const IntVector& coeffs) {
  MultiPoly p(coeffs.size());
  Exponents e(static_cast<size_t>(coeffs.size()), 0);
  for (Index j = 0; j < coeffs.size(); ++j) {
    if (coeffs(j).isZero()) continue;
    e[static_cast<size_t>(j)] = 1;
    p.addTerm(e, Rat(coeffs(j)));
    e[static_cast<size_t>(j)] = 0;
  }
  return p;
}

}  // namespace

std::optional<HornMap> recognize(const FactoredMap& F) {
  const Index m = F.m;
  // Re-validate: recognize is also reachable with hand-built values.
  makeFactoredMap(m, F.components);

  // Merge proportional linear forms.  Keyed by primitive representative;
  // the scalar s of each occurrence contributes s^exponent to the constant.
  std::vector<IntVector> forms;                 // primitive, in first-seen order
  std::map<std::string, size_t> formIndex;      // key = serialized primitive form
  std::vector<IntVector> exponents;             // per form: exponent in each component
  RatVector c(m);
  for (Index k = 0; k < m; ++k) {
    c(k) = F.components[static_cast<size_t>(k)].constant;
    for (const auto& f : F.components[static_cast<size_t>(k)].factors) {
      auto [prim, scale] = primitiveForm(f.coeffs);
      c(k) *= pow(scale, f.exponent);
      const std::string key = vecString(prim);
      auto it = formIndex.find(key);
      if (it == formIndex.end()) {
        it = formIndex.emplace(key, forms.size()).first;
        forms.push_back(prim);
        exponents.push_back(IntVector(IntVector::Constant(m, Int(0))));
      }
      exponents[it->second](k) += Int(f.exponent);
    }
  }
  // Forms whose exponents merged to zero in every component drop out.
  std::vector<size_t> live;
  for (size_t i = 0; i < forms.size(); ++i)
    if (!isZero(exponents[i])) live.push_back(i);

  // Symmetry of the log-derivative matrix, as polynomial identities with
  // denominators cleared by the product of the distinct forms:
  //   sum_i (x_ik * l_i[j] - x_ij * l_i[k]) * prod_{h != i} l_h(u) = 0.
  const size_t nf = live.size();
  std::vector<MultiPoly> formPoly(nf);
  for (size_t i = 0; i < nf; ++i) formPoly[i] = linearFormPoly(forms[live[i]]);
  std::vector<MultiPoly> prefix(nf + 1, MultiPoly::constant(m, Rat(1)));
  std::vector<MultiPoly> suffix(nf + 1, MultiPoly::constant(m, Rat(1)));
  for (size_t i = 0; i < nf; ++i) prefix[i + 1] = prefix[i] * formPoly[i];
  for (size_t i = nf; i > 0; --i) suffix[i - 1] = suffix[i] * formPoly[i - 1];
  for (Index j = 0; j < m; ++j)
    for (Index k = j + 1; k < m; ++k) {
      MultiPoly acc(m);
      for (size_t i = 0; i < nf; ++i) {
        const IntVector& x = exponents[live[i]];
        const IntVector& l = forms[live[i]];
        const Rat coeff = Rat(x(k) * l(j) - x(j) * l(k));
        if (coeff.isZero()) continue;
        acc = acc + prefix[i] * suffix[i + 1] * coeff;
      }
      if (!acc.isZero()) return std::nullopt;  // not symmetric: not a Horn map
    }

  // Symmetry forces each primitive form to be proportional to its exponent
  // vector: l_i = e_i * x_i.  Recover e_i and fold e_i^(x_ik) into d.
  IntMatrix B(static_cast<Index>(nf), m);
  RatVector d = c;
  for (size_t i = 0; i < nf; ++i) {
    const IntVector& x = exponents[live[i]];
    const IntVector& l = forms[live[i]];
    B.row(static_cast<Index>(i)) = x.transpose();
    Index j0 = 0;
    while (x(j0).isZero()) ++j0;
    const Rat e = Rat(l(j0)) / Rat(x(j0));
    for (Index j = 0; j < m; ++j)
      if (Rat(l(j)) != e * Rat(x(j)))
        throw Error("recognize: symmetric map with non-proportional form (internal)");
    for (Index k = 0; k < m; ++k)
      if (!x(k).isZero()) d(k) *= pow(e, x(k).toLong());
  }

  HornMap H = makeHornMap(std::move(d), std::move(B));

  // Sanity: the assembled map evaluates identically to F at seeded points.
  Rng rng(kDefaultSeed);
  for (int s = 0; s < 8; ++s) {
    RatVector u(m);
    for (int tries = 0;; ++tries) {
      if (tries > 1000) throw Error("recognize: could not sample off the base locus");
      for (Index j = 0; j < m; ++j) u(j) = Rat(Int(rng.intIn(-20, 20)));
      if (isZero(u)) continue;
      bool ok = true;
      for (size_t i = 0; i < nf && ok; ++i) {
        Rat val(0);
        for (Index j = 0; j < m; ++j) val += Rat(forms[live[i]](j)) * u(j);
        ok = !val.isZero();
      }
      if (ok) break;
    }
    if (hornEval(H, u) != evalFactored(F, u))
      throw Error("recognize: assembled map disagrees with input (internal)");
  }
  return H;
}

HornMap pushforward(const HornMap& H, const IntMatrix& C) {
  if (C.rows() != H.m()) throw ShapeError("pushforward: C must have m rows");
  if (rank(C) < H.m())
    throw InputError("pushforward: C must have rank m = " + std::to_string(H.m()) +
                     " (the monomial map is not finite otherwise)");
  return makeHornMap(monomialApply(C, H.d), H.B * C);
}

bool semanticEq(const HornMap& H1, const HornMap& H2, std::uint64_t seed) {
  if (H1.m() != H2.m()) throw ShapeError("semanticEq: maps have different source dimension");
  const Index m = H1.m();
  Rng rng(seed);
  for (int s = 0; s < 16; ++s) {
    RatVector u(m);
    for (int tries = 0;; ++tries) {
      if (tries > 2000) throw Error("semanticEq: could not sample off both base loci");
      for (Index j = 0; j < m; ++j) u(j) = Rat(Int(rng.intIn(-50, 50)));
      if (isZero(u)) continue;
      const RatVector w1 = H1.B.cast<Rat>() * u;
      const RatVector w2 = H2.B.cast<Rat>() * u;
      bool ok = true;
      for (Index i = 0; i < w1.size() && ok; ++i)
        if (w1(i).isZero() && !isZero(H1.B.row(i))) ok = false;
      for (Index i = 0; i < w2.size() && ok; ++i)
        if (w2(i).isZero() && !isZero(H2.B.row(i))) ok = false;
      if (ok) break;
    }
    if (hornEval(H1, u) != hornEval(H2, u)) return false;
  }
  return true;
}

}  // namespace horn
