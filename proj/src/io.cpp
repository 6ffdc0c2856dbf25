#include "horn/io.hpp"

#include <fstream>
#include <sstream>

#include "horn/errors.hpp"

namespace horn {

namespace {

const Json& field(const Json& j, const char* name, const char* what) {
  if (!j.is_object())
    throw InputError(std::string(what) + ": expected a JSON object with field '" + name + "'");
  const auto it = j.find(name);
  if (it == j.end())
    throw InputError(std::string(what) + ": missing field '" + name + "'");
  return *it;
}

Index asCount(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + ": expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

long asLong(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string(what) + ": expected an integer");
  return static_cast<long>(j.get<long long>());
}

Int intFromToken(const Json& j, const char* what) {
  if (j.is_string()) return Int::fromString(j.get<std::string>());
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  throw InputError(std::string(what) + ": expected an integer string, got " + j.dump());
}

Rat ratFromToken(const Json& j, const char* what) {
  if (j.is_string()) return Rat::fromString(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw InputError(std::string(what) + ": expected a rational string, got " + j.dump());
}

const Json& asArray(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a JSON array");
  return j;
}

template <typename Scalar, typename Matrix>
Matrix matrixFromJsonImpl(const Json& j, const char* what, Scalar (*parse)(const Json&, const char*)) {
  const Index rows = asCount(field(j, "rows", what), what);
  const Index cols = asCount(field(j, "cols", what), what);
  const Json& entries = asArray(field(j, "entries", what), what);
  if (static_cast<Index>(entries.size()) != rows * cols)
    throw InputError(std::string(what) + ": " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " matrix needs " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(entries.size()));
  Matrix M(rows, cols);
  Index idx = 0;
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) M(i, k) = parse(entries[static_cast<size_t>(idx++)], what);
  return M;
}

}  // namespace

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void writeJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << dumpJson(j);
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

Json toJson(const IntVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

Json toJson(const RatVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

IntVector intVectorFromJson(const Json& j) {
  const Json& a = asArray(j, "integer vector");
  IntVector v(static_cast<Index>(a.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = intFromToken(a[static_cast<size_t>(i)], "integer vector");
  return v;
}

RatVector ratVectorFromJson(const Json& j) {
  const Json& a = asArray(j, "rational vector");
  RatVector v(static_cast<Index>(a.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = ratFromToken(a[static_cast<size_t>(i)], "rational vector");
  return v;
}

Json toJson(const IntMatrix& M) {
  Json entries = Json::array();
  for (Index i = 0; i < M.rows(); ++i)
    for (Index k = 0; k < M.cols(); ++k) entries.push_back(M(i, k).str());
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(entries)}};
}

Json toJson(const RatMatrix& M) {
  Json entries = Json::array();
  for (Index i = 0; i < M.rows(); ++i)
    for (Index k = 0; k < M.cols(); ++k) entries.push_back(M(i, k).str());
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(entries)}};
}

IntMatrix intMatrixFromJson(const Json& j) {
  return matrixFromJsonImpl<Int, IntMatrix>(j, "integer matrix", &intFromToken);
}

RatMatrix ratMatrixFromJson(const Json& j) {
  return matrixFromJsonImpl<Rat, RatMatrix>(j, "rational matrix", &ratFromToken);
}

Json toJson(const MultiPoly& p) {
  Json vars = Json::array();
  for (Index i = 0; i < p.vars(); ++i) vars.push_back("p" + std::to_string(i + 1));
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    Json e = Json::array();
    for (long x : exps) e.push_back(x);
    terms.push_back(Json{{"coeff", coeff.str()}, {"exps", std::move(e)}});
  }
  return Json{{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

MultiPoly polyFromJson(const Json& j) {
  const Json& vars = field(j, "vars", "polynomial");
  Index nvars = 0;
  if (vars.is_array())
    nvars = static_cast<Index>(vars.size());
  else
    nvars = asCount(vars, "polynomial variable count");
  MultiPoly p(nvars);
  const Json& terms = asArray(field(j, "terms", "polynomial"), "polynomial terms");
  for (const Json& t : terms) {
    const Rat coeff = ratFromToken(field(t, "coeff", "polynomial term"), "polynomial coefficient");
    const Json& exps = asArray(field(t, "exps", "polynomial term"), "polynomial exponents");
    Exponents e;
    e.reserve(exps.size());
    for (const Json& x : exps) e.push_back(asLong(x, "polynomial exponent"));
    p.addTerm(e, coeff);
  }
  return p;
}

Json toJson(const HornMap& H) { return Json{{"d", toJson(H.d)}, {"B", toJson(H.B)}}; }

HornMap hornMapFromJson(const Json& j) {
  HornMap H;
  H.d = ratVectorFromJson(field(j, "d", "map"));
  H.B = intMatrixFromJson(field(j, "B", "map"));
  return H;
}

Json toJson(const FactoredMap& F) {
  Json comps = Json::array();
  for (const FactoredComponent& c : F.components) {
    Json factors = Json::array();
    for (const LinearFactor& f : c.factors)
      factors.push_back(Json{{"coeffs", toJson(f.coeffs)}, {"exponent", f.exponent}});
    comps.push_back(Json{{"constant", c.constant.str()}, {"factors", std::move(factors)}});
  }
  return Json{{"m", F.m}, {"components", std::move(comps)}};
}

FactoredMap factoredMapFromJson(const Json& j) {
  FactoredMap F;
  F.m = asCount(field(j, "m", "factored map"), "factored map variable count");
  for (const Json& c : asArray(field(j, "components", "factored map"), "factored map components")) {
    FactoredComponent comp;
    comp.constant = ratFromToken(field(c, "constant", "factored component"), "component constant");
    for (const Json& f : asArray(field(c, "factors", "factored component"), "component factors")) {
      LinearFactor lf;
      lf.coeffs = intVectorFromJson(field(f, "coeffs", "linear factor"));
      lf.exponent = asLong(field(f, "exponent", "linear factor"), "factor exponent");
      comp.factors.push_back(std::move(lf));
    }
    F.components.push_back(std::move(comp));
  }
  return F;
}

Json toJson(const GaleData& G) {
  return Json{{"n", G.n()},        {"m", G.m()},         {"k", G.k()},
              {"B", toJson(G.B)},  {"Bsat", toJson(G.Bsat)}, {"C", toJson(G.C)},
              {"A", toJson(G.A)}};
}

GaleData galeDataFromJson(const Json& j) {
  GaleData G;
  G.B = intMatrixFromJson(field(j, "B", "duality data"));
  G.Bsat = intMatrixFromJson(field(j, "Bsat", "duality data"));
  G.C = intMatrixFromJson(field(j, "C", "duality data"));
  G.A = intMatrixFromJson(field(j, "A", "duality data"));
  const Index n = asCount(field(j, "n", "duality data"), "duality data n");
  const Index m = asCount(field(j, "m", "duality data"), "duality data m");
  const Index k = asCount(field(j, "k", "duality data"), "duality data k");
  if (n != G.n() || m != G.m() || k != G.k())
    throw InputError("duality data: declared shape (n=" + std::to_string(n) + ", m=" +
                     std::to_string(m) + ", k=" + std::to_string(k) +
                     ") disagrees with the matrices");
  return G;
}

Json toJson(const Certificate& c) {
  Json checks = Json::array();
  for (const CheckResult& r : c.checks)
    checks.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return Json{{"pass", c.pass()}, {"checks", std::move(checks)}};
}

Json toJson(const ModelSpec& M) {
  Json eqs = Json::array();
  for (const MultiPoly& e : M.equations) eqs.push_back(toJson(e));
  return Json{{"name", M.name},
              {"horn", toJson(M.horn)},
              {"simplex", M.simplex},
              {"equations", std::move(eqs)}};
}

ModelSpec modelSpecFromJson(const Json& j, unsigned long seed) {
  const Json& name = field(j, "name", "model");
  if (!name.is_string()) throw InputError("model: 'name' must be a string");
  const HornMap raw = hornMapFromJson(field(j, "horn", "model"));
  const Json& simplex = field(j, "simplex", "model");
  if (!simplex.is_boolean()) throw InputError("model: 'simplex' must be a boolean");
  std::vector<MultiPoly> equations;
  for (const Json& e : asArray(field(j, "equations", "model"), "model equations"))
    equations.push_back(polyFromJson(e));
  return makeModelSpec(name.get<std::string>(), makeHornMap(raw.d, raw.B),
                       simplex.get<bool>(), std::move(equations), seed);
}

std::vector<ModelSpec> modelListFromJson(const Json& j, unsigned long seed) {
  std::vector<ModelSpec> out;
  for (const Json& m : asArray(j, "model registry")) out.push_back(modelSpecFromJson(m, seed));
  return out;
}

}  // namespace horn
