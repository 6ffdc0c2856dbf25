// Command-line surface for the library: every subcommand reads and writes
// JSON with exact values as strings, echoes the seed and version, and maps
// outcomes to exit codes (0 success, 1 a certificate failed, 2 bad usage or
// input).

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "horn/adisc.hpp"
#include "horn/gale.hpp"
#include "horn/horn_map.hpp"
#include "horn/io.hpp"
#include "horn/mldeg.hpp"
#include "horn/mle.hpp"
#include "horn/rng.hpp"
#include "selftest.hpp"

namespace {

using horn::Index;
using horn::Json;

horn::RatVector parseRatCsv(const std::string& csv) {
  std::vector<horn::Rat> vals;
  std::string tok;
  for (size_t pos = 0;;) {
    const size_t comma = csv.find(',', pos);
    tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw horn::InputError("empty entry in comma-separated vector: '" + csv + "'");
    vals.push_back(horn::Rat::fromString(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  horn::RatVector v(static_cast<Index>(vals.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = vals[static_cast<size_t>(i)];
  return v;
}

horn::IntVector parseIntCsv(const std::string& csv) {
  const horn::RatVector r = parseRatCsv(csv);
  horn::IntVector v(r.size());
  for (Index i = 0; i < r.size(); ++i) {
    if (!r(i).isInteger())
      throw horn::InputError("expected an integer vector, got entry " + r(i).str());
    v(i) = r(i).num();
  }
  return v;
}

void emit(const Json& j, const std::string& path) {
  std::cout << horn::dumpJson(j);
  if (!path.empty()) horn::writeJsonFile(path, j);
}

horn::HornMap loadValidatedMap(const std::string& path) {
  const horn::HornMap raw = horn::hornMapFromJson(horn::readJsonFile(path));
  return horn::makeHornMap(raw.d, raw.B);
}

// Random integer point off the base locus of H, mirroring the sampling the
// library itself uses; gives up (base-locus error) only for degenerate maps.
horn::RatVector sampleOffBaseLocus(const horn::HornMap& H, horn::Rng& rng) {
  for (int tries = 0; tries < 2000; ++tries) {
    horn::RatVector u(H.m());
    for (Index j = 0; j < H.m(); ++j) u(j) = horn::Rat(horn::Int(rng.intIn(-9, 9)));
    if (horn::isZero(u)) continue;
    const horn::RatVector w = horn::ratCast(H.B) * u;
    bool ok = true;
    for (Index i = 0; i < H.n() && ok; ++i)
      if (w(i).isZero() && !horn::isZero(H.B.row(i))) ok = false;
    if (ok) return u;
  }
  throw horn::BaseLocusError("could not sample a point off the base locus");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact toolkit for scaled linear-form power maps, kernel duality,\n"
      "coefficient-family discriminants, and likelihood-degree counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", horn::kVersion);

  unsigned long seed = horn::kDefaultSeed;
  double tol = 1e-6;
  std::string jsonOut;
  app.add_option("--seed", seed, "seed for every randomized routine")
      ->envname("HORN_SEED")
      ->capture_default_str();
  app.add_option("--tol", tol, "numeric tolerance for root pairing")->capture_default_str();
  app.add_option("--json-out", jsonOut, "also write the JSON output to this file");

  // gale
  std::string galeB, galeA;
  auto* gale = app.add_subcommand("gale", "kernel-duality data for an exponent matrix");
  gale->fallthrough();
  auto* galeOptB =
      gale->add_option("--B", galeB, "JSON matrix (n x m, zero column sums): emits the full duality data");
  auto* galeOptA =
      gale->add_option("--A", galeA, "JSON matrix (k x n, all-ones first row): emits its kernel");
  galeOptB->excludes(galeOptA);
  galeOptA->excludes(galeOptB);

  // horn-eval
  std::string evalMap, evalU;
  auto* hornEvalCmd = app.add_subcommand("horn-eval", "evaluate a validated map at a point");
  hornEvalCmd->fallthrough();
  hornEvalCmd->add_option("--map", evalMap, "JSON file with {d, B}")->required();
  hornEvalCmd->add_option("--u", evalU, "comma-separated rational coordinates")->required();

  // horn-check
  std::string checkMap;
  long checkTrials = 20;
  auto* hornCheckCmd =
      app.add_subcommand("horn-check", "validate map data and its criticality identities");
  hornCheckCmd->fallthrough();
  hornCheckCmd->add_option("--map", checkMap, "JSON file with {d, B}; loaded without validation")
      ->required();
  hornCheckCmd->add_option("--trials", checkTrials, "random evaluation points to certify")
      ->capture_default_str();

  // recognize
  std::string recFile;
  auto* recognizeCmd =
      app.add_subcommand("recognize", "decide whether a factored map is a scaled power map");
  recognizeCmd->fallthrough();
  recognizeCmd->add_option("--factored", recFile, "JSON file with {m, components}")->required();

  // pushforward
  std::string pushMap, pushC;
  auto* pushCmd =
      app.add_subcommand("pushforward", "compose a map with a monomial reparametrization");
  pushCmd->fallthrough();
  pushCmd->add_option("--map", pushMap, "JSON file with {d, B}")->required();
  pushCmd->add_option("--C", pushC, "JSON exponent matrix (m x l, rank m)")->required();

  // adisc
  auto* adiscCmd = app.add_subcommand("adisc", "singular coefficient families of a configuration");
  adiscCmd->fallthrough();
  adiscCmd->require_subcommand(1);
  std::string adiscA, adiscV, adiscT;
  auto* adiscParam =
      adiscCmd->add_subcommand("param", "coefficients with a prescribed singular torus point");
  adiscParam->fallthrough();
  adiscParam->add_option("--A", adiscA, "JSON configuration matrix")->required();
  adiscParam->add_option("--v", adiscV, "comma-separated kernel parameter (length n-k)")->required();
  adiscParam->add_option("--t", adiscT, "comma-separated torus point tail (length k-1)");
  auto* adiscPoly = adiscCmd->add_subcommand("poly", "discriminant of a one-variable family");
  adiscPoly->fallthrough();
  adiscPoly->add_option("--A", adiscA, "JSON configuration matrix")->required();
  auto* adiscReduced =
      adiscCmd->add_subcommand("reduced", "kernel-torus image of the singular coefficients");
  adiscReduced->fallthrough();
  adiscReduced->add_option("--A", adiscA, "JSON configuration matrix")->required();
  adiscReduced->add_option("--v", adiscV, "comma-separated kernel parameter (length n-k)")
      ->required();

  // mldeg
  std::string mldegF;
  long mldegTrials = 5;
  long mldegEliminate = 1;
  auto* mldegCmd =
      app.add_subcommand("mldeg", "likelihood-degree count of a plane curve in the torus");
  mldegCmd->fallthrough();
  mldegCmd->add_option("--f", mldegF, "JSON polynomial in two variables")->required();
  mldegCmd->add_option("--trials", mldegTrials, "random data vectors to draw")
      ->capture_default_str();
  mldegCmd->add_option("--eliminate", mldegEliminate, "variable removed by the resultant (0 or 1)")
      ->capture_default_str();

  // mle
  std::string mleModel, mleU, mleRegistry;
  auto* mleCmd = app.add_subcommand("mle", "closed-form maximum-likelihood estimate");
  mleCmd->fallthrough();
  mleCmd->add_option("--model", mleModel, "model name (built in or from --registry)")->required();
  mleCmd->add_option("--u", mleU, "comma-separated non-negative counts")->required();
  mleCmd->add_option("--registry", mleRegistry, "JSON file with a list of model specs");

  // selftest
  auto* selftestCmd = app.add_subcommand("selftest", "run the built-in known-answer battery");
  selftestCmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Json out;
  bool pass = true;
  try {
    if (app.got_subcommand(gale)) {
      if (galeB.empty() && galeA.empty())
        throw horn::InputError("gale: provide exactly one of --B or --A");
      if (!galeB.empty()) {
        const horn::IntMatrix B = horn::intMatrixFromJson(horn::readJsonFile(galeB));
        const horn::GaleData G = horn::galeFromB(B);
        const horn::Certificate cert = horn::verifyExactness(G);
        out["gale"] = horn::toJson(G);
        out["certificate"] = horn::toJson(cert);
        pass = cert.pass();
      } else {
        const horn::IntMatrix A = horn::intMatrixFromJson(horn::readJsonFile(galeA));
        out["B"] = horn::toJson(horn::kernelGale(A));
      }
    } else if (app.got_subcommand(hornEvalCmd)) {
      const horn::HornMap H = loadValidatedMap(evalMap);
      out["image"] = horn::toJson(horn::hornEval(H, parseRatCsv(evalU)));
    } else if (app.got_subcommand(hornCheckCmd)) {
      if (checkTrials < 0) throw horn::InputError("horn-check: --trials must be non-negative");
      const horn::HornMap H = horn::hornMapFromJson(horn::readJsonFile(checkMap));
      horn::Certificate cert = horn::validateHornMap(H.d, H.B);
      long ran = 0;
      if (H.d.size() == H.B.cols() && H.m() > 0) {
        horn::Rng rng(seed);
        try {
          for (long t = 0; t < checkTrials; ++t) {
            const horn::RatVector u = sampleOffBaseLocus(H, rng);
            std::string point = "u = (";
            for (Index j = 0; j < u.size(); ++j)
              point += (j ? "," : "") + u(j).str();
            point += ")";
            const horn::Certificate sub = horn::certifyCriticality(H, u);
            for (const horn::CheckResult& c : sub.checks)
              cert.add("trial" + std::to_string(t) + "/" + c.name, c.pass,
                       c.detail.empty() ? point : point + "; " + c.detail);
            ++ran;
          }
        } catch (const horn::Error& e) {
          cert.add("criticality_trials", false, e.what());
        }
      }
      out["certificate"] = horn::toJson(cert);
      out["trials"] = ran;
      pass = cert.pass();
    } else if (app.got_subcommand(recognizeCmd)) {
      const horn::FactoredMap raw = horn::factoredMapFromJson(horn::readJsonFile(recFile));
      const horn::FactoredMap F = horn::makeFactoredMap(raw.m, raw.components);
      const auto H = horn::recognize(F);
      out["recognized"] = H.has_value();
      if (H.has_value()) out["map"] = horn::toJson(*H);
      pass = H.has_value();
    } else if (app.got_subcommand(pushCmd)) {
      const horn::HornMap H = loadValidatedMap(pushMap);
      const horn::IntMatrix C = horn::intMatrixFromJson(horn::readJsonFile(pushC));
      out["map"] = horn::toJson(horn::pushforward(H, C));
    } else if (app.got_subcommand(adiscCmd)) {
      const horn::PointConfig P =
          horn::makePointConfig(horn::intMatrixFromJson(horn::readJsonFile(adiscA)));
      if (adiscCmd->got_subcommand(adiscParam)) {
        const horn::RatVector v = parseRatCsv(adiscV);
        const horn::RatVector t =
            adiscT.empty() ? horn::RatVector(0) : parseRatCsv(adiscT);
        const horn::RatVector q = horn::singularPointParam(P, v, t);
        const horn::Certificate cert = horn::verifySingularPoint(P, q, t);
        out["q"] = horn::toJson(q);
        out["certificate"] = horn::toJson(cert);
        pass = cert.pass();
      } else if (adiscCmd->got_subcommand(adiscPoly)) {
        out["discriminant"] = horn::toJson(horn::discriminantUnivariate(P));
      } else {
        out["reduced_point"] = horn::toJson(horn::reducedHornPoint(P, parseRatCsv(adiscV)));
      }
    } else if (app.got_subcommand(mldegCmd)) {
      const horn::MultiPoly f = horn::polyFromJson(horn::readJsonFile(mldegF));
      const horn::MlDegreeReport rep =
          horn::mlDegreePlane(f, seed, mldegEliminate, mldegTrials, tol);
      out["ml_degree"] = rep.mlDegree;
      Json draws = Json::array();
      for (const auto& d : rep.draws) draws.push_back(Json::array({d[0], d[1]}));
      out["draws"] = std::move(draws);
      out["counts"] = rep.drawCounts;
      out["agreeing"] = rep.agreeing;
      out["unanimous"] = rep.unanimous;
      Json sols = Json::array();
      for (const horn::CriticalPoint& s : rep.solutions)
        sols.push_back(Json{{"p1", Json::array({s.p1.real(), s.p1.imag()})},
                            {"p2", Json::array({s.p2.real(), s.p2.imag()})},
                            {"f_residual", s.fResidual},
                            {"g_residual", s.gResidual}});
      out["solutions"] = std::move(sols);
    } else if (app.got_subcommand(mleCmd)) {
      std::vector<horn::ModelSpec> registry;
      const horn::ModelSpec* M = nullptr;
      if (!mleRegistry.empty()) {
        registry = horn::modelListFromJson(horn::readJsonFile(mleRegistry), seed);
        for (const horn::ModelSpec& m : registry)
          if (m.name == mleModel) {
            M = &m;
            break;
          }
      }
      if (M == nullptr) M = &horn::findModel(mleModel);
      const horn::RatVector p = horn::estimate(*M, horn::makeCountVector(parseIntCsv(mleU)));
      out["model"] = M->name;
      out["p_hat"] = horn::toJson(p);
      out["simplex"] = M->simplex;
      out["on_model"] = true;
      out["critical"] = true;
    } else if (app.got_subcommand(selftestCmd)) {
      const horn::Certificate cert = horn::runSelftest(seed);
      out["certificate"] = horn::toJson(cert);
      out["total"] = cert.checks.size();
      pass = cert.pass();
    }

    out["version"] = horn::kVersion;
    out["seed"] = seed;
    emit(out, jsonOut);
    return pass ? 0 : 1;
  } catch (const horn::ConvergenceError& e) {
    Json err{{"error", e.what()}, {"version", horn::kVersion}, {"seed", seed}};
    emit(err, jsonOut);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}, {"version", horn::kVersion}, {"seed", seed}};
    emit(err, jsonOut);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
