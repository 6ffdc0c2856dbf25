// End-to-end tests for the command-line binary.  The binary path arrives as
// a positional argument (wired in CMake as $<TARGET_FILE:horn>); every test
// shells out, captures stdout and the exit code, and inspects the JSON.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "horn/io.hpp"
#include "horn/types.hpp"

namespace {

std::string g_cli;

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult runRaw(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed for: " + cmd);
  std::string out;
  char buf[4096];
  for (size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  CliResult r;
  r.out = std::move(out);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult runCli(const std::string& args) { return runRaw(g_cli + " " + args + " 2>/dev/null"); }

horn::Json parsed(const CliResult& r) { return horn::parseJson(r.out); }

// Writes the shared fixture files once; returns the directory.
const std::string& fixtureDir() {
  static const std::string dir = [] {
    namespace fs = std::filesystem;
    const fs::path d = fs::temp_directory_path() / "horn_cli_fixtures";
    fs::create_directories(d);
    using horn::intMat;
    using horn::ratVec;

    const horn::HornMap indep = horn::makeHornMap(
        ratVec({4, 4, 4, 4}),
        intMat(5, 4, {1, 1, 0, 0, 0, 0, 1, 1, -2, -2, -2, -2, 1, 0, 1, 0, 0, 1, 0, 1}));
    horn::writeJsonFile((d / "indep_map.json").string(), horn::toJson(indep));

    const horn::HornMap line =
        horn::makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1}));
    horn::writeJsonFile((d / "line_map.json").string(), horn::toJson(line));

    horn::HornMap corrupted = line;  // break one column sum
    corrupted.B(2, 1) = horn::Int(0);
    horn::writeJsonFile((d / "corrupted_map.json").string(), horn::toJson(corrupted));

    horn::MultiPoly circle(2);
    circle.addTerm({2, 0}, 1);
    circle.addTerm({0, 2}, 1);
    circle.addTerm({0, 0}, -1);
    horn::writeJsonFile((d / "circle.json").string(), horn::toJson(circle));

    horn::MultiPoly lineCurve(2);
    lineCurve.addTerm({1, 0}, 1);
    lineCurve.addTerm({0, 1}, 1);
    lineCurve.addTerm({0, 0}, -1);
    horn::writeJsonFile((d / "line_curve.json").string(), horn::toJson(lineCurve));

    horn::MultiPoly monomial(2);
    monomial.addTerm({2, 1}, 5);
    horn::writeJsonFile((d / "monomial_curve.json").string(), horn::toJson(monomial));

    horn::writeJsonFile((d / "quad_config.json").string(),
                        horn::toJson(intMat(2, 3, {1, 1, 1, 0, 1, 2})));
    horn::writeJsonFile((d / "ones_config.json").string(), horn::toJson(intMat(1, 3, {1, 1, 1})));
    horn::writeJsonFile((d / "line_B.json").string(), horn::toJson(intMat(3, 2, {1, 0, 0, 1, -1, -1})));
    horn::writeJsonFile((d / "marginals_config.json").string(),
                        horn::toJson(intMat(2, 5, {1, 1, 1, 1, 1, 0, 0, 1, 2, 2})));
    horn::writeJsonFile((d / "reparam_C.json").string(), horn::toJson(intMat(2, 3, {1, 0, 1, 0, 1, 1})));
    horn::writeJsonFile((d / "lowrank_C.json").string(), horn::toJson(intMat(2, 2, {1, 1, 1, 1})));

    // u -> -5 u (2u)^{-1}: a constant map in factored clothing
    horn::FactoredMap constant;
    constant.m = 1;
    horn::FactoredComponent comp;
    comp.constant = horn::Rat(-5);
    comp.factors.push_back({horn::intVec({1}), 1});
    comp.factors.push_back({horn::intVec({2}), -1});
    constant.components.push_back(comp);
    horn::writeJsonFile((d / "factored_constant.json").string(), horn::toJson(constant));

    // u -> (u2/u1, u1/u2): degree-zero but log-asymmetric, so not recognizable
    horn::FactoredMap swap;
    swap.m = 2;
    horn::FactoredComponent c1, c2;
    c1.constant = horn::Rat(1);
    c1.factors.push_back({horn::intVec({0, 1}), 1});
    c1.factors.push_back({horn::intVec({1, 0}), -1});
    c2.constant = horn::Rat(1);
    c2.factors.push_back({horn::intVec({1, 0}), 1});
    c2.factors.push_back({horn::intVec({0, 1}), -1});
    swap.components.push_back(c1);
    swap.components.push_back(c2);
    horn::writeJsonFile((d / "factored_swap.json").string(), horn::toJson(swap));

    horn::writeJsonFile((d / "registry.json").string(),
                        horn::Json::array({horn::toJson(horn::findModel("line"))}));

    std::FILE* bad = std::fopen((d / "bad.json").string().c_str(), "w");
    std::fputs("{\"rows\": 2,, }", bad);
    std::fclose(bad);
    return d.string();
  }();
  return dir;
}

std::string fx(const std::string& name) { return fixtureDir() + "/" + name; }

}  // namespace

TEST_CASE("selftest battery passes and echoes version and seed") {
  const CliResult r = runCli("selftest");
  CHECK(r.code == 0);
  const horn::Json j = parsed(r);
  CHECK(j["certificate"]["pass"] == true);
  CHECK(j["total"].get<long>() >= 25);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["seed"] == 7);
}

TEST_CASE("mle subcommand returns the exact estimate") {
  const CliResult r = runCli("mle --model independence --u 4,2,3,1");
  CHECK(r.code == 0);
  const horn::Json j = parsed(r);
  CHECK(horn::ratVectorFromJson(j["p_hat"]) ==
        horn::ratVec({horn::Rat(21, 50), horn::Rat(9, 50), horn::Rat(7, 25), horn::Rat(3, 25)}));
  CHECK(j["simplex"] == true);
  CHECK(j["on_model"] == true);
  CHECK(j["critical"] == true);

  CHECK(runCli("mle --model independence --u 0,0,3,1").code == 2);  // base locus
  CHECK(runCli("mle --model nosuch --u 1,1").code == 2);
  CHECK(runCli("mle --model independence --u 1,-1,1,1").code == 2);

  const CliResult reg = runCli("mle --model line --u 3,7 --registry " + fx("registry.json"));
  CHECK(reg.code == 0);
  CHECK(horn::ratVectorFromJson(parsed(reg)["p_hat"]) ==
        horn::ratVec({horn::Rat(3, 10), horn::Rat(7, 10)}));
}

TEST_CASE("mldeg subcommand counts critical points") {
  const CliResult r = runCli("mldeg --f " + fx("circle.json") + " --seed 7");
  CHECK(r.code == 0);
  const horn::Json j = parsed(r);
  CHECK(j["ml_degree"] == 4);
  CHECK(j["counts"].size() == 5);
  CHECK(j["unanimous"] == true);
  CHECK(j["solutions"].size() == 4);

  const CliResult one = runCli("mldeg --f " + fx("line_curve.json"));
  CHECK(one.code == 0);
  CHECK(parsed(one)["ml_degree"] == 1);

  CHECK(runCli("mldeg --f " + fx("monomial_curve.json")).code == 2);
  CHECK(runCli("mldeg --f " + fx("circle.json") + " --eliminate 3").code == 2);
}

TEST_CASE("horn-eval evaluates validated maps only") {
  const CliResult r = runCli("horn-eval --map " + fx("indep_map.json") + " --u 4,2,3,1");
  CHECK(r.code == 0);
  CHECK(horn::ratVectorFromJson(parsed(r)["image"]) ==
        horn::ratVec({horn::Rat(21, 50), horn::Rat(9, 50), horn::Rat(7, 25), horn::Rat(3, 25)}));

  CHECK(runCli("horn-eval --map " + fx("indep_map.json") + " --u 0,0,0,0").code == 2);
  CHECK(runCli("horn-eval --map " + fx("corrupted_map.json") + " --u 1,2").code == 2);
  CHECK(runCli("horn-eval --map " + fx("bad.json") + " --u 1,2").code == 2);
}

TEST_CASE("horn-check reports failing identities on corrupted data") {
  const CliResult good = runCli("horn-check --map " + fx("indep_map.json") + " --trials 5");
  CHECK(good.code == 0);
  CHECK(parsed(good)["certificate"]["pass"] == true);
  CHECK(parsed(good)["trials"] == 5);

  const CliResult bad = runCli("horn-check --map " + fx("corrupted_map.json") + " --trials 5");
  CHECK(bad.code == 1);
  const horn::Json cert = parsed(bad)["certificate"];
  CHECK(cert["pass"] == false);
  bool columnCheckFailed = false;
  for (const auto& c : cert["checks"])
    if (c["name"] == "B_columns_sum_zero" && c["pass"] == false) columnCheckFailed = true;
  CHECK(columnCheckFailed);
}

TEST_CASE("gale emits duality data with a certificate") {
  const CliResult r = runCli("gale --B " + fx("line_B.json"));
  CHECK(r.code == 0);
  const horn::Json j = parsed(r);
  CHECK(j["certificate"]["pass"] == true);
  CHECK(horn::intMatrixFromJson(j["gale"]["A"]) == horn::intMat(1, 3, {1, 1, 1}));
  CHECK(j["gale"]["k"] == 1);

  const CliResult a = runCli("gale --A " + fx("marginals_config.json"));
  CHECK(a.code == 0);
  const horn::IntMatrix K = horn::intMatrixFromJson(parsed(a)["B"]);
  CHECK(K.rows() == 5);
  CHECK(K.cols() == 3);

  CHECK(runCli("gale").code == 2);
  CHECK(runCli("gale --B " + fx("line_B.json") + " --A " + fx("marginals_config.json")).code == 2);
}

TEST_CASE("recognize distinguishes symmetric from asymmetric factored maps") {
  const CliResult yes = runCli("recognize --factored " + fx("factored_constant.json"));
  CHECK(yes.code == 0);
  const horn::Json j = parsed(yes);
  CHECK(j["recognized"] == true);
  CHECK(horn::ratVectorFromJson(j["map"]["d"]) == horn::ratVec({horn::Rat(-5, 2)}));

  const CliResult no = runCli("recognize --factored " + fx("factored_swap.json"));
  CHECK(no.code == 1);
  CHECK(parsed(no)["recognized"] == false);
}

TEST_CASE("pushforward composes maps and rejects rank-deficient exponents") {
  const CliResult r = runCli("pushforward --map " + fx("line_map.json") + " --C " + fx("reparam_C.json"));
  CHECK(r.code == 0);
  const horn::Json j = parsed(r)["map"];
  CHECK(horn::intMatrixFromJson(j["B"]) == horn::intMat(3, 3, {1, 0, 1, 0, 1, 1, -1, -1, -2}));
  CHECK(horn::ratVectorFromJson(j["d"]) == horn::ratVec({-1, -1, 1}));

  CHECK(runCli("pushforward --map " + fx("line_map.json") + " --C " + fx("lowrank_C.json")).code == 2);
}

TEST_CASE("adisc subcommands expose the singular-family toolkit") {
  const CliResult poly = runCli("adisc poly --A " + fx("quad_config.json"));
  CHECK(poly.code == 0);
  horn::MultiPoly expect(3);
  expect.addTerm({0, 2, 0}, 1);
  expect.addTerm({1, 0, 1}, -4);
  CHECK(horn::polyFromJson(parsed(poly)["discriminant"]) == expect);

  const CliResult param = runCli("adisc param --A " + fx("quad_config.json") + " --v 1 --t 3");
  CHECK(param.code == 0);
  CHECK(horn::ratVectorFromJson(parsed(param)["q"]) ==
        horn::ratVec({horn::Rat(1), horn::Rat(-2, 3), horn::Rat(1, 9)}));
  CHECK(parsed(param)["certificate"]["pass"] == true);

  const CliResult reduced = runCli("adisc reduced --A " + fx("quad_config.json") + " --v 1");
  CHECK(reduced.code == 0);
  CHECK(horn::ratVectorFromJson(parsed(reduced)["reduced_point"]) == horn::ratVec({horn::Rat(1, 4)}));

  // single-row configurations have no one-variable discriminant
  CHECK(runCli("adisc poly --A " + fx("ones_config.json")).code == 2);
  // a singular parameter on the base locus is an input error
  CHECK(runCli("adisc param --A " + fx("quad_config.json") + " --v 0 --t 1").code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
  const CliResult a = runCli("mldeg --f " + fx("circle.json") + " --seed 9");
  const CliResult b = runCli("mldeg --f " + fx("circle.json") + " --seed 9");
  CHECK(a.out == b.out);

  // the seed environment variable is the default seed
  const CliResult c = runCli("mldeg --f " + fx("circle.json") + " --seed 11");
  const CliResult d =
      runRaw("HORN_SEED=11 " + g_cli + " mldeg --f " + fx("circle.json") + " 2>/dev/null");
  CHECK(c.out == d.out);
  CHECK(parsed(c)["seed"] == 11);
}

TEST_CASE("json-out mirrors stdout to a file") {
  const std::string outPath = fixtureDir() + "/mirror.json";
  const CliResult r = runCli("adisc reduced --A " + fx("quad_config.json") + " --v 1 --json-out " + outPath);
  CHECK(r.code == 0);
  CHECK(horn::dumpJson(horn::readJsonFile(outPath)) == r.out);
}

TEST_CASE("usage errors exit with code 2 and help exits cleanly") {
  CHECK(runCli("").code == 2);              // missing subcommand
  CHECK(runCli("frobnicate").code == 2);    // unknown subcommand
  CHECK(runCli("mldeg").code == 2);         // missing required option
  CHECK(runCli("mldeg --f " + fx("circle.json") + " --bogus 1").code == 2);
  CHECK(runCli("--help").code == 0);
  CHECK(runCli("mldeg --help").code == 0);
  CHECK(runCli("--version").code == 0);
}

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && arg[0] != '-') {
      g_cli = arg;
      break;
    }
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli-binary> [doctest options]\n");
    return 1;
  }
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
