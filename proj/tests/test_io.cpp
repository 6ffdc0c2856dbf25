#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "horn/gale.hpp"
#include "horn/io.hpp"
#include "horn/mle.hpp"
#include "test_util.hpp"

using namespace horn;

namespace {

MultiPoly circle() {
  MultiPoly f(2);
  f.addTerm({2, 0}, 1);
  f.addTerm({0, 2}, 1);
  f.addTerm({0, 0}, -1);
  return f;
}

}  // namespace

TEST_CASE("integer matrices round-trip and freeze to canonical bytes") {
  const IntMatrix M = intMat(2, 3, {1, -2, 3, 0, 5, -6});
  const Json j = toJson(M);
  CHECK(intMatrixFromJson(j) == M);
  CHECK(dumpJson(j) ==
        "{\n"
        "  \"cols\": 3,\n"
        "  \"entries\": [\n"
        "    \"1\",\n"
        "    \"-2\",\n"
        "    \"3\",\n"
        "    \"0\",\n"
        "    \"5\",\n"
        "    \"-6\"\n"
        "  ],\n"
        "  \"rows\": 2\n"
        "}\n");
}

TEST_CASE("rational matrices and vectors round-trip") {
  RatMatrix M(2, 2);
  M(0, 0) = Rat(1, 2);
  M(0, 1) = Rat(-3);
  M(1, 0) = Rat(0);
  M(1, 1) = Rat(22, 7);
  CHECK(ratMatrixFromJson(toJson(M)) == M);

  const RatVector v = ratVec({Rat(21, 50), Rat(9, 50), Rat(7, 25), Rat(3, 25)});
  const Json jv = toJson(v);
  CHECK(jv.dump() == "[\"21/50\",\"9/50\",\"7/25\",\"3/25\"]");
  CHECK(ratVectorFromJson(jv) == v);

  const IntVector u = intVec({4, 2, 3, 1});
  CHECK(intVectorFromJson(toJson(u)) == u);
  // bare integer tokens are accepted on input
  CHECK(intVectorFromJson(parseJson("[4, 2, 3, 1]")) == u);
  CHECK(ratVectorFromJson(parseJson("[\"1/2\", 3]")) == ratVec({Rat(1, 2), Rat(3)}));
}

TEST_CASE("malformed matrices are rejected with a reason") {
  CHECK_THROWS_AS(intMatrixFromJson(parseJson("{\"rows\": 2, \"cols\": 2}")), InputError);
  CHECK_THROWS_AS(intMatrixFromJson(parseJson("{\"rows\": 2, \"cols\": 2, \"entries\": [\"1\"]}")),
                  InputError);
  CHECK_THROWS_AS(intMatrixFromJson(parseJson("{\"rows\": -1, \"cols\": 1, \"entries\": []}")),
                  InputError);
  CHECK_THROWS_AS(intVectorFromJson(parseJson("[\"1\", 2.5]")), InputError);
  CHECK_THROWS_AS(intVectorFromJson(parseJson("[\"one\"]")), InputError);
  CHECK_THROWS_AS(ratVectorFromJson(parseJson("[\"1/0\"]")), InputError);
}

TEST_CASE("polynomials serialize in canonical term order") {
  const Json j = toJson(circle());
  CHECK(j["vars"].dump() == "[\"p1\",\"p2\"]");
  // graded lexicographic: constant first, then p2^2 before p1^2
  CHECK(j["terms"].dump() ==
        "[{\"coeff\":\"-1\",\"exps\":[0,0]},"
        "{\"coeff\":\"1\",\"exps\":[0,2]},"
        "{\"coeff\":\"1\",\"exps\":[2,0]}]");
  CHECK(polyFromJson(j) == circle());

  // duplicate terms accumulate; explicit zero coefficients vanish
  const MultiPoly q = polyFromJson(parseJson(
      "{\"vars\": 2, \"terms\": [{\"coeff\": \"1\", \"exps\": [1, 0]},"
      " {\"coeff\": \"2\", \"exps\": [1, 0]}, {\"coeff\": \"0\", \"exps\": [0, 1]}]}"));
  MultiPoly expect(2);
  expect.addTerm({1, 0}, 3);
  CHECK(q == expect);

  CHECK_THROWS_AS(polyFromJson(parseJson("{\"vars\": 1, \"terms\": [{\"coeff\": \"1\"}]}")),
                  InputError);
  CHECK_THROWS_AS(
      polyFromJson(parseJson("{\"vars\": 1, \"terms\": [{\"coeff\": \"1\", \"exps\": [-1]}]}")),
      InputError);
  CHECK_THROWS_AS(
      polyFromJson(parseJson("{\"vars\": 2, \"terms\": [{\"coeff\": \"1\", \"exps\": [1]}]}")),
      ShapeError);
}

TEST_CASE("maps round-trip; reading skips validation so checkers see raw data") {
  const HornMap H = makeHornMap(ratVec({4, 4, 4, 4}), testutil::independenceB());
  const HornMap back = hornMapFromJson(toJson(H));
  CHECK(back.d == H.d);
  CHECK(back.B == H.B);

  // corrupted column sums load fine and then fail validation
  const HornMap bad = hornMapFromJson(parseJson(
      "{\"d\": [\"1\"], \"B\": {\"rows\": 2, \"cols\": 1, \"entries\": [\"1\", \"1\"]}}"));
  CHECK_FALSE(validateHornMap(bad.d, bad.B).pass());
  CHECK_THROWS_AS(makeHornMap(bad.d, bad.B), InputError);
}

TEST_CASE("factored maps round-trip through evaluation") {
  const HornMap H = makeHornMap(ratVec({-1, -1}), intMat(3, 2, {1, 0, 0, 1, -1, -1}));
  const FactoredMap F = presentAsFactored(H);
  const FactoredMap back = factoredMapFromJson(toJson(F));
  CHECK(back.m == F.m);
  REQUIRE(back.components.size() == F.components.size());
  const RatVector u = ratVec({3, 5});
  CHECK(evalFactored(back, u) == evalFactored(F, u));
  CHECK(recognize(back).has_value());
}

TEST_CASE("duality data round-trips and keeps its certificate") {
  Rng rng(11);
  const GaleData G = galeFromB(testutil::randomZeroColsumB(rng, 5, 3, 4));
  const GaleData back = galeDataFromJson(toJson(G));
  CHECK(back.B == G.B);
  CHECK(back.Bsat == G.Bsat);
  CHECK(back.C == G.C);
  CHECK(back.A == G.A);
  CHECK(verifyExactness(back).pass());

  Json j = toJson(G);
  j["k"] = 99;
  CHECK_THROWS_AS(galeDataFromJson(j), InputError);
}

TEST_CASE("certificates serialize with an overall verdict") {
  Certificate c;
  c.add("first", true, "");
  c.add("second", false, "off by one");
  const Json j = toJson(c);
  CHECK(j["pass"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["detail"] == "off by one");
  CHECK(dumpJson(j) == dumpJson(parseJson(dumpJson(j))));  // canonical fixed point
}

TEST_CASE("model specs round-trip through validation") {
  const ModelSpec& ind = findModel("independence");
  const ModelSpec back = modelSpecFromJson(toJson(ind));
  CHECK(back.name == "independence");
  CHECK(back.simplex);
  CHECK(back.horn.B == ind.horn.B);
  CHECK(back.equations.size() == 2);
  const RatVector p = estimate(back, makeCountVector(intVec({4, 2, 3, 1})));
  CHECK(p(0) == Rat(21, 50));

  // a registry is a list; an invalid member poisons the whole load
  Json registry = Json::array({toJson(findModel("line")), toJson(ind)});
  CHECK(modelListFromJson(registry).size() == 2);
  registry[0]["horn"]["d"][0] = "1";  // breaks the simplex claim
  CHECK_THROWS_AS(modelListFromJson(registry), InputError);
}

TEST_CASE("parse errors carry position diagnostics") {
  try {
    parseJson("{\"rows\": 2,, }");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("malformed JSON") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(readJsonFile("/nonexistent/path.json"), InputError);
}

TEST_CASE("files round-trip bytes exactly") {
  const std::string path = "io_roundtrip_tmp.json";
  const Json j = toJson(makeHornMap(ratVec({1, 1}), intMat(3, 2, {2, 0, 0, 1, -2, -1})));
  writeJsonFile(path, j);
  CHECK(readJsonFile(path) == j);
  std::remove(path.c_str());
}
