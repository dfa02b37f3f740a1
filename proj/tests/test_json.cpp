#include "doctest.h"
#include "levelrank/errors.hpp"
#include "levelrank/json_io.hpp"
#include "levelrank/limits.hpp"

using namespace levelrank;

TEST_CASE("value round trips") {
  const Partition p{3, 3, 1};
  CHECK(json(p).dump() == "[3,3,1]");
  CHECK(json(p).get<Partition>() == p);

  const ChargedMultipartition cm(Multipartition({Partition({1, 1}), Partition{}, Partition{}}), {3, 0, -1});
  CHECK(json(cm).dump() == R"({"charges":[3,0,-1],"components":[[1,1],[],[]]})");
  CHECK(json(cm).get<ChargedMultipartition>() == cm);

  const AffinePermutation w({2, 0, -1}, {2, 0, 1});
  CHECK(json(w).dump() == R"({"perm":[2,0,1],"shifts":[2,0,-1]})");
  CHECK(json(w).get<AffinePermutation>() == w);

  const UglovDatum d = uglov_datum_of(cm, 4);
  CHECK(json(d).get<UglovDatum>() == d);
}

TEST_CASE("reports round trip") {
  const DualityReport r = verify_duality(8, 4, Partition({2, 2}), 3, Partition({2}), 4);
  const json j = r;
  CHECK(j.at("pass") == true);
  CHECK(j.at("witness_source") == "searched");
  const auto back = j.get<DualityReport>();
  CHECK(json(back) == j);
  CHECK(witness_source_from_name(witness_source_name(WitnessSource::kSearchExhausted)) ==
        WitnessSource::kSearchExhausted);

  const UglovReport u = verify_uglov(1, 2, 2, 2, {}, 1);
  CHECK(uglov_summary(u).at("status") == "PASS");
  for (const auto& inst : u.instances) {
    const json ji = inst;
    CHECK(json(ji.get<UglovInstance>()) == ji);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(json::parse("[1,3]").get<Partition>(), ParseError);
  CHECK_THROWS_AS(json::parse(R"({"components":[[1]],"charges":[0,1]})").get<ChargedMultipartition>(),
                  ParseError);
  CHECK_THROWS_AS(json::parse(R"({"shifts":[0],"perm":[1]})").get<AffinePermutation>(), ParseError);
  CHECK_THROWS_AS(json::parse(R"("x")").get<Partition>(), ParseError);
}

TEST_CASE("limits text") {
  Limits limits;
  apply_limits_text(limits, "max_n = 12, shift_bound=2\n# comment\nseed = 5");
  CHECK(limits.max_n == 12);
  CHECK(limits.shift_bound == 2);
  CHECK(limits.seed == 5);
  CHECK(limits.max_affine == Limits{}.max_affine);
  CHECK_THROWS_AS(apply_limits_text(limits, "unknown = 3"), ParseError);
  CHECK_THROWS_AS(apply_limits_text(limits, "max_n = -3"), ParseError);
  CHECK_THROWS_AS(apply_limits_text(limits, "max_n"), ParseError);
}
