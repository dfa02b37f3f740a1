#include "doctest.h"
#include "levelrank/errors.hpp"
#include "levelrank/gln.hpp"
#include "oracles.hpp"

using namespace levelrank;

namespace {

std::vector<Partition> parse_all(std::initializer_list<const char*> texts) {
  std::vector<Partition> out;
  for (const char* t : texts) out.push_back(parse_partition(t));
  return out;
}

const Partition kLambda{2, 2};
const Partition kMu{2};

}  // namespace

TEST_CASE("cuspidal data") {
  CHECK(CuspidalDatum(8, 4, kLambda).weyl_rank() == 1);
  CHECK(CuspidalDatum(8, 3, kMu).weyl_rank() == 2);
  CHECK_THROWS_AS(CuspidalDatum(8, 3, Partition({2, 1})), PreconditionError);
  CHECK_THROWS_AS(CuspidalDatum(8, 4, Partition({2})), PreconditionError);
  CHECK_THROWS_AS(CuspidalDatum(8, 2, Partition({3, 1})), PreconditionError);
}

TEST_CASE("Harish-Chandra series of GL_8") {
  CHECK(hc_series(8, 4, kLambda) == parse_all({"6,2", "5,3", "2^3,1^2", "2^2,1^4"}));
  CHECK(hc_series(8, 3, kMu) == parse_all({"8", "5,3", "5,2,1", "5,1^3", "4,3,1", "3^2,1^2", "2^4",
                                           "2^2,1^4", "2,1^6"}));
  CHECK(series_intersection(8, 4, kLambda, 3, kMu) == parse_all({"5,3", "2^2,1^4"}));
  // Every partition lies in exactly one series.
  for (int n = 0; n <= 10; ++n) {
    for (int m = 1; m <= 4; ++m) {
      std::size_t total = 0;
      for (const auto& core : cuspidal_cores(n, m)) total += hc_series(n, m, core).size();
      CHECK(total == enum_partitions(n).size());
    }
  }
}

TEST_CASE("shifted quotients and Hecke parameters") {
  CHECK(b_vector(4, kLambda) == std::vector<int>{0, 0, 1, 1});
  CHECK(b_vector(3, kMu) == std::vector<int>{0, 0, 1});
  CHECK(chi(Partition({5, 3}), 4, kLambda).charges == std::vector<int>{0, 0, 1, 1});
  CHECK(chi(Partition({5, 3}), 3, kMu).charges == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(chi(Partition({8}), 4, kLambda), PreconditionError);
  for (const auto& rho : hc_series(8, 3, kMu)) CHECK(chi(rho, 3, kMu).charges == b_vector(3, kMu));

  const HeckeSpec spec = hecke_spec(3, kMu);
  CHECK(spec.sigma_exponent == 3);
  CHECK(spec.exponents == std::vector<int>{0, 1, 5});

  CHECK(effective_charge(4, 3, kMu) == std::vector<int>{0, 3, 3});
  CHECK(effective_charge(3, 4, kLambda) == std::vector<int>{0, 1, 0, 1});
  CHECK_THROWS_AS(effective_charge(4, 2, Partition{}), PreconditionError);
  CHECK(gcd_int(12, 18) == 6);
}

TEST_CASE("GL_8 duality with the stated witnesses") {
  const auto w = std::pair(parse_affine("(1,0,0,-1)∘[1032]"), parse_affine("(2,0,-1)∘[201]"));
  const DualityReport r = verify_duality(8, 4, kLambda, 3, kMu, 4, w);
  CHECK(r.witness_source == WitnessSource::kSupplied);
  CHECK(r.diagram_ok);
  CHECK(r.single_block_ok);
  CHECK(r.left.block_size == 2);
  CHECK(r.right.block_size == 2);
  CHECK(r.left.effective == std::vector<int>{0, 1, 0, 1});
  CHECK(r.right.effective == std::vector<int>{0, 3, 3});
  CHECK(r.congruence_multiset);
  CHECK_FALSE(r.congruence_componentwise);
  CHECK(r.pass());

  // Recompute the square for the second member by hand.
  const Partition rho = parse_partition("2^2,1^4");
  const auto left = act_on_charged(w.first, chi(rho, 4, kLambda));
  const auto right = act_on_charged(w.second, chi(rho, 3, kMu));
  CHECK(big_upsilon_ml(4, 3, left) == right);
}

TEST_CASE("independent residue count for the GL_8 blocks") {
  const auto count_block = [](int level, int e, const std::vector<int>& s,
                              const ChargedMultipartition& probe) {
    const auto want = oracle::residue_counts(probe.components.components(), s, e);
    std::size_t members = 0;
    for (const auto& mp : enum_multipartitions(probe.components.size(), level)) {
      if (oracle::residue_counts(mp.components(), s, e) == want) ++members;
    }
    return members;
  };
  const auto left = chi(Partition({5, 3}), 4, kLambda);
  const auto right = chi(Partition({5, 3}), 3, kMu);
  CHECK(count_block(4, 3, {0, 1, 0, 1}, left) == 2);
  CHECK(count_block(3, 4, {0, 3, 3}, right) == 2);
}

TEST_CASE("witness search") {
  const DualityReport r = verify_duality(8, 4, kLambda, 3, kMu, 4);
  CHECK(r.witness_source == WitnessSource::kSearched);
  CHECK(r.pass());
  REQUIRE(r.w_l);
  REQUIRE(r.w_m);
  for (const auto& rho : r.intersection) {
    CHECK(big_upsilon_ml(4, 3, act_on_charged(*r.w_l, chi(rho, 4, kLambda))) ==
          act_on_charged(*r.w_m, chi(rho, 3, kMu)));
  }

  // A wrong witness fails the square.
  const auto bad = std::pair(AffinePermutation::identity(4), AffinePermutation::identity(3));
  CHECK_FALSE(verify_duality(8, 4, kLambda, 3, kMu, 4, bad).diagram_ok);

  CHECK_THROWS_AS(verify_duality(8, 4, kLambda, 2, Partition{}, 2), PreconditionError);
}

TEST_CASE("small sweeps") {
  for (auto [l, m] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto reports = duality_sweep(7, l, m, 4, {}, 1);
    CHECK_FALSE(reports.empty());
    for (const auto& r : reports) CHECK(r.pass());
  }
}
