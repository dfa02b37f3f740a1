#include <map>

#include "doctest.h"
#include "levelrank/blocks.hpp"
#include "levelrank/errors.hpp"
#include "oracles.hpp"

using namespace levelrank;

namespace {

ChargedMultipartition charged(std::vector<Partition> comps, std::vector<int> charges) {
  return {Multipartition(std::move(comps)), std::move(charges)};
}

}  // namespace

TEST_CASE("residues") {
  const auto r = residues(charged({Partition({2, 1})}, {0}), 3);
  CHECK(r.counts == std::vector<int>{1, 1, 1});
  CHECK(r.total() == 3);
  const auto cells = residues(charged({Partition({1}), Partition{}, Partition({1}), Partition{}}, {0, 1, 0, 1}), 3);
  CHECK(cells.counts == std::vector<int>{2, 0, 0});
  CHECK(block_key(charged({Partition({1}), Partition{}, Partition{}, Partition{}}, {0, 1, 0, 1}), 3) ==
        block_key(charged({Partition{}, Partition{}, Partition({1}), Partition{}}, {0, 1, 0, 1}), 3));
  CHECK(block_key(charged({Partition({1}), Partition{}, Partition{}, Partition{}}, {0, 1, 0, 1}), 3) !=
        block_key(charged({Partition{}, Partition({1}), Partition{}, Partition{}}, {0, 1, 0, 1}), 3));
  CHECK(block_key(charged({Partition({2})}, {5}), 3).charge_mod == std::vector<int>{2});
}

TEST_CASE("residues agree with the cell oracle") {
  oracle::Generator gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int level = gen.uniform(1, 4);
    const int e = gen.uniform(1, 5);
    std::vector<Partition> comps;
    for (int i = 0; i < level; ++i) comps.push_back(gen.partition(7));
    const auto charges = gen.charges(level, 6);
    CHECK(residues(charged(comps, charges), e).counts == oracle::residue_counts(comps, charges, e));
  }
}

TEST_CASE("blocks of small sizes") {
  const auto zero = blocks_of(0, 3, 2, {0, 1, 1});
  REQUIRE(zero->size() == 1);
  CHECK(zero->front().members == std::vector<Multipartition>{Multipartition::empty_of_level(3)});

  const auto ones = blocks_of(1, 4, 3, {0, 1, 0, 1});
  REQUIRE(ones->size() == 2);
  CHECK((*ones)[0].members.size() == 2);
  CHECK((*ones)[1].members.size() == 2);

  const auto twos = blocks_of(2, 1, 2, {0});
  REQUIRE(twos->size() == 1);
  CHECK(twos->front().members.size() == 2);

  // With e = 1 all residues agree.
  CHECK(blocks_of(3, 2, 1, {0, 0})->size() == 1);
}

TEST_CASE("level one blocks are e-core classes") {
  for (int n = 0; n <= 12; ++n) {
    for (int e = 1; e <= 5; ++e) {
      const auto blocks = blocks_of(n, 1, e, {0});
      std::map<Partition, int> core_to_block;
      for (std::size_t b = 0; b < blocks->size(); ++b) {
        for (const auto& mp : (*blocks)[b].members) {
          const Partition core = oracle::hook_removal_core(mp[0], e);
          auto it = core_to_block.emplace(core, static_cast<int>(b));
          CHECK(it.first->second == static_cast<int>(b));
        }
      }
      CHECK(core_to_block.size() == blocks->size());
    }
  }
}

TEST_CASE("direct block enumeration matches grouping") {
  for (int level = 1; level <= 3; ++level) {
    for (int e = 1; e <= 4; ++e) {
      for (int n = 0; n <= 5; ++n) {
        std::vector<int> s;
        for (int i = 0; i < level; ++i) s.push_back(i * 2 % (e + 1));
        for (const auto& block : *blocks_of(n, level, e, s)) {
          CHECK(block_members(block.key) == block.members);
          for (const auto& mp : block.members) {
            CHECK(block_key(ChargedMultipartition(mp, s), e) == block.key);
          }
        }
      }
    }
  }
}

TEST_CASE("uglov data") {
  const auto cm = charged({Partition({1, 1}), Partition{}, Partition{}}, {3, 0, -1});
  const UglovDatum d = uglov_datum_of(cm, 4);
  CHECK(d.size == 2);
  CHECK(d.charge == std::vector<int>{3, 0, -1});
  const UglovDatum image = uglov_image(3, 4, d);
  const auto moved = big_upsilon_ml(3, 4, cm);
  CHECK(image == uglov_datum_of(moved, 3));
  CHECK(uglov_image(4, 3, image) == d);
}

TEST_CASE("uglov brute force on small ranks") {
  for (auto [l, m] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 2}}) {
    const UglovReport report = verify_uglov(l, m, 3, std::max(l, m), {}, 1);
    CHECK(report.pass);
    CHECK(report.injective);
    CHECK_FALSE(report.instances.empty());
    for (const auto& inst : report.instances) {
      CHECK(inst.pass);
      CHECK(inst.source_members == inst.image_members);
    }
  }
}
