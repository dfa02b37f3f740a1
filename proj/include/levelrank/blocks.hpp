#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levelrank/abacus.hpp"
#include "levelrank/limits.hpp"

namespace levelrank {

/// Counts of node residues in Z/e.
struct ResidueMultiset {
  int modulus = 1;
  std::vector<int> counts;  // counts[i] = multiplicity of residue i

  [[nodiscard]] int total() const noexcept;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;
  friend auto operator<=>(const ResidueMultiset&, const ResidueMultiset&) = default;
};

/// Block invariant of an l-multipartition for Ariki-Koike parameters
/// (zeta, zeta^s) with zeta of multiplicative order e: two multipartitions
/// lie in the same block iff their keys compare equal.
struct BlockKey {
  int size = 0;
  int level = 1;
  int modulus = 1;
  std::vector<int> charge_mod;  // s reduced into [0, e)
  ResidueMultiset residues;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const BlockKey&, const BlockKey&) = default;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

struct Block {
  BlockKey key;
  std::vector<Multipartition> members;
};

/// Rank-e, level-l Uglov datum (K, r, a): `block` is the key of a block of
/// l-partitions of size K at parameters (eta_e, eta_e^r).
struct UglovDatum {
  int size = 0;
  std::vector<int> charge;
  BlockKey block;

  friend bool operator==(const UglovDatum&, const UglovDatum&) = default;
};

/// Node (c, i, j) of |pi, s> has residue (s_c + j - i) mod e.
ResidueMultiset residues(const ChargedMultipartition& cm, int e);
BlockKey block_key(const ChargedMultipartition& cm, int e);

/// All size-n l-multipartitions grouped by block at modulus e and charge s.
/// Blocks are sorted by key, members by enum_multipartitions order. Results
/// are memoized per (n, l, e, s mod e) and shared between threads.
std::shared_ptr<const std::vector<Block>> blocks_of(int n, int level, int e,
                                                    const std::vector<int>& charge,
                                                    const Limits& limits = {});

/// Members of the block with the given key, enumerated directly by residue
/// budget rather than by filtering all multipartitions. Member order matches
/// blocks_of. Throws LimitError past limits.max_multipartitions.
std::vector<Multipartition> block_members(const BlockKey& key, const Limits& limits = {});

/// Datum of |pi, r> with blocks at modulus e.
UglovDatum uglov_datum_of(const ChargedMultipartition& cm, int e);

/// Image of a rank-m, level-l datum under big_upsilon_ml(l, m): applies the
/// map to every member of the block and checks that all images share one
/// size, one m-charge and one block at modulus l. Throws TheoremViolation
/// naming the first disagreeing pair otherwise.
UglovDatum uglov_image(int l, int m, const UglovDatum& datum, const Limits& limits = {});

struct UglovInstance {
  UglovDatum source;
  std::size_t source_members = 0;
  std::optional<UglovDatum> image;
  std::size_t image_members = 0;
  bool single_valued = false;  // every member lands in one datum
  bool onto = false;           // the images fill the target block exactly
  bool round_trip = false;     // uglov_image(m, l, image) == source
  bool pass = false;
  std::string message;
};

struct UglovReport {
  int l = 1;
  int m = 1;
  int k_max = 0;
  int window = 1;
  std::vector<UglovInstance> instances;
  bool injective = true;  // distinct blocks of one (K, r) have distinct images
  bool pass = false;
  std::int64_t elapsed_us = 0;
};

/// Brute-force check that big_upsilon_ml(l, m) descends to a bijection of
/// Uglov data, for every K <= k_max and every l-charge with entries in
/// [0, window). Instances run on up to `threads` workers (0 = hardware);
/// output order is by (K, r, block key) regardless.
UglovReport verify_uglov(int l, int m, int k_max, int window, const Limits& limits = {},
                         unsigned threads = 0);

}  // namespace levelrank
