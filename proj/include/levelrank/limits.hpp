#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace levelrank {

/// Bounds for every brute-force enumeration in the library.
struct Limits {
  int max_n = 40;                              // largest n accepted by enum_partitions
  std::size_t max_multipartitions = 200'000;   // multipartitions enumerated per instance
  std::size_t max_affine = 2'000'000;          // affine permutations enumerated per call
  int shift_bound = 4;                         // witness search radius
  std::uint64_t seed = 20240601;               // randomized sweeps

  friend bool operator==(const Limits&, const Limits&) = default;
};

/// Applies `key = value` assignments to `limits`. Lines or comma-separated
/// items are accepted; `#` starts a comment. Unknown keys and non-positive
/// values raise ParseError.
void apply_limits_text(Limits& limits, std::string_view text);

/// Defaults, then the optional config file, then LEVELRANK_LIMITS from the
/// environment (which wins).
Limits load_limits(const std::string& config_path = {});

}  // namespace levelrank
