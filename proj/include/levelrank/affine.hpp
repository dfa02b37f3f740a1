#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levelrank/abacus.hpp"
#include "levelrank/limits.hpp"

namespace levelrank {

/// An element (v, sigma) of the extended affine symmetric group Z^m x| S_m.
///
/// Acting on an m-charge s it gives (w.s)_i = s_{sigma(i)} + v_i; on an abacus,
/// output runner i is input runner sigma(i) with every bead moved v_i places
/// to the right. `perm` is one-line notation: perm[i] = sigma(i).
class AffinePermutation {
 public:
  AffinePermutation() = default;
  /// Throws PreconditionError unless `perm` is a permutation of 0 .. m-1 and
  /// the lengths agree.
  AffinePermutation(std::vector<int> shifts, std::vector<int> perm);
  static AffinePermutation identity(int m);

  [[nodiscard]] int rank() const noexcept { return static_cast<int>(perm_.size()); }
  [[nodiscard]] const std::vector<int>& shifts() const noexcept { return shifts_; }
  [[nodiscard]] const std::vector<int>& perm() const noexcept { return perm_; }
  [[nodiscard]] int max_shift() const noexcept;
  /// Lexicographic rank of `perm` among all permutations of 0 .. m-1.
  [[nodiscard]] std::size_t perm_index() const;

  /// "(2,0,-1)∘[201]"; one-line entries are comma-separated when m > 10.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;

 private:
  std::vector<int> shifts_;
  std::vector<int> perm_;
};

/// Accepts "(2,0,-1)∘[201]", "(2,0,-1)o[201]", "[2,0,1]" (zero shifts) and
/// "(1,0)" (identity permutation).
AffinePermutation parse_affine(std::string_view text);

std::vector<int> act_on_charges(const AffinePermutation& w, std::span<const int> charges);
Abacus act_on_abacus(const AffinePermutation& w, const Abacus& a);
ChargedMultipartition act_on_charged(const AffinePermutation& w, const ChargedMultipartition& cm);

/// act(compose(w1, w2), x) == act(w1, act(w2, x)).
AffinePermutation compose(const AffinePermutation& w1, const AffinePermutation& w2);
AffinePermutation invert(const AffinePermutation& w);

/// Every (v, sigma) with max|v_i| <= bound; permutations in lexicographic
/// order, and for each permutation the shift vectors in lexicographic order.
/// Throws LimitError when m! * (2*bound + 1)^m exceeds limits.max_affine.
std::vector<AffinePermutation> enumerate_bounded(int m, int bound, const Limits& limits = {});

/// All permutations of 0 .. m-1 in lexicographic order.
std::vector<std::vector<int>> all_permutations(int m);

}  // namespace levelrank
