#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levelrank/limits.hpp"

namespace levelrank {

/// An integer partition, stored as its nonzero parts in weakly decreasing
/// order. Zero padding is never stored, so equality is plain vector equality.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order throws
  /// PreconditionError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// 1-based part access with the usual zero padding: part(i) = 0 for i > length.
  [[nodiscard]] int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// "(3,3,1)"; the empty partition prints as "()".
  [[nodiscard]] std::string str() const;
  /// Exponent shorthand, "(3^2,1)".
  [[nodiscard]] std::string shorthand() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// An m-tuple of partitions, components indexed 0 .. m-1.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  /// The empty m-partition.
  static Multipartition empty_of_level(int level);

  [[nodiscard]] const std::vector<Partition>& components() const noexcept { return components_; }
  [[nodiscard]] const Partition& operator[](std::size_t i) const { return components_.at(i); }
  [[nodiscard]] int level() const noexcept { return static_cast<int>(components_.size()); }
  [[nodiscard]] int size() const noexcept;
  [[nodiscard]] bool is_empty() const noexcept { return size() == 0; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Partition> components_;
};

/// Parses comma-separated entries `k` or `k^e` (k, e >= 1), optionally wrapped
/// in parentheses, e.g. "3^2,1" or "(2^2, 1^4)". The empty string and "()"
/// give the empty partition. Throws ParseError naming the offending entry.
Partition parse_partition(std::string_view text);

/// Multiset of hook lengths arm + leg + 1, one per cell, in descending order.
std::vector<int> hook_lengths(const Partition& p);

/// True iff no hook length of `p` is divisible by m (m >= 1).
bool is_core(const Partition& p, int m);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ... , (1^n).
std::vector<Partition> enum_partitions(int n, const Limits& limits = {});

Partition conjugate(const Partition& p);

/// All l-multipartitions of total size n. Ordered by component-size
/// composition (lexicographically decreasing), then componentwise reverse
/// lexicographic order. Throws LimitError past limits.max_multipartitions.
std::vector<Multipartition> enum_multipartitions(int n, int level, const Limits& limits = {});

}  // namespace levelrank
