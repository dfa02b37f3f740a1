#pragma once
// Reference implementations that share no code with the library beyond the
// Partition value type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "levelrank/partition.hpp"

namespace oracle {

using levelrank::Partition;

/// p(n) by the pentagonal number recurrence.
inline std::int64_t partition_count(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t total = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > k) break;
      const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(k - g1)];
      if (g2 <= k) total += sign * p[static_cast<std::size_t>(k - g2)];
    }
    p[static_cast<std::size_t>(k)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

inline int column_length(const std::vector<int>& rows, int j) {
  int len = 0;
  for (int r : rows) {
    if (r >= j) ++len;
  }
  return len;
}

/// Removes rim hooks of length m, one at a time, until none is left.
inline Partition hook_removal_core(const Partition& p, int m) {
  std::vector<int> rows = p.parts();
  for (bool removed = true; removed;) {
    removed = false;
    for (int i = 1; i <= static_cast<int>(rows.size()) && !removed; ++i) {
      for (int j = 1; j <= rows[static_cast<std::size_t>(i - 1)] && !removed; ++j) {
        const int arm = rows[static_cast<std::size_t>(i - 1)] - j;
        const int last = column_length(rows, j);
        const int leg = last - i;
        if (arm + leg + 1 != m) continue;
        // The rim from (i, rows[i]) down to (last, j).
        for (int r = i; r < last; ++r) {
          rows[static_cast<std::size_t>(r - 1)] = rows[static_cast<std::size_t>(r)] - 1;
        }
        rows[static_cast<std::size_t>(last - 1)] = j - 1;
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        removed = true;
      }
    }
  }
  return Partition(rows);
}

/// Residue counts of the cells of a charged multipartition, cell by cell.
inline std::vector<int> residue_counts(const std::vector<Partition>& comps,
                                       const std::vector<int>& charges, int e) {
  std::vector<int> counts(static_cast<std::size_t>(e), 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int i = 1; i <= comps[c].length(); ++i) {
      for (int j = 1; j <= comps[c].part(i); ++j) {
        int r = (charges[c] + j - i) % e;
        if (r < 0) r += e;
        ++counts[static_cast<std::size_t>(r)];
      }
    }
  }
  return counts;
}

/// The beta-set of (p, s) restricted to [lo, hi], as an explicit set.
inline std::set<int> beads_window(const Partition& p, int s, int lo, int hi) {
  std::set<int> out;
  const int depth = std::max(p.length(), s - lo + 1) + 1;
  for (int i = 1; i <= depth; ++i) {
    const int b = p.part(i) - i + s;
    if (b >= lo && b <= hi) out.insert(b);
  }
  return out;
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Partition partition(int max_size) {
    int left = uniform(0, max_size);
    std::vector<int> parts;
    while (left > 0) {
      const int part = uniform(1, left);
      parts.push_back(part);
      left -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
  }

  std::vector<int> charges(int count, int bound) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(uniform(-bound, bound));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
