#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "levelrank/partition.hpp"

namespace levelrank {

/// A charged subset of the integers that contains every sufficiently negative
/// integer and no sufficiently positive one. Held canonically as the pair
/// (partition, charge); bead membership is computed on demand:
///
///   n in beta  <=>  n = partition_i - i + charge for some i >= 1.
class BetaSet {
 public:
  BetaSet() = default;
  BetaSet(Partition partition, int charge) : partition_(std::move(partition)), charge_(charge) {}

  /// Builds the set `finite_beads` together with every n <= tail_top.
  static BetaSet from_beads(std::span<const int> finite_beads, int tail_top);
  /// Builds a set from a membership predicate, given that every n < lo is a
  /// bead and no n > hi is.
  static BetaSet from_predicate(int lo, int hi, const std::function<bool(int)>& contains);

  [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
  [[nodiscard]] int charge() const noexcept { return charge_; }

  [[nodiscard]] bool contains(int n) const noexcept;
  /// Every n <= tail_top() is a bead.
  [[nodiscard]] int tail_top() const noexcept { return charge_ - partition_.length() - 1; }
  /// Largest bead.
  [[nodiscard]] int max_bead() const noexcept { return partition_.part(1) - 1 + charge_; }
  /// Beads above the tail, in descending order.
  [[nodiscard]] std::vector<int> finite_beads() const;
  /// Beads in [lo, hi], ascending.
  [[nodiscard]] std::vector<int> beads_in(int lo, int hi) const;

  [[nodiscard]] BetaSet shifted(int by) const { return {partition_, charge_ + by}; }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  Partition partition_;
  int charge_ = 0;
};

/// A charged m-partition |pi, s>: m partitions and an m-charge.
struct ChargedMultipartition {
  Multipartition components;
  std::vector<int> charges;

  ChargedMultipartition() = default;
  /// Throws PreconditionError when the component and charge counts differ.
  ChargedMultipartition(Multipartition comps, std::vector<int> chs);

  [[nodiscard]] int level() const noexcept { return components.level(); }
  [[nodiscard]] int total_charge() const noexcept;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const ChargedMultipartition&, const ChargedMultipartition&) = default;
};

/// An m-runner abacus: m beta-sets, runner r = 0 .. m-1.
class Abacus {
 public:
  Abacus() = default;
  explicit Abacus(std::vector<BetaSet> runners);
  static Abacus from_charged(const ChargedMultipartition& cm);

  [[nodiscard]] const std::vector<BetaSet>& runners() const noexcept { return runners_; }
  [[nodiscard]] const BetaSet& runner(int r) const { return runners_.at(static_cast<std::size_t>(r)); }
  [[nodiscard]] int runner_count() const noexcept { return static_cast<int>(runners_.size()); }
  [[nodiscard]] ChargedMultipartition to_charged() const;

  /// Bead occupancy of runner-local positions q in [qlo, qhi]; row r is runner r.
  [[nodiscard]] std::vector<std::vector<bool>> bead_grid(int qlo, int qhi) const;

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  std::vector<BetaSet> runners_;
};

BetaSet beta_set(const Partition& p, int charge);
std::pair<Partition, int> from_beta(const BetaSet& b);

/// Runner r carries a bead at q iff m*q + r is a bead of `b`.
Abacus upsilon(int m, const BetaSet& b);
/// Inverse of upsilon for an abacus with any number of runners.
BetaSet upsilon_inv(const Abacus& a);

/// Exchanges runner count l for m: output runner r_m has a bead at l*q + r_l
/// iff input runner r_l has a bead at m*q + r_m. Throws PreconditionError if
/// `a` does not have l runners.
Abacus upsilon_ml(int l, int m, const Abacus& a);

ChargedMultipartition big_upsilon(int m, const Partition& p, int charge);
ChargedMultipartition big_upsilon_ml(int l, int m, const ChargedMultipartition& cm);

/// m-core by bead sliding; independent of the charge used internally.
Partition m_core(const Partition& p, int m);
/// The multipartition part of big_upsilon(m, p, charge).
Multipartition m_quotient(const Partition& p, int m, int charge = 0);

enum class AbacusStyle {
  kLabels,  // position value m*q + r at beads, `-` at gaps
  kGlyphs,  // `●` at beads, `-` at gaps
};

struct AbacusWindow {
  int qlo;
  int qhi;
};

/// Smallest window showing one generic bead below every runner's tail and the
/// largest bead of any runner.
AbacusWindow default_window(const Abacus& a);

/// One row per runner, r increasing downward. Rows start with `…` for the
/// infinite bead tail; columns are right-aligned to a common width. A window
/// that would hide a non-generic bead is widened.
std::string render_abacus(const Abacus& a, AbacusStyle style = AbacusStyle::kLabels);
std::string render_abacus(const Abacus& a, AbacusWindow window,
                          AbacusStyle style = AbacusStyle::kLabels);

/// Floor division and nonnegative remainder for possibly negative numerators.
constexpr int floor_div(int a, int b) noexcept {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr int floor_mod(int a, int b) noexcept { return a - b * floor_div(a, b); }

}  // namespace levelrank
