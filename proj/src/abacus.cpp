#include "levelrank/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "levelrank/errors.hpp"

namespace levelrank {

bool BetaSet::contains(int n) const noexcept {
  if (n <= tail_top()) return true;
  // Beads above the tail are partition_i - i + charge for i = 1 .. length,
  // strictly decreasing in i.
  for (int i = 1; i <= partition_.length(); ++i) {
    const int bead = partition_.part(i) - i + charge_;
    if (bead == n) return true;
    if (bead < n) return false;
  }
  return false;
}

std::vector<int> BetaSet::finite_beads() const {
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(partition_.length()));
  for (int i = 1; i <= partition_.length(); ++i) beads.push_back(partition_.part(i) - i + charge_);
  return beads;
}

std::vector<int> BetaSet::beads_in(int lo, int hi) const {
  std::vector<int> beads;
  for (int n = lo; n <= hi; ++n) {
    if (contains(n)) beads.push_back(n);
  }
  return beads;
}

BetaSet BetaSet::from_predicate(int lo, int hi, const std::function<bool(int)>& contains) {
  // Charge is #{n >= 0 in beta} - #{n < 0 not in beta}; the scan must see 0.
  lo = std::min(lo, 0);
  hi = std::max(hi, 0);
  int charge = 0;
  std::vector<int> beads;  // descending, within [lo, hi]
  for (int n = hi; n >= lo; --n) {
    const bool in = contains(n);
    if (in) beads.push_back(n);
    if (n >= 0 && in) ++charge;
    if (n < 0 && !in) --charge;
  }
  // Beads continue below lo without gaps; beta_i = charge - i once part i is 0.
  std::vector<int> parts;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int part = beads[i] + static_cast<int>(i) + 1 - charge;
    if (part == 0) break;
    parts.push_back(part);
  }
  return {Partition(std::move(parts)), charge};
}

BetaSet BetaSet::from_beads(std::span<const int> finite_beads, int tail_top) {
  int lo = tail_top + 1;
  int hi = tail_top;
  for (int b : finite_beads) {
    lo = std::min(lo, b);
    hi = std::max(hi, b);
  }
  return from_predicate(lo, hi, [&](int n) {
    return n <= tail_top || std::find(finite_beads.begin(), finite_beads.end(), n) != finite_beads.end();
  });
}

ChargedMultipartition::ChargedMultipartition(Multipartition comps, std::vector<int> chs)
    : components(std::move(comps)), charges(std::move(chs)) {
  if (static_cast<int>(charges.size()) != components.level()) {
    throw PreconditionError("charged multipartition: " + std::to_string(components.level()) +
                            " components but " + std::to_string(charges.size()) + " charges");
  }
}

int ChargedMultipartition::total_charge() const noexcept {
  return std::accumulate(charges.begin(), charges.end(), 0);
}

std::string ChargedMultipartition::str() const {
  std::string out = "|" + components.str() + ", (";
  for (std::size_t i = 0; i < charges.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(charges[i]);
  }
  return out + ")⟩";
}

Abacus::Abacus(std::vector<BetaSet> runners) : runners_(std::move(runners)) {
  if (runners_.empty()) throw PreconditionError("an abacus needs at least one runner");
}

Abacus Abacus::from_charged(const ChargedMultipartition& cm) {
  std::vector<BetaSet> runners;
  runners.reserve(cm.charges.size());
  for (std::size_t i = 0; i < cm.charges.size(); ++i) {
    runners.emplace_back(cm.components[i], cm.charges[i]);
  }
  return Abacus(std::move(runners));
}

ChargedMultipartition Abacus::to_charged() const {
  std::vector<Partition> comps;
  std::vector<int> charges;
  for (const auto& r : runners_) {
    comps.push_back(r.partition());
    charges.push_back(r.charge());
  }
  return {Multipartition(std::move(comps)), std::move(charges)};
}

std::vector<std::vector<bool>> Abacus::bead_grid(int qlo, int qhi) const {
  std::vector<std::vector<bool>> grid;
  for (const auto& r : runners_) {
    std::vector<bool> row;
    for (int q = qlo; q <= qhi; ++q) row.push_back(r.contains(q));
    grid.push_back(std::move(row));
  }
  return grid;
}

BetaSet beta_set(const Partition& p, int charge) { return {p, charge}; }

std::pair<Partition, int> from_beta(const BetaSet& b) { return {b.partition(), b.charge()}; }

Abacus upsilon(int m, const BetaSet& b) {
  if (m < 1) throw PreconditionError("upsilon requires m >= 1");
  std::vector<BetaSet> runners;
  for (int r = 0; r < m; ++r) {
    const int lo = floor_div(b.tail_top() - r, m);
    const int hi = floor_div(b.max_bead() - r, m) + 1;
    runners.push_back(BetaSet::from_predicate(lo, hi, [&](int q) { return b.contains(m * q + r); }));
  }
  return Abacus(std::move(runners));
}

BetaSet upsilon_inv(const Abacus& a) {
  const int m = a.runner_count();
  int tail = a.runner(0).tail_top();
  int top = a.runner(0).max_bead();
  for (const auto& r : a.runners()) {
    tail = std::min(tail, r.tail_top());
    top = std::max(top, r.max_bead());
  }
  return BetaSet::from_predicate(m * tail, m * top + m, [&](int n) {
    return a.runner(floor_mod(n, m)).contains(floor_div(n, m));
  });
}

Abacus upsilon_ml(int l, int m, const Abacus& a) {
  if (l < 1 || m < 1) throw PreconditionError("upsilon_ml requires l, m >= 1");
  if (a.runner_count() != l) {
    throw PreconditionError("upsilon_ml: expected " + std::to_string(l) + " runners, got " +
                            std::to_string(a.runner_count()));
  }
  int tail = a.runner(0).tail_top();
  int top = a.runner(0).max_bead();
  for (const auto& r : a.runners()) {
    tail = std::min(tail, r.tail_top());
    top = std::max(top, r.max_bead());
  }
  std::vector<BetaSet> runners;
  for (int rm = 0; rm < m; ++rm) {
    // p = l*q + rl is a bead whenever m*q + rm <= tail and never once m*q + rm > top.
    const int lo = l * floor_div(tail - rm, m);
    const int hi = l * (floor_div(top - rm, m) + 1);
    runners.push_back(BetaSet::from_predicate(lo, hi, [&](int p) {
      return a.runner(floor_mod(p, l)).contains(m * floor_div(p, l) + rm);
    }));
  }
  return Abacus(std::move(runners));
}

ChargedMultipartition big_upsilon(int m, const Partition& p, int charge) {
  return upsilon(m, beta_set(p, charge)).to_charged();
}

ChargedMultipartition big_upsilon_ml(int l, int m, const ChargedMultipartition& cm) {
  if (cm.level() != l) {
    throw PreconditionError("big_upsilon_ml: expected " + std::to_string(l) + " components, got " +
                            std::to_string(cm.level()));
  }
  return upsilon_ml(l, m, Abacus::from_charged(cm)).to_charged();
}

Partition m_core(const Partition& p, int m) {
  if (m < 1) throw PreconditionError("m_core requires m >= 1");
  // Slide every runner left: keep the runner charges, drop the partitions.
  const Abacus a = upsilon(m, beta_set(p, 0));
  std::vector<BetaSet> slid;
  for (const auto& r : a.runners()) slid.emplace_back(Partition{}, r.charge());
  return upsilon_inv(Abacus(std::move(slid))).partition();
}

Multipartition m_quotient(const Partition& p, int m, int charge) {
  return big_upsilon(m, p, charge).components;
}

AbacusWindow default_window(const Abacus& a) {
  int tail = a.runner(0).tail_top();
  int top = a.runner(0).max_bead();
  for (const auto& r : a.runners()) {
    tail = std::min(tail, r.tail_top());
    top = std::max(top, r.max_bead());
  }
  return {tail - 1, std::max(top, tail)};
}

std::string render_abacus(const Abacus& a, AbacusStyle style) {
  return render_abacus(a, default_window(a), style);
}

std::string render_abacus(const Abacus& a, AbacusWindow window, AbacusStyle style) {
  const AbacusWindow needed = default_window(a);
  window.qlo = std::min(window.qlo, needed.qlo);
  window.qhi = std::max(window.qhi, needed.qhi);
  const int m = a.runner_count();

  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (int r = 0; r < m; ++r) {
    std::vector<std::string> row;
    for (int q = window.qlo; q <= window.qhi; ++q) {
      std::string cell = "-";
      if (a.runner(r).contains(q)) {
        cell = style == AbacusStyle::kLabels ? std::to_string(m * q + r) : "●";
      }
      if (style == AbacusStyle::kLabels) width = std::max(width, cell.size());
      row.push_back(std::move(cell));
    }
    cells.push_back(std::move(row));
  }

  std::ostringstream os;
  for (const auto& row : cells) {
    os << "…";
    for (const auto& cell : row) {
      const std::size_t shown = style == AbacusStyle::kLabels ? cell.size() : 1;
      os << ' ' << std::string(width - std::min(width, shown), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace levelrank
