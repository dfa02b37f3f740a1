#include "levelrank/gln.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "levelrank/errors.hpp"
#include "parallel.hpp"

namespace levelrank {

int gcd_int(int a, int b) { return std::gcd(a, b); }

CuspidalDatum::CuspidalDatum(int n, int m, Partition mu) : n_(n), m_(m), mu_(std::move(mu)) {
  if (n < 0 || m < 1) throw PreconditionError("cuspidal datum requires n >= 0 and m >= 1");
  if (!is_core(mu_, m)) {
    throw PreconditionError("invalid cuspidal datum: " + mu_.str() + " is not a " + std::to_string(m) + "-core");
  }
  if (mu_.size() > n || (n - mu_.size()) % m != 0) {
    throw PreconditionError("invalid cuspidal datum: |" + mu_.str() + "| = " + std::to_string(mu_.size()) +
                            " is not <= " + std::to_string(n) + " and congruent to it mod " +
                            std::to_string(m));
  }
}

std::vector<Partition> hc_series(int n, int m, const Partition& mu, const Limits& limits) {
  const CuspidalDatum datum(n, m, mu);
  std::vector<Partition> out;
  for (auto& rho : enum_partitions(n, limits)) {
    if (m_core(rho, m) == datum.mu()) out.push_back(std::move(rho));
  }
  return out;
}

ChargedMultipartition chi(const Partition& rho, int m, const Partition& mu) {
  if (m < 1) throw PreconditionError("chi requires m >= 1");
  if (m_core(rho, m) != mu) {
    throw PreconditionError("chi: the " + std::to_string(m) + "-core of " + rho.str() + " is not " + mu.str());
  }
  return big_upsilon(m, rho, mu.length());
}

std::vector<int> b_vector(int m, const Partition& mu) {
  if (m < 1) throw PreconditionError("b_vector requires m >= 1");
  if (!is_core(mu, m)) throw PreconditionError("b_vector: " + mu.str() + " is not a " + std::to_string(m) + "-core");
  return big_upsilon(m, mu, mu.length()).charges;
}

HeckeSpec hecke_spec(int m, const Partition& mu) {
  HeckeSpec spec{m, b_vector(m, mu), m, {}};
  for (int j = 0; j < m; ++j) spec.exponents.push_back(m * spec.b[static_cast<std::size_t>(j)] + j);
  return spec;
}

namespace {

int inverse_mod(int a, int modulus) {
  // Extended Euclid; assumes gcd(a, modulus) == 1.
  int r0 = modulus, r1 = floor_mod(a, modulus);
  int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const int q = r0 / r1;
    std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
  }
  return floor_mod(t0, modulus);
}

void require_coprime(int l, int m) {
  if (l < 1 || m < 1) throw PreconditionError("l and m must be positive");
  if (std::gcd(l, m) != 1) {
    throw PreconditionError("l = " + std::to_string(l) + " and m = " + std::to_string(m) +
                            " are not coprime");
  }
}

}  // namespace

std::vector<int> effective_charge(int l, int m, const Partition& mu) {
  require_coprime(l, m);
  const auto b = b_vector(m, mu);
  const int inv = inverse_mod(m, l);
  std::vector<int> s;
  for (int j = 0; j < m; ++j) s.push_back(floor_mod(b[static_cast<std::size_t>(j)] + inv * j, l));
  return s;
}

std::vector<Partition> series_intersection(int n, int l, const Partition& lambda, int m,
                                           const Partition& mu, const Limits& limits) {
  const auto left = hc_series(n, l, lambda, limits);
  const auto right = hc_series(n, m, mu, limits);
  std::vector<Partition> out;
  for (const auto& rho : left) {
    if (std::find(right.begin(), right.end(), rho) != right.end()) out.push_back(rho);
  }
  return out;
}

std::vector<Partition> cuspidal_cores(int n, int m, const Limits& limits) {
  std::vector<Partition> out;
  for (int k = n; k >= 0; k -= m) {
    for (auto& p : enum_partitions(k, limits)) {
      if (is_core(p, m)) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// Multiset reading of  rank * (w . b) = rank * b + (0, 1, ..) (mod modulus), and
// the componentwise one.
std::pair<bool, bool> congruence(int rank, int modulus, const std::vector<int>& b,
                                 const std::vector<int>& twisted) {
  std::vector<int> lhs;
  std::vector<int> rhs;
  for (std::size_t j = 0; j < b.size(); ++j) {
    lhs.push_back(floor_mod(rank * twisted[j], modulus));
    rhs.push_back(floor_mod(rank * b[j] + static_cast<int>(j), modulus));
  }
  const bool componentwise = lhs == rhs;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  return {componentwise, lhs == rhs};
}

bool multiset_congruent(int rank, int modulus, const std::vector<int>& b, const AffinePermutation& w) {
  return congruence(rank, modulus, b, act_on_charges(w, b)).second;
}

// Key ordering witnesses by (max shift, perm index, shifts).
auto witness_order(const AffinePermutation& w) {
  return std::make_tuple(w.max_shift(), w.perm_index(), w.shifts());
}

// Every affine permutation with max shift <= bound, ordered by witness_order.
// Shared between calls and threads.
std::shared_ptr<const std::vector<AffinePermutation>> ordered_witnesses(int rank, int bound,
                                                                        const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<AffinePermutation>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({rank, bound}); it != cache.end()) {
      if (it->second->size() > limits.max_affine) {
        throw LimitError("witness search space exceeds max_affine = " + std::to_string(limits.max_affine));
      }
      return it->second;
    }
  }
  auto all = enumerate_bounded(rank, bound, limits);
  using Key = std::tuple<int, std::size_t, std::vector<int>>;
  std::vector<std::pair<Key, std::size_t>> keyed;
  keyed.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) keyed.emplace_back(witness_order(all[i]), i);
  std::sort(keyed.begin(), keyed.end());
  auto sorted = std::make_shared<std::vector<AffinePermutation>>();
  sorted->reserve(all.size());
  for (const auto& [key, i] : keyed) sorted->push_back(std::move(all[i]));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(rank, bound), std::move(sorted)).first->second;
}

// All w with w . source[k] == target[k] for every k and max shift <= bound.
std::vector<AffinePermutation> solve_witness(const std::vector<ChargedMultipartition>& source,
                                             const std::vector<ChargedMultipartition>& target,
                                             int rank, int bound) {
  // Candidates (j, v) for each output runner i.
  std::vector<std::vector<std::pair<int, int>>> options(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::optional<int> shift;
      bool ok = true;
      for (std::size_t k = 0; k < source.size() && ok; ++k) {
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        if (source[k].components[uj] != target[k].components[ui]) {
          ok = false;
          break;
        }
        const int v = target[k].charges[ui] - source[k].charges[uj];
        if (shift && *shift != v) ok = false;
        shift = v;
      }
      if (ok && shift && std::abs(*shift) <= bound) options[static_cast<std::size_t>(i)].emplace_back(j, *shift);
    }
  }
  std::vector<AffinePermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::vector<int> shifts(static_cast<std::size_t>(rank));
  std::vector<bool> used(static_cast<std::size_t>(rank), false);
  auto assign = [&](auto& self, int i) -> void {
    if (i == rank) {
      out.emplace_back(shifts, perm);
      return;
    }
    for (auto [j, v] : options[static_cast<std::size_t>(i)]) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      perm[static_cast<std::size_t>(i)] = j;
      shifts[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return witness_order(a) < witness_order(b);
  });
  return out;
}

bool diagram_commutes(int l, int m, const std::vector<ChargedMultipartition>& left,
                      const std::vector<ChargedMultipartition>& right, const AffinePermutation& w_l,
                      const AffinePermutation& w_m) {
  for (std::size_t k = 0; k < left.size(); ++k) {
    if (big_upsilon_ml(l, m, act_on_charged(w_l, left[k])) != act_on_charged(w_m, right[k])) return false;
  }
  return true;
}

void fill_side(SideReport& side, int level, int modulus, const Partition& core,
               const std::vector<Partition>& intersection, const Limits& limits) {
  side.level = level;
  side.modulus = modulus;
  side.b = b_vector(level, core);
  side.effective = effective_charge(modulus, level, core);
  for (const auto& rho : intersection) side.images.push_back(chi(rho, level, core));
  if (side.images.empty()) {
    side.single_block = true;
    return;
  }
  std::vector<Multipartition> comps;
  std::optional<BlockKey> key;
  bool same = true;
  for (const auto& image : side.images) {
    if (image.charges != side.b) {
      throw TheoremViolation("chi image " + image.str() + " does not carry the charge b_" +
                             std::to_string(level) + "(" + core.str() + ")");
    }
    const BlockKey k = block_key(ChargedMultipartition(image.components, side.effective), modulus);
    if (key && !(k == *key)) same = false;
    if (!key) key = k;
    comps.push_back(image.components);
  }
  if (!same) return;
  auto members = block_members(*key, limits);
  std::sort(members.begin(), members.end());
  std::sort(comps.begin(), comps.end());
  side.block = key;
  side.block_size = members.size();
  side.single_block = members == comps;
}

void fill_congruence(SideReport& side, const AffinePermutation& w) {
  side.twisted = act_on_charges(w, side.b);
  std::tie(side.congruence_componentwise, side.congruence_multiset) =
      congruence(side.level, side.modulus, side.b, side.twisted);
}

}  // namespace

DualityReport verify_duality(
    int n, int l, const Partition& lambda, int m, const Partition& mu, int shift_bound,
    const std::optional<std::pair<AffinePermutation, AffinePermutation>>& witnesses,
    const Limits& limits) {
  require_coprime(l, m);
  if (shift_bound < 0) throw PreconditionError("shift_bound must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const CuspidalDatum left_datum(n, l, lambda);
  const CuspidalDatum right_datum(n, m, mu);

  DualityReport report;
  report.n = n;
  report.l = l;
  report.lambda = lambda;
  report.m = m;
  report.mu = mu;
  report.shift_bound = shift_bound;
  report.intersection = series_intersection(n, l, lambda, m, mu, limits);
  fill_side(report.left, l, m, lambda, report.intersection, limits);
  fill_side(report.right, m, l, mu, report.intersection, limits);
  report.single_block_ok = report.left.single_block && report.right.single_block;

  const auto& left_images = report.left.images;
  const auto& right_images = report.right.images;

  if (witnesses) {
    const auto& [w_l, w_m] = *witnesses;
    if (w_l.rank() != l || w_m.rank() != m) {
      throw PreconditionError("witness ranks must be l = " + std::to_string(l) + " and m = " + std::to_string(m));
    }
    report.w_l = w_l;
    report.w_m = w_m;
    report.witness_source = WitnessSource::kSupplied;
    report.diagram_ok = diagram_commutes(l, m, left_images, right_images, w_l, w_m);
  } else {
    const auto& b_l = report.left.b;
    const auto& b_m = report.right.b;
    std::optional<std::pair<AffinePermutation, AffinePermutation>> found;
    std::optional<std::pair<AffinePermutation, AffinePermutation>> fallback;
    const auto left_pool = ordered_witnesses(l, shift_bound, limits);
    const auto& left_candidates = *left_pool;

    if (left_images.empty()) {
      // No diagram constraint: pick each side by congruence alone.
      const auto right_pool = ordered_witnesses(m, shift_bound, limits);
      const auto& right_candidates = *right_pool;
      auto pick = [](const auto& cands, auto pred) {
        auto it = std::find_if(cands.begin(), cands.end(), pred);
        return it == cands.end() ? cands.front() : *it;
      };
      found = std::make_pair(
          pick(left_candidates, [&](const auto& w) { return multiset_congruent(l, m, b_l, w); }),
          pick(right_candidates, [&](const auto& w) { return multiset_congruent(m, l, b_m, w); }));
    } else {
      // Congruent candidates first; the first commuting pair of any kind is
      // kept as a fallback.
      for (int pass = 0; pass < 2 && !found; ++pass) {
        for (const auto& w_l : left_candidates) {
          const bool left_ok = multiset_congruent(l, m, b_l, w_l);
          if (pass == 0 && !left_ok) continue;
          if (pass == 1 && fallback) break;
          std::vector<ChargedMultipartition> targets;
          for (const auto& image : left_images) targets.push_back(big_upsilon_ml(l, m, act_on_charged(w_l, image)));
          const auto solutions = solve_witness(right_images, targets, m, shift_bound);
          if (solutions.empty()) continue;
          if (!fallback) fallback = std::make_pair(w_l, solutions.front());
          if (!left_ok) continue;
          auto it = std::find_if(solutions.begin(), solutions.end(),
                                 [&](const auto& w_m) { return multiset_congruent(m, l, b_m, w_m); });
          if (it != solutions.end()) {
            found = std::make_pair(w_l, *it);
            break;
          }
        }
      }
      if (!found) found = fallback;
    }

    if (found) {
      report.w_l = found->first;
      report.w_m = found->second;
      report.witness_source = WitnessSource::kSearched;
      report.diagram_ok = true;
    } else {
      report.witness_source = WitnessSource::kSearchExhausted;
    }
  }

  if (report.w_l && report.w_m) {
    fill_congruence(report.left, *report.w_l);
    fill_congruence(report.right, *report.w_m);
  }
  report.congruence_componentwise = report.left.congruence_componentwise && report.right.congruence_componentwise;
  report.congruence_multiset = report.left.congruence_multiset && report.right.congruence_multiset;
  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<DualityReport> duality_sweep(int n_max, int l, int m, int shift_bound, const Limits& limits,
                                         unsigned threads) {
  require_coprime(l, m);
  struct Instance {
    int n;
    Partition lambda;
    Partition mu;
  };
  std::vector<Instance> instances;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& lambda : cuspidal_cores(n, l, limits)) {
      for (const auto& mu : cuspidal_cores(n, m, limits)) instances.push_back({n, lambda, mu});
    }
  }
  std::vector<DualityReport> reports(instances.size());
  detail::parallel_for(instances.size(), threads, [&](std::size_t i) {
    const auto& inst = instances[i];
    reports[i] = verify_duality(inst.n, l, inst.lambda, m, inst.mu, shift_bound, std::nullopt, limits);
  });
  return reports;
}

}  // namespace levelrank
