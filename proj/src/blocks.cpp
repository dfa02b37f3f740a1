#include "levelrank/blocks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "levelrank/errors.hpp"
#include "parallel.hpp"

namespace levelrank {

int ResidueMultiset::total() const noexcept {
  int t = 0;
  for (int c : counts) t += c;
  return t;
}

std::string ResidueMultiset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r] == 0) continue;
    os << (first ? "" : ", ") << r;
    if (counts[r] > 1) os << '^' << counts[r];
    first = false;
  }
  os << "} mod " << modulus;
  return os.str();
}

std::string BlockKey::str() const {
  std::ostringstream os;
  os << "N=" << size << " l=" << level << " e=" << modulus << " s=(";
  for (std::size_t i = 0; i < charge_mod.size(); ++i) os << (i ? "," : "") << charge_mod[i];
  os << ") res=" << residues.str();
  return os.str();
}

ResidueMultiset residues(const ChargedMultipartition& cm, int e) {
  if (e < 1) throw PreconditionError("residues require e >= 1");
  ResidueMultiset out{e, std::vector<int>(static_cast<std::size_t>(e), 0)};
  for (int c = 0; c < cm.level(); ++c) {
    const Partition& p = cm.components[static_cast<std::size_t>(c)];
    const int s = cm.charges[static_cast<std::size_t>(c)];
    for (int i = 1; i <= p.length(); ++i) {
      for (int j = 1; j <= p.part(i); ++j) ++out.counts[static_cast<std::size_t>(floor_mod(s + j - i, e))];
    }
  }
  return out;
}

namespace {

std::vector<int> reduce_charge(const std::vector<int>& charge, int e) {
  std::vector<int> out;
  out.reserve(charge.size());
  for (int s : charge) out.push_back(floor_mod(s, e));
  return out;
}

}  // namespace

BlockKey block_key(const ChargedMultipartition& cm, int e) {
  return {cm.components.size(), cm.level(), e, reduce_charge(cm.charges, e), residues(cm, e)};
}

namespace {

using MemoKey = std::tuple<int, int, int, std::vector<int>>;

struct BlockMemo {
  std::shared_mutex mutex;
  std::map<MemoKey, std::shared_ptr<const std::vector<Block>>> table;
};

BlockMemo& block_memo() {
  static BlockMemo memo;
  return memo;
}

}  // namespace

std::shared_ptr<const std::vector<Block>> blocks_of(int n, int level, int e,
                                                    const std::vector<int>& charge,
                                                    const Limits& limits) {
  if (static_cast<int>(charge.size()) != level) {
    throw PreconditionError("blocks_of: charge has " + std::to_string(charge.size()) +
                            " entries, level is " + std::to_string(level));
  }
  if (e < 1) throw PreconditionError("blocks_of requires e >= 1");
  MemoKey key{n, level, e, reduce_charge(charge, e)};
  auto& memo = block_memo();
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }

  const auto& reduced = std::get<3>(key);
  std::map<BlockKey, std::vector<Multipartition>> grouped;
  for (auto& mp : enum_multipartitions(n, level, limits)) {
    ChargedMultipartition cm(std::move(mp), reduced);
    grouped[block_key(cm, e)].push_back(std::move(cm.components));
  }
  auto blocks = std::make_shared<std::vector<Block>>();
  blocks->reserve(grouped.size());
  for (auto& [k, members] : grouped) blocks->push_back({k, std::move(members)});

  std::unique_lock lock(memo.mutex);
  auto [it, inserted] = memo.table.emplace(std::move(key), std::move(blocks));
  return it->second;
}

namespace {

// Depth-first search for multipartitions with a prescribed residue content.
class ResidueSearch {
 public:
  ResidueSearch(const BlockKey& key, std::size_t cap)
      : key_(key), budget_(key.residues.counts), remaining_(key.size), cap_(cap),
        current_(static_cast<std::size_t>(key.level)) {}

  std::vector<Multipartition> run() {
    component(0);
    return std::move(out_);
  }

 private:
  void component(int c) {
    if (c == key_.level) {
      if (remaining_ == 0) {
        if (out_.size() == cap_) {
          throw LimitError("block_members: block of " + key_.str() +
                           " exceeds max_multipartitions = " + std::to_string(cap_));
        }
        out_.emplace_back(current_);
      }
      return;
    }
    std::vector<int> rows;
    row(c, rows, remaining_);
  }

  // Extend component c by a row of length <= cap, or close the component.
  void row(int c, std::vector<int>& rows, int cap) {
    current_[static_cast<std::size_t>(c)] = Partition(rows);
    component(c + 1);
    const int i = static_cast<int>(rows.size()) + 1;
    const int s = key_.charge_mod[static_cast<std::size_t>(c)];
    // Cells (i, 1 .. len) have residues s + j - i; take them one at a time.
    int taken = 0;
    for (int len = 1; len <= std::min(cap, remaining_ + taken); ++len) {
      auto& slot = budget_[static_cast<std::size_t>(floor_mod(s + len - i, key_.modulus))];
      if (slot == 0) break;
      --slot;
      --remaining_;
      ++taken;
      rows.push_back(len);
      row(c, rows, len);
      rows.pop_back();
    }
    for (int len = 1; len <= taken; ++len) {
      ++budget_[static_cast<std::size_t>(floor_mod(s + len - i, key_.modulus))];
      ++remaining_;
    }
  }

  const BlockKey& key_;
  std::vector<int> budget_;
  int remaining_;
  std::size_t cap_;
  std::vector<Partition> current_;
  std::vector<Multipartition> out_;
};

// Order used by enum_multipartitions: component sizes descending, then
// components in reverse lexicographic order.
bool enumeration_before(const Multipartition& a, const Multipartition& b) {
  std::vector<int> sa;
  std::vector<int> sb;
  for (const auto& p : a.components()) sa.push_back(p.size());
  for (const auto& p : b.components()) sb.push_back(p.size());
  if (sa != sb) return sa > sb;
  return a > b;
}

}  // namespace

std::vector<Multipartition> block_members(const BlockKey& key, const Limits& limits) {
  if (key.level < 1 || key.modulus < 1 || static_cast<int>(key.charge_mod.size()) != key.level ||
      key.residues.modulus != key.modulus ||
      static_cast<int>(key.residues.counts.size()) != key.modulus) {
    throw PreconditionError("block_members: malformed block key " + key.str());
  }
  if (key.residues.total() != key.size) return {};
  auto members = ResidueSearch(key, limits.max_multipartitions).run();
  std::sort(members.begin(), members.end(), enumeration_before);
  return members;
}

UglovDatum uglov_datum_of(const ChargedMultipartition& cm, int e) {
  return {cm.components.size(), cm.charges, block_key(cm, e)};
}

namespace {

// Maps every member of `members` charged by `charge` and checks that the images
// share one datum at modulus l. Returns that datum and the images.
std::pair<UglovDatum, std::vector<Multipartition>> map_block(
    int l, int m, const std::vector<int>& charge, const std::vector<Multipartition>& members) {
  std::optional<UglovDatum> image;
  std::optional<ChargedMultipartition> first;
  std::vector<Multipartition> images;
  images.reserve(members.size());
  for (const auto& member : members) {
    ChargedMultipartition source(member, charge);
    ChargedMultipartition target = big_upsilon_ml(l, m, source);
    UglovDatum datum = uglov_datum_of(target, l);
    if (!image) {
      image = datum;
      first = source;
    } else if (!(datum == *image)) {
      throw TheoremViolation("members " + first->str() + " and " + source.str() +
                             " of one block map to different Uglov data (" + image->block.str() +
                             " vs " + datum.block.str() + ")");
    }
    images.push_back(std::move(target.components));
  }
  if (!image) throw PreconditionError("map_block: empty block");
  return {std::move(*image), std::move(images)};
}

}  // namespace

UglovDatum uglov_image(int l, int m, const UglovDatum& datum, const Limits& limits) {
  if (static_cast<int>(datum.charge.size()) != l || datum.block.level != l ||
      datum.block.modulus != m || datum.block.size != datum.size) {
    throw PreconditionError("uglov_image: datum is not a rank-" + std::to_string(m) + ", level-" +
                            std::to_string(l) + " Uglov datum");
  }
  if (reduce_charge(datum.charge, m) != datum.block.charge_mod) {
    throw PreconditionError("uglov_image: block key charge does not match the datum charge");
  }
  const auto members = block_members(datum.block, limits);
  if (members.empty()) throw PreconditionError("uglov_image: block " + datum.block.str() + " is empty");
  return map_block(l, m, datum.charge, members).first;
}

namespace {

std::vector<std::vector<int>> charge_box(int level, int window) {
  std::vector<std::vector<int>> out;
  std::vector<int> r(static_cast<std::size_t>(level), 0);
  while (true) {
    out.push_back(r);
    int pos = level - 1;
    while (pos >= 0 && r[static_cast<std::size_t>(pos)] == window - 1) r[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++r[static_cast<std::size_t>(pos)];
  }
  return out;
}

UglovInstance check_block(int l, int m, const std::vector<int>& charge, const Block& block,
                          const Limits& limits) {
  UglovInstance inst;
  inst.source = {block.key.size, charge, block.key};
  inst.source_members = block.members.size();
  try {
    auto [image, images] = map_block(l, m, charge, block.members);
    inst.single_valued = true;
    inst.image = image;
    auto target = block_members(image.block, limits);
    inst.image_members = target.size();
    std::sort(images.begin(), images.end());
    std::sort(target.begin(), target.end());
    inst.onto = images == target;
    if (!inst.onto) inst.message = "image does not fill the target block";
    inst.round_trip = inst.onto && uglov_image(m, l, image, limits) == inst.source;
    if (inst.onto && !inst.round_trip) inst.message = "inverse map does not return the source datum";
  } catch (const TheoremViolation& e) {
    inst.message = e.what();
  }
  inst.pass = inst.single_valued && inst.onto && inst.round_trip;
  return inst;
}

}  // namespace

UglovReport verify_uglov(int l, int m, int k_max, int window, const Limits& limits,
                         unsigned threads) {
  if (l < 1 || m < 1) throw PreconditionError("verify_uglov requires l, m >= 1");
  if (k_max < 0 || window < 1) throw PreconditionError("verify_uglov requires k_max >= 0, window >= 1");
  const auto start = std::chrono::steady_clock::now();

  struct Task {
    int k;
    std::vector<int> charge;
  };
  std::vector<Task> tasks;
  for (int k = 0; k <= k_max; ++k) {
    for (auto& r : charge_box(l, window)) tasks.push_back({k, std::move(r)});
  }

  std::vector<std::vector<UglovInstance>> results(tasks.size());
  std::vector<char> injective(tasks.size(), 1);
  detail::parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const auto& task = tasks[t];
    const auto blocks = blocks_of(task.k, l, m, task.charge, limits);
    std::vector<UglovDatum> seen;
    for (const auto& block : *blocks) {
      auto inst = check_block(l, m, task.charge, block, limits);
      if (inst.image) {
        if (std::find(seen.begin(), seen.end(), *inst.image) != seen.end()) {
          injective[t] = 0;
          inst.pass = false;
          inst.message = "two blocks share the image datum";
        }
        seen.push_back(*inst.image);
      }
      results[t].push_back(std::move(inst));
    }
  });

  UglovReport report{l, m, k_max, window, {}, true, true, 0};
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    report.injective = report.injective && injective[t];
    for (auto& inst : results[t]) {
      report.pass = report.pass && inst.pass;
      report.instances.push_back(std::move(inst));
    }
  }
  report.pass = report.pass && report.injective;
  report.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace levelrank
