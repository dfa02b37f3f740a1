#include "levelrank/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "levelrank/errors.hpp"

namespace levelrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw PreconditionError("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::string Partition::shorthand() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i) os << ',';
    os << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ')';
  return os.str();
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("a multipartition needs at least one component");
}

Multipartition Multipartition::empty_of_level(int level) {
  if (level < 1) throw PreconditionError("multipartition level must be >= 1");
  return Multipartition(std::vector<Partition>(static_cast<std::size_t>(level)));
}

int Multipartition::size() const noexcept {
  int total = 0;
  for (const auto& p : components_) total += p.size();
  return total;
}

std::string Multipartition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].empty() ? "∅" : components_[i].str();
  }
  return out + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view digits, std::string_view entry) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
    throw ParseError("malformed partition entry '" + std::string(entry) + "'");
  }
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw ParseError("unbalanced parenthesis in '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return Partition{};

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view entry = trim(text.substr(start, comma - start));
    const std::size_t caret = entry.find('^');
    const int part = parse_positive(trim(entry.substr(0, caret)), entry);
    const int reps =
        caret == std::string_view::npos ? 1 : parse_positive(trim(entry.substr(caret + 1)), entry);
    if (!parts.empty() && part > parts.back()) {
      throw ParseError("partition entry '" + std::string(entry) + "' exceeds the entry before it");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(reps), part);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::vector<int> hook_lengths(const Partition& p) {
  const Partition c = conjugate(p);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.length(); ++i) {
    for (int j = 1; j <= p.part(i); ++j) {
      hooks.push_back((p.part(i) - j) + (c.part(j) - i) + 1);
    }
  }
  std::sort(hooks.rbegin(), hooks.rend());
  return hooks;
}

bool is_core(const Partition& p, int m) {
  if (m < 1) throw PreconditionError("is_core requires m >= 1");
  const auto hooks = hook_lengths(p);
  return std::none_of(hooks.begin(), hooks.end(), [m](int h) { return h % m == 0; });
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(static_cast<std::size_t>(p.part(1)), 0);
  for (int row : p.parts()) {
    for (int j = 0; j < row; ++j) ++parts[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(parts));
}

namespace {

// Reverse lexicographic: extend `prefix` with parts no larger than `cap`.
void enum_rec(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(cap, remaining); k >= 1; --k) {
    prefix.push_back(k);
    enum_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enum_partitions(int n, const Limits& limits) {
  if (n < 0) throw PreconditionError("enum_partitions requires n >= 0");
  if (n > limits.max_n) {
    throw LimitError("enum_partitions: n = " + std::to_string(n) + " exceeds max_n = " +
                     std::to_string(limits.max_n));
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enum_rec(n, n, prefix, out);
  return out;
}

namespace {

void compositions(int n, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    prefix.push_back(k);
    compositions(n - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multipartition> enum_multipartitions(int n, int level, const Limits& limits) {
  if (level < 1) throw PreconditionError("multipartition level must be >= 1");
  if (n < 0) throw PreconditionError("enum_multipartitions requires n >= 0");
  if (n > limits.max_n) {
    throw LimitError("enum_multipartitions: n = " + std::to_string(n) + " exceeds max_n = " +
                     std::to_string(limits.max_n));
  }
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = enum_partitions(k, limits);

  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  compositions(n, level, prefix, comps);

  std::size_t total = 0;
  for (const auto& c : comps) {
    std::size_t count = 1;
    for (int k : c) count *= by_size[static_cast<std::size_t>(k)].size();
    total += count;
    if (total > limits.max_multipartitions) {
      throw LimitError("enum_multipartitions(" + std::to_string(n) + ", " + std::to_string(level) +
                       ") exceeds max_multipartitions = " +
                       std::to_string(limits.max_multipartitions));
    }
  }

  std::vector<Multipartition> out;
  out.reserve(total);
  std::vector<Partition> current(static_cast<std::size_t>(level));
  for (const auto& c : comps) {
    // Last component varies fastest.
    auto fill = [&](auto& self, std::size_t i) -> void {
      if (i == current.size()) {
        out.emplace_back(current);
        return;
      }
      for (const auto& p : by_size[static_cast<std::size_t>(c[i])]) {
        current[i] = p;
        self(self, i + 1);
      }
    };
    fill(fill, 0);
  }
  return out;
}

}  // namespace levelrank
