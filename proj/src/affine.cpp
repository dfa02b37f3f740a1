#include "levelrank/affine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "levelrank/errors.hpp"

namespace levelrank {

AffinePermutation::AffinePermutation(std::vector<int> shifts, std::vector<int> perm)
    : shifts_(std::move(shifts)), perm_(std::move(perm)) {
  if (perm_.empty()) throw PreconditionError("affine permutation of rank 0");
  if (shifts_.size() != perm_.size()) {
    throw PreconditionError("affine permutation: " + std::to_string(shifts_.size()) +
                            " shifts but permutation of " + std::to_string(perm_.size()));
  }
  std::vector<bool> seen(perm_.size(), false);
  for (int v : perm_) {
    if (v < 0 || v >= rank() || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("affine permutation: one-line notation is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

AffinePermutation AffinePermutation::identity(int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  return {std::vector<int>(static_cast<std::size_t>(m), 0), std::move(perm)};
}

int AffinePermutation::max_shift() const noexcept {
  int best = 0;
  for (int v : shifts_) best = std::max(best, std::abs(v));
  return best;
}

std::size_t AffinePermutation::perm_index() const {
  // Lehmer code.
  std::size_t index = 0;
  const std::size_t m = perm_.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j) smaller += perm_[j] < perm_[i] ? 1 : 0;
    index = index * (m - i) + smaller;
  }
  return index;
}

std::string AffinePermutation::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < shifts_.size(); ++i) os << (i ? "," : "") << shifts_[i];
  os << ")∘[";
  const bool compact = perm_.size() <= 10;
  for (std::size_t i = 0; i < perm_.size(); ++i) os << (i && !compact ? "," : "") << perm_[i];
  os << ']';
  return os.str();
}

namespace {

std::vector<int> parse_int_list(std::string_view body, bool allow_compact) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : body) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  }
  if (cleaned.empty()) return out;
  if (allow_compact && cleaned.find(',') == std::string::npos) {
    for (char c : cleaned) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("bad one-line notation '" + std::string(body) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t comma = cleaned.find(',', start);
    if (comma == std::string::npos) comma = cleaned.size();
    const std::string token = cleaned.substr(start, comma - start);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError("bad integer '" + token + "' in '" + std::string(body) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

}  // namespace

AffinePermutation parse_affine(std::string_view text) {
  std::string s(text);
  // Normalize the composition sign: "∘" (U+2218) or a bare 'o'.
  for (const std::string sep : {"∘", "o"}) {
    if (auto pos = s.find(sep); pos != std::string::npos) {
      s.replace(pos, sep.size(), " ");
    }
  }
  std::optional<std::vector<int>> shifts;
  std::optional<std::vector<int>> perm;
  if (auto open = s.find('('); open != std::string::npos) {
    const auto close = s.find(')', open);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
    shifts = parse_int_list(std::string_view(s).substr(open + 1, close - open - 1), false);
  }
  if (auto open = s.find('['); open != std::string::npos) {
    const auto close = s.find(']', open);
    if (close == std::string::npos) throw ParseError("unbalanced '[' in '" + std::string(text) + "'");
    perm = parse_int_list(std::string_view(s).substr(open + 1, close - open - 1), true);
  }
  if (!shifts && !perm) throw ParseError("expected '(shifts)∘[perm]', got '" + std::string(text) + "'");
  if (!perm) {
    perm = std::vector<int>(shifts->size());
    std::iota(perm->begin(), perm->end(), 0);
  }
  if (!shifts) shifts = std::vector<int>(perm->size(), 0);
  try {
    return {std::move(*shifts), std::move(*perm)};
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::vector<int> act_on_charges(const AffinePermutation& w, std::span<const int> charges) {
  if (static_cast<int>(charges.size()) != w.rank()) {
    throw PreconditionError("act_on_charges: rank " + std::to_string(w.rank()) + " vs charge of length " +
                            std::to_string(charges.size()));
  }
  std::vector<int> out(charges.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = charges[static_cast<std::size_t>(w.perm()[i])] + w.shifts()[i];
  }
  return out;
}

Abacus act_on_abacus(const AffinePermutation& w, const Abacus& a) {
  if (a.runner_count() != w.rank()) {
    throw PreconditionError("act_on_abacus: rank " + std::to_string(w.rank()) + " vs " +
                            std::to_string(a.runner_count()) + " runners");
  }
  std::vector<BetaSet> runners;
  for (int i = 0; i < w.rank(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    runners.push_back(a.runner(w.perm()[k]).shifted(w.shifts()[k]));
  }
  return Abacus(std::move(runners));
}

ChargedMultipartition act_on_charged(const AffinePermutation& w, const ChargedMultipartition& cm) {
  return act_on_abacus(w, Abacus::from_charged(cm)).to_charged();
}

AffinePermutation compose(const AffinePermutation& w1, const AffinePermutation& w2) {
  if (w1.rank() != w2.rank()) throw PreconditionError("compose: rank mismatch");
  // (w1 (w2 s))_i = s_{s2(s1(i))} + v2_{s1(i)} + v1_i.
  std::vector<int> shifts(static_cast<std::size_t>(w1.rank()));
  std::vector<int> perm(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const auto j = static_cast<std::size_t>(w1.perm()[i]);
    perm[i] = w2.perm()[j];
    shifts[i] = w1.shifts()[i] + w2.shifts()[j];
  }
  return {std::move(shifts), std::move(perm)};
}

AffinePermutation invert(const AffinePermutation& w) {
  std::vector<int> shifts(static_cast<std::size_t>(w.rank()));
  std::vector<int> perm(shifts.size());
  for (std::size_t i = 0; i < shifts.size(); ++i) perm[static_cast<std::size_t>(w.perm()[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < shifts.size(); ++i) shifts[i] = -w.shifts()[static_cast<std::size_t>(perm[i])];
  return {std::move(shifts), std::move(perm)};
}

std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<AffinePermutation> enumerate_bounded(int m, int bound, const Limits& limits) {
  if (m < 1) throw PreconditionError("enumerate_bounded requires m >= 1");
  if (bound < 0) throw PreconditionError("enumerate_bounded requires bound >= 0");
  // Saturating product m! * (2*bound + 1)^m.
  std::size_t count = 1;
  bool over = false;
  auto mul = [&](std::size_t k) {
    if (count > limits.max_affine / k) over = true;
    else count *= k;
  };
  for (int i = 2; i <= m; ++i) mul(static_cast<std::size_t>(i));
  for (int i = 0; i < m; ++i) mul(static_cast<std::size_t>(2 * bound + 1));
  if (over || count > limits.max_affine) {
    throw LimitError("enumerate_bounded(" + std::to_string(m) + ", " + std::to_string(bound) +
                     ") exceeds max_affine = " + std::to_string(limits.max_affine));
  }
  std::vector<AffinePermutation> out;
  out.reserve(count);
  for (const auto& perm : all_permutations(m)) {
    std::vector<int> shifts(static_cast<std::size_t>(m), -bound);
    while (true) {
      out.emplace_back(shifts, perm);
      int pos = m - 1;
      while (pos >= 0 && shifts[static_cast<std::size_t>(pos)] == bound) {
        shifts[static_cast<std::size_t>(pos)] = -bound;
        --pos;
      }
      if (pos < 0) break;
      ++shifts[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

}  // namespace levelrank
