#include "levelrank/limits.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "levelrank/errors.hpp"

namespace levelrank {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_value(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError("limits: bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

void apply_item(Limits& limits, std::string_view item) {
  item = trim(item);
  if (item.empty()) return;
  const auto eq = item.find('=');
  if (eq == std::string_view::npos) throw ParseError("limits: expected key = value, got '" + std::string(item) + "'");
  const auto key = trim(item.substr(0, eq));
  const auto value = trim(item.substr(eq + 1));
  if (key == "max_n") {
    limits.max_n = parse_value<int>(key, value);
    if (limits.max_n < 1) throw ParseError("limits: max_n must be positive");
  } else if (key == "max_multipartitions") {
    limits.max_multipartitions = parse_value<std::size_t>(key, value);
    if (limits.max_multipartitions == 0) throw ParseError("limits: max_multipartitions must be positive");
  } else if (key == "max_affine") {
    limits.max_affine = parse_value<std::size_t>(key, value);
    if (limits.max_affine == 0) throw ParseError("limits: max_affine must be positive");
  } else if (key == "shift_bound") {
    limits.shift_bound = parse_value<int>(key, value);
    if (limits.shift_bound < 0) throw ParseError("limits: shift_bound must be non-negative");
  } else if (key == "seed") {
    limits.seed = parse_value<std::uint64_t>(key, value);
  } else {
    throw ParseError("limits: unknown key '" + std::string(key) + "'");
  }
}

}  // namespace

void apply_limits_text(Limits& limits, std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find_first_of(",\n", start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    if (auto hash = item.find('#'); hash != std::string_view::npos) item = item.substr(0, hash);
    apply_item(limits, item);
    start = end + 1;
  }
}

Limits load_limits(const std::string& config_path) {
  Limits limits;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot read config file '" + config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_limits_text(limits, buf.str());
  }
  if (const char* env = std::getenv("LEVELRANK_LIMITS")) apply_limits_text(limits, env);
  return limits;
}

}  // namespace levelrank
