#include "tn2/generator.hpp"

#include <charconv>
#include <stdexcept>

namespace tn2 {

char family_symbol(Family f) {
  switch (f) {
    case Family::L: return 'L';
    case Family::H: return 'H';
    case Family::G: return 'G';
    case Family::Q: return 'Q';
  }
  return '?';
}

std::optional<Family> family_from_symbol(std::string_view s) {
  if (s == "L") return Family::L;
  if (s == "H") return Family::H;
  if (s == "G") return Family::G;
  if (s == "Q") return Family::Q;
  return std::nullopt;
}

std::string to_string(const Generator& g) {
  return std::string(1, family_symbol(g.family)) + "_" + std::to_string(g.index);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed range '" + std::string(whole) + "', expected lo..hi");
  }
  return value;
}

}  // namespace

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    throw std::invalid_argument("malformed range '" + std::string(text) + "', expected lo..hi");
  }
  IndexRange r{parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
  if (r.empty()) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::string to_string(const IndexRange& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

}  // namespace tn2
