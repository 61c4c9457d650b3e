#include "hornup/universe.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "hornup/errors.hpp"

namespace hornup {

Universe::Universe() : names_(std::make_shared<const std::vector<std::string>>()) {}

Universe::Universe(std::vector<std::string> names) {
  if (names.size() > kMaxAttributes) {
    throw ParseError(0, "too many attributes (" + std::to_string(names.size()) + ", limit " +
                            std::to_string(kMaxAttributes) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) throw ParseError(0, "empty attribute label");
    if (!seen.insert(name).second) throw ParseError(0, "duplicate attribute label '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Universe Universe::indexed(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (n <= 26) {
      names.emplace_back(1, static_cast<char>('a' + i));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return Universe(std::move(names));
}

std::optional<Attr> Universe::index_of(std::string_view label) const {
  auto it = std::find(names_->begin(), names_->end(), label);
  if (it == names_->end()) return std::nullopt;
  return static_cast<Attr>(it - names_->begin());
}

Universe Universe::extended(const std::string& label) const {
  std::vector<std::string> names = *names_;
  names.push_back(label);
  return Universe(std::move(names));
}

std::string Universe::format(AttrSet s, std::string_view sep) const {
  std::string out;
  for (Attr a : s) {
    if (!out.empty()) out += sep;
    out += label(a);
  }
  return out;
}

AttrSet Universe::parse_set(std::string_view text) const {
  AttrSet s;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      auto token = text.substr(i, j - i);
      auto idx = index_of(token);
      if (!idx) throw ParseError(0, "unknown attribute '" + std::string(token) + "' in set literal");
      s.insert(*idx);
    }
    i = j;
  }
  return s;
}

}  // namespace hornup
