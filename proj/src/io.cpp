#include "hornup/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hornup/errors.hpp"

namespace hornup {
namespace {

constexpr std::string_view kUniverseDirective = "universe:";

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) words.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// "# universe: a b c" -> labels, otherwise nullopt.
std::optional<std::vector<std::string>> universe_directive(std::string_view line) {
  auto hash = line.find('#');
  if (hash == std::string_view::npos) return std::nullopt;
  if (!split_words(line.substr(0, hash)).empty()) return std::nullopt;
  auto rest = line.substr(hash + 1);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  if (rest.substr(0, kUniverseDirective.size()) != kUniverseDirective) return std::nullopt;
  return split_words(rest.substr(kUniverseDirective.size()));
}

struct RawImplication {
  std::vector<std::string> body;
  std::string head;
  std::size_t line;
};

}  // namespace

Basis parse_implications(std::string_view text, const std::optional<Universe>& universe) {
  std::vector<RawImplication> raw;
  std::optional<std::vector<std::string>> declared;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (!declared) {
      if (auto labels = universe_directive(line)) {
        declared = std::move(labels);
        continue;
      }
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (split_words(line).empty()) continue;

    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line_no, "expected 'body -> head'");
    auto body = split_words(line.substr(0, arrow));
    auto head = split_words(line.substr(arrow + 2));
    if (head.size() != 1) throw ParseError(line_no, "expected exactly one head attribute");
    if (std::find(body.begin(), body.end(), head.front()) != body.end()) {
      throw ParseError(line_no, "head '" + head.front() + "' appears in its own body");
    }
    raw.push_back({std::move(body), std::move(head.front()), line_no});
  }

  Universe u;
  if (universe) {
    u = *universe;
  } else if (declared) {
    try {
      u = Universe(*declared);
    } catch (const ParseError& e) {
      throw ParseError(0, std::string("universe directive: ") + e.what());
    }
  } else {
    std::set<std::string> mentioned;
    for (const auto& r : raw) {
      mentioned.insert(r.body.begin(), r.body.end());
      mentioned.insert(r.head);
    }
    u = Universe(std::vector<std::string>(mentioned.begin(), mentioned.end()));
  }

  auto lookup = [&](const std::string& label, std::size_t line_no) {
    auto idx = u.index_of(label);
    if (!idx) throw ParseError(line_no, "unknown attribute '" + label + "'");
    return *idx;
  };
  std::vector<Implication> imps;
  imps.reserve(raw.size());
  for (const auto& r : raw) {
    Implication imp;
    for (const auto& label : r.body) imp.body.insert(lookup(label, r.line));
    imp.head = lookup(r.head, r.line);
    imps.push_back(imp);
  }
  return Basis(std::move(u), std::move(imps));
}

std::string serialize_basis(const Basis& b, SerializeOptions options) {
  std::vector<Implication> imps(b.begin(), b.end());
  std::sort(imps.begin(), imps.end(), canonical_less);
  std::string out;
  if (options.with_universe) {
    out += "# universe:";
    for (const auto& label : b.universe().labels()) out += " " + label;
    out += "\n";
  }
  for (const auto& imp : imps) {
    out += b.universe().format(imp.body);
    out += imp.body.empty() ? "-> " : " -> ";
    out += b.universe().label(imp.head);
    out += "\n";
  }
  return out;
}

Context parse_context(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && split_words(lines[i]).empty()) ++i;
  if (i == lines.size()) throw ParseError(0, "context has no header line");
  Universe u;
  try {
    u = Universe(split_words(lines[i]));
  } catch (const ParseError& e) {
    throw ParseError(i + 1, e.what());
  }
  std::vector<AttrSet> rows;
  for (++i; i < lines.size(); ++i) {
    auto words = split_words(lines[i]);
    if (words.empty()) continue;
    std::string row;
    for (const auto& w : words) row += w;
    if (row.size() != u.size()) {
      throw ParseError(i + 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(u.size()));
    }
    AttrSet r;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == '1') {
        r.insert(static_cast<Attr>(j));
      } else if (row[j] != '0') {
        throw ParseError(i + 1, "row entries must be 0 or 1");
      }
    }
    rows.push_back(r);
  }
  return Context(std::move(u), std::move(rows));
}

std::string serialize_context(const Context& k) {
  std::string out;
  const auto& labels = k.universe().labels();
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (j) out += ' ';
    out += labels[j];
  }
  out += '\n';
  for (AttrSet r : k.rows()) {
    for (Attr j = 0; j < labels.size(); ++j) out += r.contains(j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace hornup
