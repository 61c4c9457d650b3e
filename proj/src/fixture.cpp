#include "hornup/fixture.hpp"

#include <algorithm>
#include <sstream>

#include "hornup/errors.hpp"
#include "hornup/io.hpp"

namespace hornup {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Fixture::Kind parse_kind(std::string_view v, std::size_t line) {
  if (v == "cd") return Fixture::Kind::cd;
  if (v == "d") return Fixture::Kind::d;
  if (v == "remove") return Fixture::Kind::remove;
  if (v == "nondirect") return Fixture::Kind::nondirect;
  throw ParseError(line, "unknown fixture kind '" + std::string(v) + "'");
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
  Fixture fx;
  std::optional<Universe> universe;
  std::string set_text, probe_text, input, expected;
  bool has_expected = false;
  enum class Block { header, input, expected } block = Block::header;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (block != Block::header || line == "input:") {
      if (line == "input:") {
        block = Block::input;
        continue;
      }
      if (line == "expected:") {
        block = Block::expected;
        has_expected = true;
        continue;
      }
      (block == Block::input ? input : expected).append(raw).push_back('\n');
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    std::string_view value = trim(line.substr(colon + 1));
    if (auto hash = value.find('#'); hash != std::string_view::npos) value = trim(value.substr(0, hash));
    if (key == "name") {
      fx.name = value;
    } else if (key == "kind") {
      fx.kind = parse_kind(value, lineno);
    } else if (key == "universe") {
      std::vector<std::string> labels;
      std::istringstream ls{std::string(value)};
      for (std::string l; ls >> l;) labels.push_back(l);
      universe = Universe(std::move(labels));
    } else if (key == "set") {
      set_text = value;
    } else if (key == "probe") {
      probe_text = value;
    } else {
      throw ParseError(lineno, "unknown fixture key '" + std::string(key) + "'");
    }
  }
  if (fx.name.empty()) throw ParseError(0, "fixture has no name");
  if (!universe) throw ParseError(0, "fixture '" + fx.name + "' has no universe");
  fx.input = parse_implications(input, universe);
  fx.set = universe->parse_set(set_text);
  if (!probe_text.empty()) fx.probe = universe->parse_set(probe_text);
  if (has_expected) fx.expected = parse_implications(expected, universe);
  return fx;
}

Fixture load_fixture(const std::filesystem::path& path) {
  Fixture fx;
  try {
    fx = parse_fixture(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(0, path.filename().string() + ": " + e.what());
  }
  fx.path = path;
  return fx;
}

std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".fixture") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) out.push_back(load_fixture(f));
  return out;
}

std::filesystem::path default_fixture_dir() {
#ifdef HORNUP_FIXTURE_DIR
  return HORNUP_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace hornup
