#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"

namespace hornup {

/// A worked example: an input basis, one set, and optionally the expected basis.
///
///     name: sectors
///     kind: cd            # cd | d | remove | nondirect
///     universe: a b c d e
///     set: a,b,c
///     probe: a,b          # nondirect only
///     input:
///     e -> d
///     expected:
///     e -> d
struct Fixture {
  enum class Kind { cd, d, remove, nondirect };

  std::string name;
  Kind kind = Kind::cd;
  Basis input;
  AttrSet set;
  std::optional<AttrSet> probe;
  std::optional<Basis> expected;
  std::filesystem::path path;
};

Fixture parse_fixture(std::string_view text);
Fixture load_fixture(const std::filesystem::path& path);
/// Every *.fixture file in `dir`, sorted by file name.
std::vector<Fixture> load_fixtures(const std::filesystem::path& dir);

/// Directory of the fixtures shipped with the sources.
std::filesystem::path default_fixture_dir();

}  // namespace hornup
