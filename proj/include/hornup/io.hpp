#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hornup/basis.hpp"
#include "hornup/family.hpp"
#include "hornup/universe.hpp"

namespace hornup {

/// Reads lines of the form `a b c -> d`; `#` starts a comment.
///
/// Without `universe`, the universe is a leading `# universe: a b c` line if
/// present, otherwise the sorted set of labels mentioned. With `universe`,
/// unknown labels are errors and the directive is ignored. Heads repeated in
/// their own body are rejected. `-> d` is an implication with an empty body.
Basis parse_implications(std::string_view text, const std::optional<Universe>& universe = std::nullopt);

struct SerializeOptions {
  /// Emit a `# universe:` line first so unmentioned attributes survive.
  bool with_universe = false;
};

/// One implication per line in canonical order; round-trips with
/// parse_implications.
std::string serialize_basis(const Basis& b, SerializeOptions options = {});

/// First line: labels. Each further nonblank line: a 0/1 row of width n.
Context parse_context(std::string_view text);
std::string serialize_context(const Context& k);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace hornup
