#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hornup/attr_set.hpp"

namespace hornup {

/// Ordered, immutable list of attribute labels. Copies share storage.
class Universe {
 public:
  Universe();
  /// Throws ParseError on empty, duplicate, or too many labels.
  explicit Universe(std::vector<std::string> names);

  /// Labels "a".."z" for n <= 26, otherwise "x0".."x{n-1}".
  static Universe indexed(std::size_t n);

  std::size_t size() const { return names_->size(); }
  const std::string& label(Attr a) const { return (*names_)[a]; }
  const std::vector<std::string>& labels() const { return *names_; }
  std::optional<Attr> index_of(std::string_view label) const;

  AttrSet full() const { return AttrSet::full(size()); }
  bool contains(AttrSet s) const { return s.is_subset_of(full()); }

  /// Universe with `label` appended; throws if already present.
  Universe extended(const std::string& label) const;

  /// Space-separated labels of `s` ("a b c"); "{}" style is left to callers.
  std::string format(AttrSet s, std::string_view sep = " ") const;
  /// Parses "a,b,c" (commas and/or whitespace). Empty text is the empty set.
  AttrSet parse_set(std::string_view text) const;

  friend bool operator==(const Universe& l, const Universe& r) {
    return l.names_ == r.names_ || *l.names_ == *r.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace hornup
