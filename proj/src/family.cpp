#include "hornup/family.hpp"

#include <algorithm>

namespace hornup {

MooreFamily::MooreFamily(Universe universe, std::vector<AttrSet> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool MooreFamily::contains(AttrSet s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

AttrSet MooreFamily::closure(AttrSet y) const {
  AttrSet out = full_set();
  for (AttrSet s : sets_) {
    if (y.is_subset_of(s)) out &= s;
  }
  return out;
}

bool MooreFamily::is_closure_system() const {
  if (!contains(full_set())) return false;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (!universe_.contains(sets_[i])) return false;
    for (std::size_t j = i + 1; j < sets_.size(); ++j) {
      if (!contains(sets_[i] & sets_[j])) return false;
    }
  }
  return true;
}

MooreFamily MooreFamily::without(AttrSet s) const {
  std::vector<AttrSet> rest;
  rest.reserve(sets_.size());
  for (AttrSet t : sets_) {
    if (t != s) rest.push_back(t);
  }
  return MooreFamily(universe_, std::move(rest));
}

Context::Context(Universe universe, std::vector<AttrSet> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {}

std::vector<std::size_t> Context::duplicate_rows() const {
  std::vector<std::size_t> dups;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rows_[j] == rows_[i]) {
        dups.push_back(i);
        break;
      }
    }
  }
  return dups;
}

}  // namespace hornup
