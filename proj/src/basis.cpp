#include "hornup/basis.hpp"

#include <algorithm>

#include "hornup/errors.hpp"

namespace hornup {

bool canonical_less(const Implication& l, const Implication& r) {
  if (l.head != r.head) return l.head < r.head;
  return tuple_less(l.body, r.body);
}

Basis::Basis(Universe universe, std::vector<Implication> implications)
    : universe_(std::move(universe)), implications_(std::move(implications)) {
  const AttrSet full = universe_.full();
  for (const auto& imp : implications_) {
    if (imp.head >= universe_.size() || !imp.body.is_subset_of(full)) {
      throw PreconditionError("implication refers to an attribute outside the universe");
    }
    if (imp.body.contains(imp.head)) {
      throw PreconditionError("head '" + universe_.label(imp.head) + "' appears in its own body");
    }
  }
  std::sort(implications_.begin(), implications_.end());
  implications_.erase(std::unique(implications_.begin(), implications_.end()), implications_.end());
}

bool Basis::contains(const Implication& imp) const {
  return std::binary_search(implications_.begin(), implications_.end(), imp);
}

Basis Basis::binary_part() const {
  std::vector<Implication> out;
  for (const auto& imp : implications_) {
    if (imp.is_binary()) out.push_back(imp);
  }
  return Basis(universe_, std::move(out));
}

Basis Basis::nonbinary_part() const {
  std::vector<Implication> out;
  for (const auto& imp : implications_) {
    if (!imp.is_binary()) out.push_back(imp);
  }
  return Basis(universe_, std::move(out));
}

std::vector<Implication> Basis::sector(Attr d) const {
  auto lo = std::lower_bound(implications_.begin(), implications_.end(), Implication{AttrSet{}, d});
  auto hi = std::lower_bound(implications_.begin(), implications_.end(), Implication{AttrSet{}, d + 1});
  return {lo, hi};
}

Basis Basis::with(std::span<const Implication> extra) const {
  std::vector<Implication> all = implications_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Basis(universe_, std::move(all));
}

Basis Basis::without(const Implication& imp) const {
  std::vector<Implication> all;
  all.reserve(implications_.size());
  for (const auto& other : implications_) {
    if (other != imp) all.push_back(other);
  }
  return Basis(universe_, std::move(all));
}

}  // namespace hornup
