#include "hornup/binary_order.hpp"

namespace hornup {

BinaryOrder::BinaryOrder(std::size_t n) : down_(n), up_(n) {
  for (Attr a = 0; a < n; ++a) {
    down_[a] = AttrSet::singleton(a);
    up_[a] = AttrSet::singleton(a);
  }
}

BinaryOrder BinaryOrder::from_implications(std::size_t n, std::span<const Implication> imps) {
  BinaryOrder ord(n);
  for (const auto& imp : imps) {
    if (imp.is_binary()) ord.add(imp.body.front(), imp.head);
  }
  return ord;
}

BinaryOrder BinaryOrder::from_basis(const Basis& b) {
  return from_implications(b.attribute_count(), b.implications());
}

void BinaryOrder::add(Attr upper, Attr lower) {
  down_[upper].insert(lower);
  up_[lower].insert(upper);
}

AttrSet BinaryOrder::down_set(AttrSet y) const {
  AttrSet out;
  for (Attr a : y) out |= down_[a];
  return out;
}

AttrSet BinaryOrder::up_set(AttrSet y) const {
  AttrSet out;
  for (Attr a : y) out |= up_[a];
  return out;
}

AttrSet BinaryOrder::maximal_elements(AttrSet s) const {
  AttrSet out;
  for (Attr a : s) {
    // a is dropped when some other member lies above it
    if ((up_[a] & s).without(a).empty()) out.insert(a);
  }
  return out;
}

AttrSet BinaryOrder::minimal_elements(AttrSet s) const {
  AttrSet out;
  for (Attr a : s) {
    if ((down_[a] & s).without(a).empty()) out.insert(a);
  }
  return out;
}

bool BinaryOrder::is_transitive() const {
  for (Attr a = 0; a < down_.size(); ++a) {
    if (!down_set(down_[a]).is_subset_of(down_[a])) return false;
  }
  return true;
}

bool BinaryOrder::is_antisymmetric() const {
  for (Attr a = 0; a < down_.size(); ++a) {
    if (!(down_[a] & up_[a]).without(a).empty()) return false;
  }
  return true;
}

BinaryOrder BinaryOrder::transitive_closure() const {
  BinaryOrder out = *this;
  const std::size_t n = down_.size();
  // Warshall over down-sets
  for (Attr k = 0; k < n; ++k) {
    for (Attr i = 0; i < n; ++i) {
      if (out.down_[i].contains(k)) out.down_[i] |= out.down_[k];
    }
  }
  for (Attr i = 0; i < n; ++i) out.up_[i] = AttrSet{};
  for (Attr i = 0; i < n; ++i) {
    for (Attr j : out.down_[i]) out.up_[j].insert(i);
  }
  return out;
}

}  // namespace hornup
