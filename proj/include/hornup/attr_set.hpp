#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hornup {

/// Dense index of an attribute within its Universe.
using Attr = unsigned;

/// Hard limit on the number of attributes; AttrSet is a single machine word.
inline constexpr std::size_t kMaxAttributes = 64;

/// A subset of the attribute universe, stored as a 64-bit membership mask.
class AttrSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Attr;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Attr;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Attr operator*() const { return static_cast<Attr>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr AttrSet() = default;
  constexpr AttrSet(std::initializer_list<Attr> members) {
    for (Attr a : members) insert(a);
  }

  static constexpr AttrSet from_bits(std::uint64_t bits) {
    AttrSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr AttrSet singleton(Attr a) { return from_bits(std::uint64_t{1} << a); }
  /// {0, ..., n-1}
  static constexpr AttrSet full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Attr a) const { return (bits_ >> a) & 1U; }

  constexpr void insert(Attr a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(Attr a) { bits_ &= ~(std::uint64_t{1} << a); }
  constexpr AttrSet with(Attr a) const { return from_bits(bits_ | (std::uint64_t{1} << a)); }
  constexpr AttrSet without(Attr a) const { return from_bits(bits_ & ~(std::uint64_t{1} << a)); }

  constexpr bool is_subset_of(AttrSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(AttrSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(AttrSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr Attr front() const { return static_cast<Attr>(std::countr_zero(bits_)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Attr> to_vector() const { return {begin(), end()}; }

  constexpr AttrSet& operator|=(AttrSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr AttrSet& operator&=(AttrSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr AttrSet& operator-=(AttrSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr AttrSet operator|(AttrSet l, AttrSet r) { return from_bits(l.bits_ | r.bits_); }
  friend constexpr AttrSet operator&(AttrSet l, AttrSet r) { return from_bits(l.bits_ & r.bits_); }
  /// Set difference.
  friend constexpr AttrSet operator-(AttrSet l, AttrSet r) { return from_bits(l.bits_ & ~r.bits_); }

  friend constexpr bool operator==(AttrSet, AttrSet) = default;
  /// Orders by mask value; a total order, not inclusion.
  friend constexpr auto operator<=>(AttrSet l, AttrSet r) { return l.bits_ <=> r.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the members as sorted index tuples.
/// {0,1} < {0,2} < {1}; used for canonical text order.
inline bool tuple_less(AttrSet l, AttrSet r) {
  auto li = l.begin();
  auto ri = r.begin();
  for (; li != l.end() && ri != r.end(); ++li, ++ri) {
    if (*li != *ri) return *li < *ri;
  }
  return li == l.end() && ri != r.end();
}

}  // namespace hornup
