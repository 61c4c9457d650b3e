#include "hornup/closure.hpp"

#include <algorithm>
#include <unordered_set>

#include "hornup/binary_order.hpp"
#include "hornup/errors.hpp"

namespace hornup {

AttrSet closure_forward(const Basis& b, AttrSet y) {
  const auto imps = b.implications();
  std::vector<char> fired(imps.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < imps.size(); ++i) {
      if (fired[i] || !imps[i].body.is_subset_of(y)) continue;
      fired[i] = 1;
      if (!y.contains(imps[i].head)) {
        y.insert(imps[i].head);
        changed = true;
      }
    }
  }
  return y;
}

AttrSet closure_direct_pass(const Basis& b, AttrSet y) {
  AttrSet out = y;
  for (const auto& imp : b) {
    if (imp.body.is_subset_of(y)) out.insert(imp.head);
  }
  return out;
}

AttrSet closure_bdirect(const Basis& b, AttrSet y) {
  const BinaryOrder ord = BinaryOrder::from_basis(b);
  if (!ord.is_transitive()) throw UnpreparedBasis("binary part is not transitive");
  return closure_direct_pass(b, ord.down_set(y));
}

AttrSet closure_from_context(const Context& k, AttrSet y) {
  AttrSet out = k.universe().full();
  for (AttrSet row : k.rows()) {
    if (y.is_subset_of(row)) out &= row;
  }
  return out;
}

const Universe& ClosureOperator::universe() const {
  return std::visit([](const auto& s) -> const Universe& { return s.universe(); }, source_);
}

AttrSet ClosureOperator::operator()(AttrSet y) const {
  struct Visitor {
    AttrSet y;
    AttrSet operator()(const Basis& b) const { return closure_forward(b, y); }
    AttrSet operator()(const Context& k) const { return closure_from_context(k, y); }
    AttrSet operator()(const MooreFamily& f) const { return f.closure(y); }
  };
  return std::visit(Visitor{y}, source_);
}

MooreFamily enumerate_family(const Basis& b) {
  const std::size_t n = b.attribute_count();
  if (n > kEnumerateLimit) throw UniverseTooLarge(n, kEnumerateLimit);
  std::vector<AttrSet> closed;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const AttrSet y = AttrSet::from_bits(bits);
    bool ok = true;
    for (const auto& imp : b) {
      if (imp.fails_on(y)) {
        ok = false;
        break;
      }
    }
    if (ok) closed.push_back(y);
  }
  return MooreFamily(b.universe(), std::move(closed));
}

MooreFamily enumerate_family(const Context& k) {
  const std::size_t n = k.universe().size();
  if (n > kEnumerateLimit) throw UniverseTooLarge(n, kEnumerateLimit);
  std::unordered_set<std::uint64_t> seen{k.universe().full().bits()};
  std::vector<AttrSet> sets{k.universe().full()};
  for (AttrSet row : k.rows()) {
    const std::size_t current = sets.size();
    for (std::size_t i = 0; i < current; ++i) {
      const AttrSet meet = sets[i] & row;
      if (seen.insert(meet.bits()).second) sets.push_back(meet);
    }
  }
  return MooreFamily(k.universe(), std::move(sets));
}

MooreFamily extend_family(const MooreFamily& f, AttrSet a) {
  std::vector<AttrSet> sets(f.begin(), f.end());
  sets.reserve(sets.size() * 2);
  for (AttrSet s : f) sets.push_back(s & a);
  return MooreFamily(f.universe(), std::move(sets));
}

AttrSet extended_operator(const ClosureOperator& phi, AttrSet a, AttrSet y) {
  const AttrSet c = phi(y);
  return y.is_subset_of(a) ? (c & a) : c;
}

bool is_direct(const Basis& b, std::uint64_t seed) {
  return all_subsets_satisfy(b.attribute_count(), seed, [&](AttrSet y) {
    return closure_direct_pass(b, y) == closure_forward(b, y);
  });
}

namespace {

bool syntactic_bdirect(const Basis& b, const BinaryOrder& ord) {
  for (const auto& first : b) {
    for (const auto& second : b) {
      if (!second.body.contains(first.head)) continue;
      const AttrSet rest = second.body.without(first.head);
      const AttrSet premises = first.body | rest;
      if (premises.contains(second.head)) continue;
      const AttrSet reach = ord.down_set(premises);
      const bool found = std::any_of(b.begin(), b.end(), [&](const Implication& g) {
        return g.head == second.head && g.body.is_subset_of(reach);
      });
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

BdirectVerdict bdirect_verdict(const Basis& b, std::uint64_t seed) {
  BdirectVerdict v;
  const BinaryOrder ord = BinaryOrder::from_basis(b);
  v.binary_transitive = ord.is_transitive();
  if (!v.binary_transitive) return v;
  v.semantic = all_subsets_satisfy(b.attribute_count(), seed, [&](AttrSet y) {
    return closure_direct_pass(b, ord.down_set(y)) == closure_forward(b, y);
  });
  v.syntactic = syntactic_bdirect(b, ord);
  return v;
}

}  // namespace hornup
