#include "hornup/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "hornup/closure.hpp"
#include "hornup/errors.hpp"

namespace hornup {
namespace {

// t[Y] = intersection of the generators containing Y (and the full set).
std::vector<AttrSet> closure_table(std::size_t n, std::span<const AttrSet> generators) {
  const std::uint64_t count = std::uint64_t{1} << n;
  const AttrSet full = AttrSet::full(n);
  std::vector<AttrSet> t(count, full);
  for (AttrSet g : generators) t[g.bits()] &= g;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t s = 0; s < count; ++s) {
      if (!(s & bit)) t[s] &= t[s | bit];
    }
  }
  return t;
}

Basis minimal_covers(const Universe& u, const std::vector<AttrSet>& table) {
  std::vector<Implication> imps;
  for (std::uint64_t bits = 0; bits < table.size(); ++bits) {
    const AttrSet body = AttrSet::from_bits(bits);
    for (Attr d : table[bits] - body) {
      bool minimal = true;
      for (Attr y : body) {
        if (table[body.without(y).bits()].contains(d)) {
          minimal = false;
          break;
        }
      }
      if (minimal) imps.push_back({body, d});
    }
  }
  return Basis(u, std::move(imps));
}

}  // namespace

Basis canonical_direct_from_family(const MooreFamily& f) {
  const std::size_t n = f.universe().size();
  if (n > kOracleFamilyLimit) throw UniverseTooLarge(n, kOracleFamilyLimit);
  return minimal_covers(f.universe(), closure_table(n, f.sets()));
}

Basis canonical_direct_from_context(const Context& k) {
  const std::size_t n = k.universe().size();
  if (n > kOracleContextLimit) throw UniverseTooLarge(n, kOracleContextLimit);
  return minimal_covers(k.universe(), closure_table(n, k.rows()));
}

bool has_antichain_sectors(const Basis& b) {
  for (Attr d = 0; d < b.attribute_count(); ++d) {
    const auto sector = b.sector(d);
    for (std::size_t i = 0; i < sector.size(); ++i) {
      for (std::size_t j = 0; j < sector.size(); ++j) {
        if (i != j && sector[i].body.is_subset_of(sector[j].body)) return false;
      }
    }
  }
  return true;
}

Basis d_basis_from_cd(const Basis& cd) {
  if (!has_antichain_sectors(cd)) throw PreconditionError("input is not canonical direct: nested bodies in a sector");
  const BinaryOrder ord = BinaryOrder::from_basis(cd);
  if (!ord.is_transitive()) throw UnpreparedBasis("binary part of the canonical direct basis is not transitive");
  std::vector<Implication> kept;
  for (const auto& imp : cd) {
    if (imp.is_binary()) {
      kept.push_back(imp);
      continue;
    }
    const AttrSet reach = ord.down_set(imp.body);
    bool refined = false;
    for (const auto& other : cd.sector(imp.head)) {
      if (other.body == imp.body || !other.body.is_subset_of(reach)) continue;
      // mutual refinement only happens across binary equivalences; keep the smaller mask
      const bool mutual = imp.body.is_subset_of(ord.down_set(other.body));
      if (!mutual || other.body < imp.body) {
        refined = true;
        break;
      }
    }
    if (!refined) kept.push_back(imp);
  }
  return Basis(cd.universe(), std::move(kept));
}

bool is_refinement_free(const Basis& b, const BinaryOrder& ord) {
  for (const auto& y : b) {
    if (y.is_binary()) continue;
    const AttrSet reach = ord.down_set(y.body);
    for (const auto& z : b.sector(y.head)) {
      if (z.body != y.body && z.body.is_subset_of(reach)) return false;
    }
  }
  return true;
}

namespace {

Basis rebuild_binary(const Basis& b, const BinaryOrder& closed) {
  std::vector<Implication> imps;
  for (const auto& imp : b) {
    if (!imp.is_binary()) imps.push_back(imp);
  }
  for (Attr u = 0; u < b.attribute_count(); ++u) {
    for (Attr v : closed.down(u).without(u)) imps.push_back({AttrSet::singleton(u), v});
  }
  return Basis(b.universe(), std::move(imps));
}

}  // namespace

Basis transitive_close_binary_allow_cycles(const Basis& b) {
  return rebuild_binary(b, BinaryOrder::from_basis(b).transitive_closure());
}

Basis transitive_close_binary(const Basis& b) {
  const BinaryOrder closed = BinaryOrder::from_basis(b).transitive_closure();
  for (Attr u = 0; u < b.attribute_count(); ++u) {
    const AttrSet mutual = (closed.down(u) & closed.up(u)).without(u);
    if (!mutual.empty()) {
      throw BinaryCycleError("binary cycle between '" + b.universe().label(u) + "' and '" +
                             b.universe().label(mutual.front()) + "'");
    }
  }
  return rebuild_binary(b, closed);
}

Basis to_reduced(const Basis& b, const std::vector<Equivalence>& equivs, EquivalenceDirection direction) {
  if (equivs.empty()) return b;
  Universe u = b.universe();
  std::vector<Implication> imps(b.begin(), b.end());
  for (const auto& eq : equivs) {
    if (u.index_of(eq.label)) throw PreconditionError("attribute '" + eq.label + "' already in the universe");
    if (eq.members.empty()) throw PreconditionError("equivalence for '" + eq.label + "' has an empty set");
    if (!b.universe().contains(eq.members)) throw PreconditionError("equivalence set outside the standard universe");
    const Attr a = static_cast<Attr>(u.size());
    u = u.extended(eq.label);
    imps.push_back({eq.members, a});
    for (Attr m : eq.members) {
      if (direction == EquivalenceDirection::consistent) {
        imps.push_back({AttrSet::singleton(a), m});
      } else {
        imps.push_back({AttrSet::singleton(m), a});
      }
    }
  }
  return transitive_close_binary(Basis(std::move(u), std::move(imps)));
}

namespace {

// Drops attribute `gone`, shifting higher indices down by one.
AttrSet squeeze(AttrSet s, Attr gone) {
  const std::uint64_t low = s.bits() & ((std::uint64_t{1} << gone) - 1);
  const std::uint64_t high = (s.bits() >> (gone + 1)) << gone;
  return AttrSet::from_bits(low | high);
}

Basis project_out(const Basis& b, Attr a, AttrSet equivalent) {
  std::vector<Implication> imps;
  for (const auto& imp : b) {
    if (imp.head == a) {
      for (Attr m : equivalent - imp.body) imps.push_back({imp.body, m});
      continue;
    }
    Implication out = imp;
    if (out.body.contains(a)) out.body = out.body.without(a) | equivalent;
    if (out.body.contains(out.head)) continue;
    imps.push_back(out);
  }
  std::vector<std::string> labels = b.universe().labels();
  labels.erase(labels.begin() + a);
  for (auto& imp : imps) {
    imp.body = squeeze(imp.body, a);
    if (imp.head > a) --imp.head;
  }
  return Basis(Universe(std::move(labels)), std::move(imps));
}

}  // namespace

Basis to_standard(const Basis& b) {
  Basis current = b;
  for (bool removed = true; removed;) {
    removed = false;
    for (Attr a = static_cast<Attr>(current.attribute_count()); a-- > 0;) {
      const AttrSet above = closure_forward(current, AttrSet::singleton(a)).without(a);
      if (!closure_forward(current, above).contains(a)) continue;
      AttrSet equivalent = above;
      for (Attr m : above) {
        if (closure_forward(current, equivalent.without(m)).contains(a)) equivalent.erase(m);
      }
      if (equivalent.size() < 2) continue;
      current = project_out(current, a, equivalent);
      removed = true;
      break;
    }
  }
  return current;
}

bool is_reduced(const MooreFamily& f) {
  if (!f.closure(AttrSet{}).empty()) return false;
  const std::size_t n = f.universe().size();
  std::vector<AttrSet> single(n);
  for (Attr a = 0; a < n; ++a) single[a] = f.closure(AttrSet::singleton(a));
  for (Attr a = 0; a < n; ++a) {
    for (Attr b = a + 1; b < n; ++b) {
      if (single[a] == single[b]) return false;
    }
  }
  return true;
}

std::vector<AttrSet> minimal_transversals_exhaustive(AttrSet vertices, const std::vector<AttrSet>& edges) {
  auto is_transversal = [&](AttrSet t) {
    return std::all_of(edges.begin(), edges.end(), [&](AttrSet e) { return t.intersects(e); });
  };
  std::vector<AttrSet> out;
  const std::uint64_t v = vertices.bits();
  // every submask of v, including v and 0
  for (std::uint64_t s = v;; s = (s - 1) & v) {
    const AttrSet t = AttrSet::from_bits(s);
    if (is_transversal(t)) {
      bool minimal = true;
      for (Attr x : t) {
        if (is_transversal(t.without(x))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(t);
    }
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hornup
