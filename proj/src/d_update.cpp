#include "hornup/d_update.hpp"

#include <algorithm>
#include <map>

#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"

namespace hornup {

Basis prepare_for_update(const Basis& b, AttrSet a) {
  const Basis closed = transitive_close_binary_allow_cycles(b);
  const BinaryOrder ord = BinaryOrder::from_basis(closed);
  const Universe& u = b.universe();

  // (outside, inside) for each equivalence split by a
  std::vector<std::pair<Attr, Attr>> broken;
  AttrSet seen;
  for (Attr v = 0; v < b.attribute_count(); ++v) {
    const AttrSet cls = ord.down(v) & ord.up(v);
    if (cls.size() < 2 || seen.intersects(cls)) continue;
    seen |= cls;
    const AttrSet inside = cls & a;
    const AttrSet outside = cls - a;
    if (inside.size() != 1 || outside.size() != 1) {
      throw BinaryCycleError("equivalent attributes {" + u.format(cls, ",") + "} stay equivalent after the update");
    }
    broken.emplace_back(outside.front(), inside.front());
  }
  if (broken.empty()) return closed;

  std::vector<Implication> imps;
  for (const auto& imp : closed) {
    if (imp.is_binary()) {
      imps.push_back(imp);
      continue;
    }
    Implication out = imp;
    // x -> y survives the update, so C u y -> d replaces C u x -> d
    for (auto [x, y] : broken) {
      if (out.body.contains(x)) out.body = out.body.without(x).with(y);
    }
    if (!out.body.contains(out.head)) imps.push_back(out);
  }
  const std::size_t count = imps.size();
  for (std::size_t i = 0; i < count; ++i) {
    const Implication imp = imps[i];
    if (imp.is_binary()) continue;
    for (auto [x, y] : broken) {
      if (imp.head == x && !imp.body.contains(y)) imps.push_back({imp.body, y});
      if (imp.head == y && !imp.body.contains(x)) imps.push_back({imp.body, x});
    }
  }
  return transitive_close_binary_allow_cycles(Basis(u, std::move(imps)));
}

UpdateOrders compute_orders(const Basis& prepared, AttrSet a) {
  const std::size_t n = prepared.attribute_count();
  UpdateOrders ord;
  ord.added = a;
  ord.old_order = BinaryOrder::from_basis(prepared);
  ord.new_order = BinaryOrder(n);
  for (const auto& imp : prepared) {
    if (!imp.is_binary()) continue;
    if (imp.holds_on(a)) {
      ord.new_order.add(imp.body.front(), imp.head);
    } else {
      ord.targets.insert(imp.head);
    }
  }
  ord.replacements.assign(n, AttrSet{});
  for (Attr x : ord.targets) {
    ord.replacements[x] = ord.old_order.minimal_elements(ord.old_order.up(x) & a);
  }
  return ord;
}

namespace {

// Calls fn(chosen targets, chosen replacements, pairs) for every nonempty
// subset of `hits` and every choice of one replacement per chosen target.
template <typename Fn>
void for_each_lift_choice(AttrSet hits, const UpdateOrders& ord, Fn&& fn) {
  const std::uint64_t all = hits.bits();
  for (std::uint64_t s = all; s != 0; s = (s - 1) & all) {
    const std::vector<Attr> chosen = AttrSet::from_bits(s).to_vector();
    std::vector<std::vector<Attr>> options;
    options.reserve(chosen.size());
    for (Attr x : chosen) options.push_back(ord.replacements_for(x).to_vector());
    if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) continue;

    std::vector<std::size_t> idx(chosen.size(), 0);
    while (true) {
      AttrSet repl;
      std::vector<LiftPair> pairs;
      pairs.reserve(chosen.size());
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        repl.insert(options[i][idx[i]]);
        pairs.push_back({options[i][idx[i]], chosen[i]});
      }
      fn(AttrSet::from_bits(s), repl, pairs);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

AttrSet lift_witness(const LiftedImplication& lift, const UpdateOrders& ord) {
  AttrSet w;
  for (const auto& p : lift.lifts) w |= ord.new_order.down(p.replacement) - ord.old_order.down(p.target);
  return w;
}

}  // namespace

std::vector<LiftedImplication> a_lift(const Basis& prepared, const UpdateOrders& ord) {
  std::vector<LiftedImplication> out;
  std::map<Implication, std::size_t> index;
  for (const auto& imp : prepared) {
    if (imp.is_binary()) continue;
    const AttrSet hits = imp.body & ord.targets;
    if (hits.empty()) continue;
    for_each_lift_choice(hits, ord, [&](AttrSet replaced, AttrSet repl, const std::vector<LiftPair>& pairs) {
      const AttrSet body = ord.new_order.maximal_elements((imp.body - replaced) | repl);
      // a singleton body is already a binary implication of the prepared basis
      if (body.size() < 2) return;
      if (ord.new_order.down_set(body).contains(imp.head)) return;
      const Implication lifted{body, imp.head};
      if (prepared.contains(lifted)) return;
      auto [it, fresh] = index.try_emplace(lifted, out.size());
      if (fresh) {
        out.push_back({body, imp.head, pairs, imp.body});
      } else {
        auto& existing = out[it->second].lifts;
        for (const auto& p : pairs) {
          if (std::find(existing.begin(), existing.end(), p) == existing.end()) existing.push_back(p);
        }
      }
    });
  }
  return out;
}

LiftFilterResult filter_lift_refinements(const std::vector<LiftedImplication>& lifted, const Basis& prepared,
                                         const UpdateOrders& ord, RefineMode mode) {
  std::vector<Implication> refiners;
  for (const auto& imp : prepared) {
    if (!imp.is_binary() || imp.holds_on(ord.added)) refiners.push_back(imp);
  }
  for (const auto& l : lifted) refiners.push_back(l.implication());

  LiftFilterResult out;
  for (const auto& l : lifted) {
    const AttrSet reach = ord.new_order.down_set(l.body);
    const AttrSet witness = lift_witness(l, ord);
    const Implication* refiner = nullptr;
    for (const auto& r : refiners) {
      if (r.head != l.head || r.body == l.body) continue;
      if (mode == RefineMode::filtered && !r.body.intersects(witness)) continue;
      if (r.body.is_subset_of(reach)) {
        refiner = &r;
        break;
      }
    }
    if (refiner) {
      out.removed.push_back({l, *refiner, witness});
    } else {
      out.kept.push_back(l);
    }
  }
  return out;
}

namespace {

void build_from(const Implication& source, bool from_lift, AttrSet lifted_members, const UpdateOrders& ord,
                BodyBuildResult& out) {
  const BinaryOrder& order = ord.new_order;
  const AttrSet full = AttrSet::full(order.attribute_count());
  const AttrSet pool = full - (ord.added | order.up(source.head));
  for (Attr xm : order.minimal_elements(pool)) {
    const AttrSet below = source.body & order.down(xm);
    if (below.intersects(lifted_members)) ++out.lift_replacements;
    out.built.push_back({{(source.body - below).with(xm), source.head}, source, xm, below, from_lift});
  }
}

}  // namespace

BodyBuildResult body_build_d(const Basis& prepared, const std::vector<LiftedImplication>& lifted,
                             const UpdateOrders& ord) {
  BodyBuildResult out;
  for (const auto& imp : prepared) {
    if (imp.holds_on(ord.added)) {
      out.kept.push_back(imp);
    } else {
      build_from(imp, false, AttrSet{}, ord, out);
    }
  }
  for (const auto& l : lifted) {
    if (l.implication().holds_on(ord.added)) {
      out.kept_lifts.push_back(l);
    } else {
      AttrSet members;
      for (const auto& p : l.lifts) members.insert(p.replacement);
      build_from(l.implication(), true, members & l.body, ord, out);
    }
  }
  return out;
}

Basis BodyBuildResult::to_basis(const Universe& universe) const {
  std::vector<Implication> imps = kept;
  for (const auto& l : kept_lifts) imps.push_back(l.implication());
  for (const auto& b : built) imps.push_back(b.implication);
  return Basis(universe, std::move(imps));
}

Basis final_refine(const BodyBuildResult& built, const UpdateOrders& ord, const Universe& universe,
                   RefineMode mode) {
  enum class Origin { kept, lift, built };
  struct Candidate {
    Implication imp;
    Origin origin;
    Attr extension = 0;
  };
  // one entry per distinct implication, keeping the most authoritative origin
  std::map<Implication, Candidate> unique;
  for (const auto& imp : built.kept) unique.try_emplace(imp, Candidate{imp, Origin::kept});
  for (const auto& l : built.kept_lifts) unique.try_emplace(l.implication(), Candidate{l.implication(), Origin::lift});
  for (const auto& b : built.built) unique.try_emplace(b.implication, Candidate{b.implication, Origin::built, b.extension});

  std::vector<Candidate> all;
  all.reserve(unique.size());
  for (auto& [imp, c] : unique) all.push_back(c);

  const AttrSet added = ord.added;
  auto may_refine = [&](const Candidate& target, const Candidate& r) {
    if (mode == RefineMode::exhaustive) return true;
    switch (target.origin) {
      case Origin::kept:
        return false;
      case Origin::lift:
        return r.origin == Origin::built;
      case Origin::built:
        return r.imp.body.contains(target.extension) ||
               r.imp.body.intersects(added & ord.new_order.down(target.extension));
    }
    return false;
  };

  std::vector<Implication> kept;
  kept.reserve(all.size());
  for (const auto& target : all) {
    bool refined = false;
    if (!target.imp.is_binary()) {
      const AttrSet reach = ord.new_order.down_set(target.imp.body);
      for (const auto& r : all) {
        if (r.imp.head != target.imp.head || r.imp.body == target.imp.body) continue;
        if (!may_refine(target, r)) continue;
        if (r.imp.body.is_subset_of(reach)) {
          refined = true;
          break;
        }
      }
    }
    if (!refined) kept.push_back(target.imp);
  }
  return Basis(universe, std::move(kept));
}

DUpdateTrace she_update_d_traced(const Basis& b, AttrSet a, RefineMode mode) {
  if (!b.universe().contains(a)) throw PreconditionError("set lies outside the universe");
  DUpdateTrace t;
  if (std::all_of(b.begin(), b.end(), [&](const Implication& imp) { return imp.holds_on(a); })) {
    t.already_closed = true;
    t.prepared = b;
    t.result = b;
    return t;
  }
  for (const auto& imp : b) {
    if (imp.body.empty()) throw PreconditionError("empty-body implications are not supported by the D-basis update");
  }
  t.prepared = prepare_for_update(b, a);
  t.orders = compute_orders(t.prepared, a);
  t.lifted = a_lift(t.prepared, t.orders);
  t.filtered = filter_lift_refinements(t.lifted, t.prepared, t.orders, mode);
  t.built = body_build_d(t.prepared, t.filtered.kept, t.orders);
  t.result = final_refine(t.built, t.orders, b.universe(), mode);
  return t;
}

Basis she_update_d(const Basis& b, AttrSet a, RefineMode mode) { return she_update_d_traced(b, a, mode).result; }

}  // namespace hornup
