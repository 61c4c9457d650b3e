#include "hornup/removal.hpp"

#include <algorithm>

#include "hornup/cd_update.hpp"
#include "hornup/errors.hpp"

namespace hornup {

namespace {

void require_member(const MooreFamily& f, AttrSet a) {
  if (!f.contains(a)) throw PreconditionError("{" + f.universe().format(a, ",") + "} is not a closed set");
}

}  // namespace

std::vector<AttrSet> upper_covers(const MooreFamily& f, AttrSet a) {
  require_member(f, a);
  std::vector<AttrSet> above;
  for (AttrSet s : f) {
    if (a.is_proper_subset_of(s)) above.push_back(s);
  }
  std::vector<AttrSet> covers;
  for (AttrSet s : above) {
    const bool minimal = std::none_of(above.begin(), above.end(), [&](AttrSet t) { return t.is_proper_subset_of(s); });
    if (minimal) covers.push_back(s);
  }
  return covers;
}

bool is_meet_irreducible(const MooreFamily& f, AttrSet a) {
  return a != f.full_set() && upper_covers(f, a).size() == 1;
}

std::optional<std::pair<AttrSet, AttrSet>> meet_witness(const MooreFamily& f, AttrSet a) {
  const auto covers = upper_covers(f, a);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      if ((covers[i] & covers[j]) == a) return std::pair{covers[i], covers[j]};
    }
  }
  return std::nullopt;
}

AttrSet upper_cover(const MooreFamily& f, AttrSet a) {
  const auto covers = upper_covers(f, a);
  if (covers.size() != 1 || a == f.full_set()) {
    std::string msg = "{" + f.universe().format(a, ",") + "} is not meet-irreducible";
    if (auto w = meet_witness(f, a)) {
      msg += ": it is the intersection of {" + f.universe().format(w->first, ",") + "} and {" +
             f.universe().format(w->second, ",") + "}";
    }
    throw PreconditionError(msg);
  }
  return covers.front();
}

std::vector<AttrSet> minimize_edges(std::vector<AttrSet> edges) {
  std::sort(edges.begin(), edges.end(), [](AttrSet l, AttrSet r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<AttrSet> out;
  for (AttrSet e : edges) {
    if (std::none_of(out.begin(), out.end(), [&](AttrSet k) { return k.is_subset_of(e); })) out.push_back(e);
  }
  return out;
}

Hypergraph complements_hypergraph(const MooreFamily& f, AttrSet a) {
  require_member(f, a);
  std::vector<AttrSet> edges;
  for (AttrSet z : f) {
    if (z.is_proper_subset_of(a)) edges.push_back(a - z);
  }
  return {a, minimize_edges(std::move(edges))};
}

std::vector<AttrSet> minimal_transversals(const Hypergraph& h) {
  std::vector<AttrSet> current{AttrSet{}};
  for (AttrSet edge : h.edges) {
    if (edge.empty()) throw PreconditionError("hypergraph has an empty edge");
    std::vector<AttrSet> next;
    for (AttrSet t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
        continue;
      }
      for (Attr v : edge) next.push_back(t.with(v));
    }
    current = minimize_edges(std::move(next));
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::vector<Implication> removal_implications(const MooreFamily& f, AttrSet a) {
  const AttrSet cover = upper_cover(f, a);
  std::vector<Implication> out;
  for (AttrSet y : minimal_transversals(complements_hypergraph(f, a))) {
    for (Attr d : cover - a) out.push_back({y, d});
  }
  return out;
}

Basis remove_closed_set(const Basis& cd, const MooreFamily& f, AttrSet a) {
  const auto extra = removal_implications(f, a);
  return reduce_to_canonical(cd.with(extra));
}

}  // namespace hornup
