#include "hornup/cd_update.hpp"

#include <algorithm>

#include "hornup/errors.hpp"

namespace hornup {

SplitResult split_on_set(const Basis& b, AttrSet a) {
  SplitResult out;
  for (const auto& imp : b) {
    (imp.fails_on(a) ? out.failing_part : out.true_part).push_back(imp);
  }
  return out;
}

Basis naive_body_building(const Basis& b, AttrSet a) {
  const AttrSet full = b.full_set();
  std::vector<Implication> out;
  out.reserve(b.size());
  for (const auto& imp : b) {
    if (imp.holds_on(a)) {
      out.push_back(imp);
      continue;
    }
    for (Attr x : full - a.with(imp.head)) out.push_back({imp.body.with(x), imp.head});
  }
  return Basis(b.universe(), std::move(out));
}

Basis reduce_to_canonical(const Basis& b) {
  const auto imps = b.implications();
  std::vector<Implication> kept;
  kept.reserve(imps.size());
  for (std::size_t i = 0; i < imps.size(); ++i) {
    bool weaker = false;
    for (std::size_t j = 0; j < imps.size(); ++j) {
      if (j != i && imps[j].head == imps[i].head && imps[j].body.is_proper_subset_of(imps[i].body)) {
        weaker = true;
        break;
      }
    }
    if (!weaker) kept.push_back(imps[i]);
  }
  return Basis(b.universe(), std::move(kept));
}

std::vector<SectorEntry> make_sector(std::vector<AttrSet> bodies) {
  std::sort(bodies.begin(), bodies.end(), [](AttrSet l, AttrSet r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l < r;
  });
  std::vector<SectorEntry> sector;
  sector.reserve(bodies.size());
  for (AttrSet body : bodies) sector.push_back({body, AttrSet{}});
  for (std::size_t i = 0; i < sector.size(); ++i) {
    for (std::size_t j = 0; j < sector.size(); ++j) {
      if (i == j) continue;
      const AttrSet diff = sector[j].body - sector[i].body;
      if (diff.size() == 1) sector[i].singleton_diffs |= diff;
    }
  }
  return sector;
}

SectorBasis SectorBasis::build(const Basis& cd) {
  SectorBasis sb;
  sb.universe_ = cd.universe();
  sb.sectors_.resize(cd.attribute_count());
  for (Attr d = 0; d < cd.attribute_count(); ++d) {
    std::vector<AttrSet> bodies;
    for (const auto& imp : cd.sector(d)) bodies.push_back(imp.body);
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      for (std::size_t j = 0; j < bodies.size(); ++j) {
        if (i != j && bodies[i].is_subset_of(bodies[j])) {
          throw PreconditionError("not canonical direct: sector '" + cd.universe().label(d) +
                                  "' has nested bodies");
        }
      }
    }
    sb.sectors_[d] = make_sector(std::move(bodies));
  }
  return sb;
}

SectorBasis SectorBasis::of_trivial_family(const Universe& universe) {
  SectorBasis sb;
  sb.universe_ = universe;
  sb.sectors_.assign(universe.size(), std::vector<SectorEntry>{SectorEntry{AttrSet{}, AttrSet{}}});
  return sb;
}

std::size_t SectorBasis::implication_count() const {
  std::size_t n = 0;
  for (const auto& s : sectors_) n += s.size();
  return n;
}

Basis SectorBasis::to_basis() const {
  std::vector<Implication> imps;
  imps.reserve(implication_count());
  for (Attr d = 0; d < sectors_.size(); ++d) {
    for (const auto& e : sectors_[d]) imps.push_back({e.body, d});
  }
  return Basis(universe_, std::move(imps));
}

void SectorBasis::assign_sector(Attr d, std::vector<AttrSet> bodies) { sectors_[d] = make_sector(std::move(bodies)); }

SectorBasis modified_body_building(const SectorBasis& sb, AttrSet a) {
  SectorBasis out = sb;
  const AttrSet full = sb.universe().full();
  for (Attr d : full - a) {
    const auto sector = sb.sector(d);
    const bool touched = std::any_of(sector.begin(), sector.end(),
                                     [&](const SectorEntry& e) { return e.body.is_subset_of(a); });
    if (!touched) continue;
    std::vector<AttrSet> bodies;
    bodies.reserve(sector.size());
    for (const auto& e : sector) {
      if (!e.body.is_subset_of(a)) {
        bodies.push_back(e.body);
        continue;
      }
      // an empty candidate set silently drops the implication
      for (Attr x : full - (a.with(d) | e.singleton_diffs)) bodies.push_back(e.body.with(x));
    }
    out.assign_sector(d, std::move(bodies));
  }
  return out;
}

SectorBasis she_update_cd(const SectorBasis& sb, AttrSet a) { return modified_body_building(sb, a); }

}  // namespace hornup
