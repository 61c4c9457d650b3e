#include "hornup/verify.hpp"

#include <algorithm>
#include <sstream>

#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/d_update.hpp"
#include "hornup/errors.hpp"
#include "hornup/io.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"
#include "hornup/removal.hpp"

namespace hornup {

void PropertyResult::record(bool good, const std::string& what) {
  if (good) return;
  if (failed == 0 && !trial_failed_) detail = what;
  trial_failed_ = true;
}

void PropertyResult::end_trial() {
  ++(trial_failed_ ? failed : passed);
  trial_failed_ = false;
}

bool VerifyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.ok(); });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.ok() ? "PASS " : "FAIL ") << r.name << ' ' << r.passed << '/' << (r.passed + r.failed);
    if (!r.ok()) out << ": " << r.detail;
    out << '\n';
  }
  return out.str();
}

namespace {

Rng trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial), std::uint64_t{0x5eed}};
  return Rng(seq);
}

std::size_t small_n(Rng& rng) { return std::uniform_int_distribution<std::size_t>(3, 8)(rng); }

struct Trial {
  MooreFamily family;
  AttrSet added;
};

// A family together with a set outside it.
Trial draw_extension(Rng& rng, bool reduced) {
  while (true) {
    const std::size_t n = small_n(rng);
    MooreFamily f = reduced ? random_reduced_family(n, rng) : random_family(n, rng);
    if (auto a = random_new_set(f, rng)) return {std::move(f), *a};
  }
}

Trial draw_removal(Rng& rng) {
  while (true) {
    MooreFamily f = random_family(small_n(rng), rng);
    if (auto a = random_meet_irreducible(f, rng)) return {std::move(f), *a};
  }
}

// A reduced family with one attribute duplicated, and a set splitting the copy from its original.
Trial draw_broken_equivalence(Rng& rng) {
  while (true) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
    const MooreFamily f = random_reduced_family(n, rng);
    const Attr y = static_cast<Attr>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    const Attr x = static_cast<Attr>(n);
    std::vector<AttrSet> sets;
    for (AttrSet s : f) sets.push_back(s.contains(y) ? s.with(x) : s);
    MooreFamily g(f.universe().extended(f.universe().label(y) + "'"), std::move(sets));
    const AttrSet a = random_subset(n + 1, rng).with(y).without(x);
    if (!g.contains(a)) return {std::move(g), a};
  }
}

std::string show(const Trial& t) {
  return "universe " + std::to_string(t.family.universe().size()) + ", set {" +
         t.family.universe().format(t.added, ",") + "}";
}

std::string mismatch(const std::string& what, const Basis& got, const Basis& want) {
  return what + "\n--- got\n" + serialize_basis(got) + "--- want\n" + serialize_basis(want);
}

Basis oracle_cd(const MooreFamily& f) { return canonical_direct_from_family(f); }
Basis oracle_d(const MooreFamily& f) { return d_basis_from_cd(oracle_cd(f)); }

template <typename Body>
PropertyResult run_trials(const std::string& name, std::size_t trials, std::uint64_t seed, Body&& body) {
  PropertyResult r;
  r.name = name;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = trial_rng(seed, i);
    try {
      body(rng, r);
    } catch (const std::exception& e) {
      r.record(false, "trial " + std::to_string(i) + ": " + e.what());
    }
    r.end_trial();
  }
  return r;
}

bool holds_on_all(const Basis& b, std::span<const AttrSet> sets) {
  return std::all_of(b.begin(), b.end(), [&](const Implication& imp) {
    return std::all_of(sets.begin(), sets.end(), [&](AttrSet s) { return imp.holds_on(s); });
  });
}

void fixture_cd(const Fixture& fx, PropertyResult& r) {
  const MooreFamily f = enumerate_family(fx.input);
  r.record(fx.input == oracle_cd(f), "input is not the canonical direct basis of its family");
  const Basis got = modified_body_building(SectorBasis::build(fx.input), fx.set).to_basis();
  const Basis want = oracle_cd(extend_family(f, fx.set));
  r.record(got == want, mismatch("update differs from the oracle", got, want));
  r.record(reduce_to_canonical(naive_body_building(fx.input, fx.set)) == got, "naive route differs");
  if (fx.expected) r.record(got == *fx.expected, mismatch("update differs from expected", got, *fx.expected));
}

void fixture_d(const Fixture& fx, PropertyResult& r) {
  const MooreFamily f = enumerate_family(fx.input);
  r.record(fx.input == oracle_d(f), "input is not the D-basis of its family");
  const Basis got = she_update_d(fx.input, fx.set);
  const Basis want = oracle_d(extend_family(f, fx.set));
  r.record(got == want, mismatch("update differs from the oracle", got, want));
  r.record(she_update_d(fx.input, fx.set, RefineMode::exhaustive) == got, "exhaustive refinement differs");
  if (fx.expected) r.record(got == *fx.expected, mismatch("update differs from expected", got, *fx.expected));
}

void fixture_remove(const Fixture& fx, PropertyResult& r) {
  const MooreFamily f = enumerate_family(fx.input);
  r.record(fx.input == oracle_cd(f), "input is not the canonical direct basis of its family");
  if (!is_meet_irreducible(f, fx.set)) {
    r.record(false, "set is not meet-irreducible");
    return;
  }
  const Basis got = remove_closed_set(fx.input, f, fx.set);
  const Basis want = oracle_cd(f.without(fx.set));
  r.record(got == want, mismatch("removal differs from the oracle", got, want));
  if (fx.expected) r.record(got == *fx.expected, mismatch("removal differs from expected", got, *fx.expected));
}

void fixture_nondirect(const Fixture& fx, PropertyResult& r) {
  if (!fx.probe) {
    r.record(false, "nondirect fixture needs a probe set");
    return;
  }
  const AttrSet z = *fx.probe;
  r.record(!is_direct(fx.input), "input is direct");
  r.record(closure_direct_pass(fx.input, z) != closure_forward(fx.input, z), "one pass reaches the closure of the probe");
  const Basis naive = naive_body_building(fx.input, fx.set);
  const auto probe_set = std::span<const AttrSet>(&z, 1);
  r.record(holds_on_all(naive, probe_set), "naive update rejects the probe");
  r.record(!extend_family(enumerate_family(fx.input), fx.set).contains(z), "probe is closed in the extended family");
  if (fx.expected) r.record(naive == *fx.expected, mismatch("naive update differs from expected", naive, *fx.expected));
}

}  // namespace

PropertyResult check_fixture(const Fixture& fx) {
  PropertyResult r;
  r.name = "fixture " + fx.name;
  try {
    switch (fx.kind) {
      case Fixture::Kind::cd:
        fixture_cd(fx, r);
        break;
      case Fixture::Kind::d:
        fixture_d(fx, r);
        break;
      case Fixture::Kind::remove:
        fixture_remove(fx, r);
        break;
      case Fixture::Kind::nondirect:
        fixture_nondirect(fx, r);
        break;
    }
  } catch (const std::exception& e) {
    r.record(false, e.what());
  }
  r.end_trial();
  return r;
}

PropertyResult verify_cd_oracle(std::size_t trials, std::uint64_t seed) {
  return run_trials("cd.modified_equals_oracle", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, false);
    const Basis got = modified_body_building(SectorBasis::build(oracle_cd(t.family)), t.added).to_basis();
    const Basis want = oracle_cd(extend_family(t.family, t.added));
    r.record(got == want, mismatch(show(t), got, want));
  });
}

PropertyResult verify_cd_naive_reduce(std::size_t trials, std::uint64_t seed) {
  return run_trials("cd.naive_reduce_equals_modified", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, false);
    const Basis cd = oracle_cd(t.family);
    const Basis naive = reduce_to_canonical(naive_body_building(cd, t.added));
    const Basis modified = modified_body_building(SectorBasis::build(cd), t.added).to_basis();
    r.record(naive == modified, mismatch(show(t), naive, modified));
  });
}

PropertyResult verify_cd_naive_direct(std::size_t trials, std::uint64_t seed) {
  return run_trials("cd.naive_direct_in_direct_out", trials, seed, [](Rng& rng, PropertyResult& r) {
    Trial t = draw_extension(rng, false);
    Basis b = oracle_cd(t.family);
    // every other trial starts from a direct basis that is not canonical
    if (rng() % 2 == 0) {
      if (auto pre = random_new_set(t.family, rng)) {
        b = naive_body_building(b, *pre);
        t.family = extend_family(t.family, *pre);
        if (t.family.contains(t.added)) {
          if (auto again = random_new_set(t.family, rng)) t.added = *again;
        }
      }
    }
    if (!is_direct(b)) {
      r.record(false, "generated input is not direct: " + show(t));
      return;
    }
    const Basis out = naive_body_building(b, t.added);
    r.record(is_direct(out), "output not direct: " + show(t));
    r.record(enumerate_family(out) == extend_family(t.family, t.added), "family differs: " + show(t));
  });
}

PropertyResult verify_cd_structure(std::size_t trials, std::uint64_t seed) {
  return run_trials("cd.modified_structure", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, false);
    const Basis cd = oracle_cd(t.family);
    const SectorBasis sb = modified_body_building(SectorBasis::build(cd), t.added);
    const Basis out = sb.to_basis();
    r.record(has_antichain_sectors(out), "nested bodies: " + show(t));
    r.record(reduce_to_canonical(out) == out, "post-hoc reduction removes implications: " + show(t));
    r.record(is_direct(out), "output not direct: " + show(t));
    r.record(sb == SectorBasis::build(out), "stale singleton differences: " + show(t));
    const SplitResult split = split_on_set(cd, t.added);
    const std::size_t n = t.family.universe().size();
    const std::size_t bound = split.true_part.size() + split.failing_part.size() * (n - t.added.size() - 1);
    r.record(naive_body_building(cd, t.added).size() <= bound, "size bound exceeded: " + show(t));
  });
}

PropertyResult verify_cd_iterated(std::size_t trials, std::uint64_t seed) {
  return run_trials("cd.iterated_rows", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Context k = random_context(6, 6, 0.5, rng);
    SectorBasis sb = SectorBasis::of_trivial_family(k.universe());
    for (AttrSet row : k.rows()) sb = she_update_cd(sb, row);
    const Basis want = canonical_direct_from_context(k);
    r.record(sb.to_basis() == want, mismatch("context\n" + serialize_context(k), sb.to_basis(), want));
  });
}

PropertyResult verify_d_oracle(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.update_equals_oracle", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, true);
    const Basis got = she_update_d(oracle_d(t.family), t.added);
    const Basis want = oracle_d(extend_family(t.family, t.added));
    r.record(got == want, mismatch(show(t), got, want));
    r.record(BinaryOrder::from_basis(got).is_transitive(), "binary part not transitive: " + show(t));
  });
}

PropertyResult verify_d_broken_equivalence(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.broken_equivalence", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_broken_equivalence(rng);
    const Basis d = oracle_d(t.family);
    const Basis prepared = prepare_for_update(d, t.added);
    r.record(enumerate_family(prepared) == t.family, "preparation changes the family: " + show(t));
    const Basis got = she_update_d(d, t.added);
    const Basis want = oracle_d(extend_family(t.family, t.added));
    r.record(got == want, mismatch(show(t), got, want));
  });
}

PropertyResult verify_d_filter_agreement(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.filters_match_full_scan", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, true);
    const auto trace = she_update_d_traced(oracle_d(t.family), t.added);
    if (trace.already_closed) {
      r.record(false, "generated set is closed: " + show(t));
      return;
    }
    const UpdateOrders& ord = trace.orders;
    // all-pairs scan over true binaries, non-binaries, and lifts
    std::vector<Implication> refiners;
    for (const auto& imp : trace.prepared) {
      if (!imp.is_binary() || imp.holds_on(t.added)) refiners.push_back(imp);
    }
    for (const auto& l : trace.lifted) refiners.push_back(l.implication());
    std::vector<Implication> expect_kept;
    for (const auto& l : trace.lifted) {
      const AttrSet reach = ord.new_order.down_set(l.body);
      const bool refined = std::any_of(refiners.begin(), refiners.end(), [&](const Implication& x) {
        return x.head == l.head && x.body != l.body && x.body.is_subset_of(reach);
      });
      if (!refined) expect_kept.push_back(l.implication());
    }
    std::vector<Implication> kept;
    for (const auto& l : trace.filtered.kept) kept.push_back(l.implication());
    r.record(kept == expect_kept, "stage III filter disagrees with the full scan: " + show(t));
    const Basis full = final_refine(trace.built, ord, t.family.universe(), RefineMode::exhaustive);
    r.record(full == trace.result, mismatch("stage V filter disagrees with the full scan: " + show(t), trace.result, full));
  });
}

PropertyResult verify_d_bdirect_identity(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.bdirect_identity", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, true);
    const Basis out = she_update_d(oracle_d(t.family), t.added);
    const ClosureOperator phi{t.family};
    const std::size_t n = t.family.universe().size();
    bool ok = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n) && ok; ++m) {
      const AttrSet y = AttrSet::from_bits(m);
      ok = closure_bdirect(out, y) == extended_operator(phi, t.added, y);
    }
    r.record(ok, "b-direct closure differs from the extended operator: " + show(t));
  });
}

PropertyResult verify_d_refinement_free(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.refinement_free", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, true);
    const auto trace = she_update_d_traced(oracle_d(t.family), t.added);
    r.record(is_refinement_free(trace.result, trace.orders.new_order), "result has a refinable implication: " + show(t));
    // every refinement among built implications satisfies the stage V condition
    const auto& built = trace.built.built;
    const BinaryOrder& o = trace.orders.new_order;
    bool ok = true;
    for (const auto& target : built) {
      const AttrSet reach = o.down_set(target.implication.body);
      for (const auto& other : built) {
        const AttrSet x = other.implication.body;
        if (other.implication.head != target.implication.head || x == target.implication.body) continue;
        if (!x.is_subset_of(reach)) continue;
        ok = ok && (x.contains(target.extension) || x.intersects(t.added & o.down(target.extension)));
      }
    }
    r.record(ok, "built refinement outside the stage V condition: " + show(t));
  });
}

PropertyResult verify_d_stages(std::size_t trials, std::uint64_t seed) {
  return run_trials("d.stage_properties", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_extension(rng, true);
    const auto trace = she_update_d_traced(oracle_d(t.family), t.added);
    const UpdateOrders& ord = trace.orders;
    const AttrSet a = t.added;
    const std::size_t n = t.family.universe().size();
    bool orders_ok = true, note_ok = true;
    for (Attr y = 0; y < n; ++y) {
      for (Attr x = 0; x < n; ++x) {
        const bool old_geq = ord.old_order.geq(y, x);
        const bool new_geq = ord.new_order.geq(y, x);
        if (new_geq && !old_geq) orders_ok = false;
        if (old_geq && (a.contains(x) || (!a.contains(x) && !a.contains(y))) && !new_geq) orders_ok = false;
        if (old_geq && a.contains(y) && !a.contains(x)) {
          const AttrSet r_x = ord.replacements_for(x);
          const bool found = std::any_of(r_x.begin(), r_x.end(),
                                         [&](Attr m) { return ord.new_order.geq(y, m) && ord.old_order.geq(m, x); });
          if (!found) note_ok = false;
        }
      }
    }
    r.record(orders_ok, "new order is not the restriction of the old one: " + show(t));
    r.record(note_ok, "a member of the set above a target has no replacement below it: " + show(t));
    r.record(!ord.targets.intersects(a), "target inside the set: " + show(t));
    bool sound = true, shrink = true;
    for (const auto& l : trace.lifted) {
      const Implication imp = l.implication();
      sound = sound && std::all_of(t.family.begin(), t.family.end(), [&](AttrSet s) { return imp.holds_on(s); });
      shrink = shrink && l.body.size() <= l.source_body.size();
    }
    r.record(sound, "lift fails on the original family: " + show(t));
    r.record(shrink, "lift body larger than its source: " + show(t));
    r.record(trace.built.lift_replacements == 0, "body-building replaced a lifted member: " + show(t));
  });
}

PropertyResult verify_rm_oracle(std::size_t trials, std::uint64_t seed) {
  return run_trials("rm.removal_equals_oracle", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_removal(rng);
    const Basis got = remove_closed_set(oracle_cd(t.family), t.family, t.added);
    const Basis want = oracle_cd(t.family.without(t.added));
    r.record(got == want, mismatch(show(t), got, want));
    // irreducibility and the cover against the definitions
    const auto sets = t.family.sets();
    const AttrSet cover = upper_cover(t.family, t.added);
    bool minimal = true;
    for (AttrSet s : sets) {
      if (t.added.is_proper_subset_of(s) && !cover.is_subset_of(s)) minimal = false;
    }
    r.record(minimal, "upper cover is not below every closed strict superset: " + show(t));
    const AttrSet other = random_subset(t.family.universe().size(), rng);
    if (t.family.contains(other)) {
      bool reducible = false;
      for (AttrSet s : sets) {
        for (AttrSet u : sets) {
          if (other.is_proper_subset_of(s) && other.is_proper_subset_of(u) && (s & u) == other) reducible = true;
        }
      }
      const bool irreducible = other != t.family.full_set() && !reducible;
      r.record(is_meet_irreducible(t.family, other) == irreducible, "meet-irreducibility disagrees: " + show(t));
    }
  });
}

PropertyResult verify_rm_lemmas(std::size_t trials, std::uint64_t seed) {
  return run_trials("rm.lemmas", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_removal(rng);
    const MooreFamily smaller = t.family.without(t.added);
    const Basis cd = oracle_cd(t.family);
    const auto extra = removal_implications(t.family, t.added);
    const Basis joined = cd.with(extra);
    r.record(is_direct(joined), "union is not direct: " + show(t));
    r.record(enumerate_family(joined) == smaller, "union has the wrong family: " + show(t));

    const Basis out = remove_closed_set(cd, t.family, t.added);
    const std::size_t n = t.family.universe().size();
    bool agree = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const AttrSet y = AttrSet::from_bits(m);
      if (!y.is_subset_of(t.added) && closure_forward(out, y) != closure_forward(cd, y)) agree = false;
    }
    r.record(agree, "closures change off the removed set: " + show(t));

    const AttrSet cover = upper_cover(t.family, t.added);
    const auto transversals = minimal_transversals(complements_hypergraph(t.family, t.added));
    bool covered = true;
    for (std::uint64_t m = t.added.bits();; m = (m - 1) & t.added.bits()) {
      const AttrSet z = AttrSet::from_bits(m);
      for (Attr h : smaller.closure(z) - t.added) {
        const bool head_ok = cover.contains(h);
        const bool body_ok =
            std::any_of(transversals.begin(), transversals.end(), [&](AttrSet y) { return y.is_subset_of(z); });
        if (!head_ok || !body_ok) covered = false;
      }
      if (m == 0) break;
    }
    r.record(covered, "an implication failing on the removed set escapes the transversals: " + show(t));
  });
}

PropertyResult verify_rm_roundtrip(std::size_t trials, std::uint64_t seed) {
  return run_trials("rm.remove_then_add", trials, seed, [](Rng& rng, PropertyResult& r) {
    const Trial t = draw_removal(rng);
    const Basis cd = oracle_cd(t.family);
    const Basis removed = remove_closed_set(cd, t.family, t.added);
    const Basis back = she_update_cd(SectorBasis::build(removed), t.added).to_basis();
    r.record(back == cd, mismatch(show(t), back, cd));
  });
}

PropertyResult verify_transversals(std::size_t trials, std::uint64_t seed) {
  return run_trials("rm.transversals_exhaustive", trials, seed, [](Rng& rng, PropertyResult& r) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const Hypergraph h = random_hypergraph(n, m, rng);
    const Hypergraph minimized{h.vertices, minimize_edges(h.edges)};
    const auto got = minimal_transversals(minimized);
    const auto want = minimal_transversals_exhaustive(h.vertices, h.edges);
    r.record(got == want, "Berge multiplication differs from exhaustive search");
    bool antichain = true, meets = true;
    for (AttrSet t : got) {
      for (AttrSet u : got) antichain = antichain && (t == u || !t.is_subset_of(u));
      for (AttrSet e : h.edges) meets = meets && t.intersects(e);
    }
    r.record(antichain, "transversals are not an antichain");
    r.record(meets, "a transversal misses an edge");
  });
}

VerifyReport run_verify(Suite suite, std::size_t budget, std::uint64_t seed, const std::filesystem::path& fixture_dir) {
  VerifyReport report;
  try {
    for (const auto& fx : load_fixtures(fixture_dir)) report.results.push_back(check_fixture(fx));
  } catch (const std::exception& e) {
    PropertyResult r;
  r.name = "fixtures";
    r.record(false, e.what());
    r.end_trial();
    report.results.push_back(r);
  }
  if (report.results.empty()) {
    PropertyResult r;
  r.name = "fixtures";
    r.record(false, "no fixtures in " + fixture_dir.string());
    r.end_trial();
    report.results.push_back(r);
  }
  if (budget == 0) return report;
  auto add = [&](PropertyResult r) { report.results.push_back(std::move(r)); };
  if (suite == Suite::all || suite == Suite::cd) {
    add(verify_cd_oracle(budget, seed));
    add(verify_cd_naive_reduce(budget, seed));
    add(verify_cd_naive_direct(budget, seed));
    add(verify_cd_structure(budget, seed));
    add(verify_cd_iterated(budget, seed));
  }
  if (suite == Suite::all || suite == Suite::d) {
    add(verify_d_oracle(budget, seed));
    add(verify_d_broken_equivalence(budget, seed));
    add(verify_d_filter_agreement(budget, seed));
    add(verify_d_bdirect_identity(budget, seed));
    add(verify_d_refinement_free(budget, seed));
    add(verify_d_stages(budget, seed));
  }
  if (suite == Suite::all || suite == Suite::rm) {
    add(verify_rm_oracle(budget, seed));
    add(verify_rm_lemmas(budget, seed));
    add(verify_rm_roundtrip(budget, seed));
    add(verify_transversals(budget, seed));
  }
  return report;
}

}  // namespace hornup
