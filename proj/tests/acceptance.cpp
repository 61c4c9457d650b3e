// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hornup/bench.hpp"
#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/d_update.hpp"
#include "hornup/fixture.hpp"
#include "hornup/oracle.hpp"
#include "hornup/removal.hpp"
#include "hornup/verify.hpp"

using namespace hornup;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(const std::string& id, const std::string& title, const Outcome& o, const std::string& measured) {
  std::cout << (o.ok ? "PASS " : "FAIL ") << id << ' ' << title << " (" << measured << ')';
  if (!o.ok) std::cout << ": " << o.note;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

// Fixture checks are timed as the median of several runs so one cold start does not decide.
void timed_fixture(const std::string& id, const std::string& title, double limit_ms,
                   const std::function<void(Outcome&)>& check) {
  std::vector<double> times;
  Outcome o;
  for (int i = 0; i < 5; ++i) {
    Outcome once;
    const auto start = Clock::now();
    check(once);
    times.push_back(seconds_since(start) * 1000);
    if (i == 0) o = once;
  }
  std::sort(times.begin(), times.end());
  const double ms = times[times.size() / 2];
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f ms, limit %.0f ms", ms, limit_ms);
  o.require(ms < limit_ms, "too slow");
  report(id, title, o, buf);
}

void property_group(const std::string& id, const std::string& title, double limit_s, std::size_t min_trials,
                    const std::vector<std::function<PropertyResult()>>& props) {
  Outcome o;
  const auto start = Clock::now();
  std::string counts;
  for (const auto& p : props) {
    const PropertyResult r = p();
    o.require(r.ok(), r.name + ": " + r.detail);
    o.require(r.passed + r.failed >= min_trials, r.name + ": too few trials");
    counts += r.name + " " + std::to_string(r.passed) + "/" + std::to_string(r.passed + r.failed) + ", ";
  }
  const double s = seconds_since(start);
  o.require(s < limit_s, "too slow");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s, limit %.0f s", s, limit_s);
  report(id, title, o, counts + buf);
}

Fixture fixture(const std::string& name) { return load_fixture(default_fixture_dir() / (name + ".fixture")); }

std::vector<Implication> sorted(std::vector<Implication> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Implication imp(const Universe& u, const std::string& body, const std::string& head) {
  return {u.parse_set(body), *u.index_of(head)};
}

}  // namespace

int main() {
  const std::uint64_t seed = 20261014;

  {
    const Fixture fx = fixture("nondirect");
    timed_fixture("1a", "one pass needs a direct basis", 1, [&](Outcome& o) {
      const Universe& u = fx.input.universe();
      const AttrSet z = *fx.probe;
      o.require(!closure_direct_pass(fx.input, z).contains(*u.index_of("u")), "one pass reaches u");
      o.require(closure_forward(fx.input, z).contains(*u.index_of("u")), "forward chaining misses u");
      const Basis naive = naive_body_building(fx.input, fx.set);
      o.require(std::all_of(naive.begin(), naive.end(), [&](const Implication& i) { return i.holds_on(z); }),
                "naive update rejects the probe");
      o.require(naive == *fx.expected, "naive update differs from the expected basis");
    });
  }

  {
    const Fixture fx = fixture("sectors");
    timed_fixture("1b", "sector lists and modified update", 1, [&](Outcome& o) {
      const Universe& u = fx.input.universe();
      const SectorBasis sb = SectorBasis::build(fx.input);
      const std::vector<SectorEntry> d{{u.parse_set("e"), {}}, {u.parse_set("b,c"), u.parse_set("e")}};
      const std::vector<SectorEntry> e{{u.parse_set("a,d"), {}}, {u.parse_set("a,b,c"), u.parse_set("d")}};
      const auto sd = sb.sector(*u.index_of("d"));
      const auto se = sb.sector(*u.index_of("e"));
      o.require(std::vector<SectorEntry>(sd.begin(), sd.end()) == d, "d-sector differs");
      o.require(std::vector<SectorEntry>(se.begin(), se.end()) == e, "e-sector differs");
      const Basis got = modified_body_building(sb, fx.set).to_basis();
      o.require(got == *fx.expected, "modified update differs");
      o.require(reduce_to_canonical(naive_body_building(fx.input, fx.set)) == got, "naive route differs");
    });
  }

  {
    const Fixture fx = fixture("lift");
    timed_fixture("1c", "D-basis update stages and result", 5, [&](Outcome& o) {
      const Universe& u = fx.input.universe();
      const auto t = she_update_d_traced(fx.input, fx.set);
      o.require(t.orders.targets == u.parse_set("x,y"), "targets differ");
      o.require(t.orders.replacements_for(*u.index_of("x")) == u.parse_set("a"), "replacements of x differ");
      o.require(t.orders.replacements_for(*u.index_of("y")) == u.parse_set("a'"), "replacements of y differ");
      std::vector<Implication> lifts;
      for (const auto& l : t.lifted) lifts.push_back(l.implication());
      o.require(sorted(lifts) == sorted({imp(u, "a,y", "d"), imp(u, "x,a'", "d"), imp(u, "a,a'", "d")}),
                "lifts differ");
      o.require(t.filtered.removed.empty(), "a lift was removed at stage III");
      std::vector<Implication> from_lift, from_binary;
      for (const auto& b : t.built.built) (b.from_lift ? from_lift : from_binary).push_back(b.implication);
      o.require(sorted(from_lift) == sorted({imp(u, "a,a',y", "d"), imp(u, "a,a',x", "d")}), "lift body-building differs");
      o.require(sorted(from_binary) ==
                    sorted({imp(u, "a,y", "x"), imp(u, "a,d", "x"), imp(u, "a',x", "y"), imp(u, "a',d", "y")}),
                "binary body-building differs");
      o.require(!t.result.contains(imp(u, "a,a',y", "d")) && !t.result.contains(imp(u, "a,a',x", "d")),
                "stage V kept a refined implication");
      o.require(t.result == *fx.expected, "result differs from the expected basis");
      const MooreFamily g = extend_family(enumerate_family(fx.input), fx.set);
      o.require(t.result == d_basis_from_cd(canonical_direct_from_family(g)), "result differs from the oracle");
    });
  }

  {
    const Fixture fx = fixture("lift-refined");
    timed_fixture("1d", "refined lift removed with its witness", 1, [&](Outcome& o) {
      const Universe& u = fx.input.universe();
      const auto t = she_update_d_traced(fx.input, fx.set);
      const auto& removed = t.filtered.removed;
      const auto it = std::find_if(removed.begin(), removed.end(), [&](const RefinedLift& r) {
        return r.lift.implication() == imp(u, "x,a_y", "d");
      });
      o.require(it != removed.end(), "lift x a_y -> d not removed");
      if (it != removed.end()) {
        o.require(it->refiner == imp(u, "x,a'", "d"), "wrong refiner");
        o.require(it->witness == u.parse_set("a_y,a'"), "wrong witness set");
      }
    });
  }

  {
    const Fixture fx = fixture("removal");
    timed_fixture("1e", "removal of a meet-irreducible set", 1, [&](Outcome& o) {
      const MooreFamily f = enumerate_family(fx.input);
      o.require(remove_closed_set(fx.input, f, fx.set) == *fx.expected, "removal differs from the expected basis");
    });
  }

  property_group("2", "oracle equivalence of all three updates", 60, 300,
                 {[&] { return verify_cd_oracle(500, seed); }, [&] { return verify_d_oracle(500, seed); },
                  [&] { return verify_d_broken_equivalence(300, seed); },
                  [&] { return verify_rm_oracle(500, seed); }});

  property_group("3", "invariants: direct in/out, non-refinement, b-direct identity, closures off the removed set",
                 60, 300,
                 {[&] { return verify_cd_naive_direct(300, seed); },
                  [&] { return verify_d_refinement_free(300, seed); },
                  [&] { return verify_d_bdirect_identity(300, seed); }, [&] { return verify_rm_lemmas(300, seed); }});

  {
    Outcome o;
    const auto start = Clock::now();
    BenchOptions opt;
    opt.trials = 1000;
    opt.seed = seed;
    std::string measured;
    try {
      const BenchResult r = run_bench(opt);
      const BenchBucket& overall = r.summary.back();
      o.require(r.records.size() == 1000, "wrong trial count");
      o.require(std::all_of(r.records.begin(), r.records.end(), [](const BenchRecord& x) { return x.equal; }),
                "outputs differ");
      o.require(r.summary.size() == 4 && r.summary[0].label == "<=10" && r.summary[1].label == "<=20" &&
                    r.summary[2].label == "<=40" && overall.label == "overall",
                "bucket rows missing");
      o.require(overall.modified_mean < overall.naive_mean, "modified not faster");
      const double ratio = overall.naive_mean / overall.modified_mean;
      o.require(ratio >= 2, "speedup below 2x");
      char buf[160];
      std::snprintf(buf, sizeof buf, "naive %.4f ms, modified %.4f ms, ratio %.2f, ", overall.naive_mean,
                    overall.modified_mean, ratio);
      measured = buf;
    } catch (const std::exception& e) {
      o.require(false, e.what());
    }
    const double s = seconds_since(start);
    o.require(s < 1800, "too slow");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s, limit 1800 s", s);
    report("4", "benchmark: modified beats naive by at least 2x", o, measured + buf);
  }

  property_group("5", "minimal transversals against exhaustive search", 30, 200,
                 {[&] { return verify_transversals(200, seed); }});

  property_group("6", "row-by-row construction reaches the oracle basis", 60, 50,
                 {[&] { return verify_cd_iterated(50, seed); }});

  return failures == 0 ? 0 : 1;
}
