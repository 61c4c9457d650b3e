#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "hornup/bench.hpp"
#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/d_update.hpp"
#include "hornup/errors.hpp"
#include "hornup/io.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"
#include "hornup/removal.hpp"
#include "hornup/verify.hpp"

namespace hornup::cli {

namespace {

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
};

struct GenArgs {
  std::size_t rows = 10;
  std::size_t cols = 10;
  double density = 0.5;
  std::string emit = "context";
};

struct UpdateArgs {
  std::string kind = "cd";
  std::string basis;
  std::string set;
  std::string universe;
  bool verify = false;
  bool stats = false;
};

struct RemoveArgs {
  std::string basis;
  std::string context;
  std::string set;
  std::string universe;
  bool verify = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::size_t budget = 100;
  std::string fixtures;
};

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_text_file(c.out, text);
  }
}

struct Loaded {
  Basis basis;
  /// The universe came from a directive or --universe rather than inference.
  bool explicit_universe = false;
};

std::string render(const Loaded& in, const Basis& b) {
  return serialize_basis(b, {.with_universe = in.explicit_universe});
}

Loaded load_basis(const std::string& path, const std::string& universe) {
  const std::string text = read_text_file(path);
  if (universe.empty()) return {parse_implications(text), text.find("# universe:") != std::string::npos};
  std::vector<std::string> labels;
  std::istringstream in(universe);
  for (std::string l; in >> l;) {
    for (std::size_t p; (p = l.find(',')) != std::string::npos;) {
      if (p > 0) labels.push_back(l.substr(0, p));
      l.erase(0, p + 1);
    }
    if (!l.empty()) labels.push_back(l);
  }
  return {parse_implications(text, Universe(std::move(labels))), true};
}

int cmd_gen(const Common& c, const GenArgs& g, std::ostream& out) {
  if (g.rows < 1 || g.rows > 20 || g.cols < 1 || g.cols > 20) throw PreconditionError("rows and cols must lie in 1..20");
  if (!(g.density > 0 && g.density < 1)) throw PreconditionError("density must lie strictly between 0 and 1");
  Rng rng(c.seed);
  const Context k = random_context(g.rows, g.cols, g.density, rng);
  if (g.emit == "context") {
    emit(c, serialize_context(k), out);
  } else {
    Basis cd = canonical_direct_from_context(k);
    if (g.emit == "d") cd = d_basis_from_cd(cd);
    emit(c, serialize_basis(cd, {.with_universe = true}), out);
  }
  return ok;
}

int cmd_update(const Common& c, const UpdateArgs& u, std::ostream& out, std::ostream& err) {
  const Loaded in = load_basis(u.basis, u.universe);
  const Basis& b = in.basis;
  const AttrSet a = b.universe().parse_set(u.set);
  const std::size_t broken = split_on_set(b, a).failing_part.size();
  if (broken == 0) err << "warning: {" << u.set << "} is already closed; basis unchanged\n";

  const auto start = std::chrono::steady_clock::now();
  Basis result;
  if (u.kind == "cd") {
    result = she_update_cd(SectorBasis::build(b), a).to_basis();
  } else {
    result = she_update_d(b, a);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(c, render(in, result), out);

  if (u.stats) err << "broken " << broken << "\nimplications " << b.size() << " -> " << result.size() << "\ntime_ms " << ms << '\n';
  if (u.verify) {
    const MooreFamily extended = extend_family(enumerate_family(b), a);
    Basis want = canonical_direct_from_family(extended);
    if (u.kind == "d") want = d_basis_from_cd(want);
    const bool good = want == result;
    err << (good ? "PASS" : "FAIL") << " update matches the oracle\n";
    if (!good) return verification_failure;
  }
  return ok;
}

int cmd_remove(const Common& c, const RemoveArgs& r, std::ostream& out, std::ostream& err) {
  const Loaded in = load_basis(r.basis, r.universe);
  const Basis& b = in.basis;
  const AttrSet a = b.universe().parse_set(r.set);
  MooreFamily f = enumerate_family(b);
  if (!r.context.empty()) {
    const Context k = parse_context(read_text_file(r.context));
    if (!(k.universe() == b.universe())) throw PreconditionError("context and basis have different universes");
    f = enumerate_family(k);
    if (!(enumerate_family(b) == f)) throw PreconditionError("basis does not describe the context");
  }
  if (!f.contains(a)) throw PreconditionError("{" + r.set + "} is not closed");
  const Basis result = remove_closed_set(b, f, a);
  emit(c, render(in, result), out);
  if (r.verify) {
    const bool good = canonical_direct_from_family(f.without(a)) == result;
    err << (good ? "PASS" : "FAIL") << " removal matches the oracle\n";
    if (!good) return verification_failure;
  }
  return ok;
}

int cmd_bench(const Common& c, BenchOptions opt, std::ostream& out) {
  opt.seed = c.seed;
  const BenchResult result = run_bench(opt);
  emit(c, c.format == "csv" ? format_bench_csv(result) : format_bench_text(result), out);
  return ok;
}

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  Suite suite = Suite::all;
  if (v.suite == "cd") suite = Suite::cd;
  if (v.suite == "d") suite = Suite::d;
  if (v.suite == "rm") suite = Suite::rm;
  const auto dir = v.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(v.fixtures);
  const VerifyReport report = run_verify(suite, v.budget, c.seed, dir);
  emit(c, report.format(), out);
  return report.ok() ? ok : verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maintain implicational bases under closed-set addition and removal", "hornup"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--out", common.out, "Write output to this file instead of stdout");
    if (with_format) sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "text"}));
  };

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Random context (or its basis)");
  add_common(g, false);
  g->add_option("--rows", gen.rows, "Objects")->capture_default_str();
  g->add_option("--cols", gen.cols, "Attributes")->capture_default_str();
  g->add_option("--density", gen.density, "Probability of a cross")->capture_default_str();
  g->add_option("--emit", gen.emit, "context, cd, or d")->check(CLI::IsMember({"context", "cd", "d"}));

  UpdateArgs upd;
  auto* u = app.add_subcommand("update", "Add one closed set to a basis");
  add_common(u, false);
  u->add_option("--kind", upd.kind, "cd or d")->check(CLI::IsMember({"cd", "d"}));
  u->add_option("--basis", upd.basis, "Basis file")->required();
  u->add_option("--set", upd.set, "New closed set, e.g. a,b,c")->required();
  u->add_option("--universe", upd.universe, "Attribute labels in order");
  u->add_flag("--verify", upd.verify, "Compare against the brute-force oracle");
  u->add_flag("--stats", upd.stats, "Print broken count and timing");

  RemoveArgs rem;
  auto* r = app.add_subcommand("remove", "Remove one meet-irreducible closed set");
  add_common(r, false);
  r->add_option("--basis", rem.basis, "Canonical direct basis file")->required();
  r->add_option("--context", rem.context, "Context file describing the same family");
  r->add_option("--set", rem.set, "Closed set to remove")->required();
  r->add_option("--universe", rem.universe, "Attribute labels in order");
  r->add_flag("--verify", rem.verify, "Compare against the brute-force oracle");

  BenchOptions bench;
  auto* bn = app.add_subcommand("bench", "Time naive against modified body-building");
  add_common(bn, true);
  common.format = "csv";
  bn->add_option("--trials", bench.trials)->capture_default_str()->check(CLI::PositiveNumber);
  bn->add_option("--min-dim", bench.min_dim)->capture_default_str();
  bn->add_option("--max-dim", bench.max_dim)->capture_default_str();
  bn->add_option("--density", bench.density)->capture_default_str();
  bn->add_flag("--skip-closed", bench.skip_closed, "Redraw sets that are already closed");
  bn->add_flag("--from-rows", bench.from_rows, "Draw the new set like a context row");
  bn->add_flag("--time-prep", bench.time_prep, "Include sector construction in the modified timing");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run fixtures and oracle properties");
  add_common(v, false);
  v->add_option("--suite", ver.suite)->check(CLI::IsMember({"all", "cd", "d", "rm"}));
  v->add_option("--budget", ver.budget, "Random trials per property; 0 for fixtures only")->capture_default_str();
  v->add_option("--fixtures", ver.fixtures, "Fixture directory");

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (g->parsed()) return cmd_gen(common, gen, out);
    if (u->parsed()) return cmd_update(common, upd, out, err);
    if (r->parsed()) return cmd_remove(common, rem, out, err);
    if (bn->parsed()) return cmd_bench(common, bench, out);
    if (v->parsed()) return cmd_verify(common, ver, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return verification_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return parse_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace hornup::cli
