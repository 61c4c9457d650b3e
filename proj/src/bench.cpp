#include "hornup/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "hornup/cd_update.hpp"
#include "hornup/closure.hpp"
#include "hornup/errors.hpp"
#include "hornup/oracle.hpp"
#include "hornup/random.hpp"

namespace hornup {

namespace {

template <typename Fn>
double median_ms(std::size_t reps, Fn&& fn) {
  std::vector<double> times;
  for (std::size_t i = 0; i < std::max<std::size_t>(reps, 1); ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

BenchResult run_bench(const BenchOptions& opt) {
  if (opt.trials == 0) throw PreconditionError("trials must be at least 1");
  if (opt.min_dim < 1 || opt.min_dim > opt.max_dim || opt.max_dim > kOracleContextLimit) {
    throw PreconditionError("dimensions must satisfy 1 <= min <= max <= " + std::to_string(kOracleContextLimit));
  }
  BenchResult result;
  result.options = opt;
  Rng rng(opt.seed);
  std::uniform_int_distribution<std::size_t> dim(opt.min_dim, opt.max_dim);
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const Context k = random_context(rows, cols, opt.density, rng);
    const Basis cd = canonical_direct_from_context(k);
    auto draw = [&] { return opt.from_rows ? random_subset(cols, rng, opt.density) : random_subset(cols, rng); };
    AttrSet a = draw();
    if (opt.skip_closed) {
      for (std::size_t tries = 0; tries < 1000 && split_on_set(cd, a).failing_part.empty(); ++tries) a = draw();
    }

    BenchRecord rec;
    rec.trial = trial;
    rec.n_attrs = cols;
    rec.n_objects = rows;
    rec.n_implications = cd.size();
    rec.broken = split_on_set(cd, a).failing_part.size();
    if (rec.broken == 0) ++result.closed_trials;

    Basis naive_out;
    rec.naive_ms = median_ms(opt.repetitions, [&] { naive_out = reduce_to_canonical(naive_body_building(cd, a)); });
    SectorBasis modified_out;
    if (opt.time_prep) {
      rec.modified_ms =
          median_ms(opt.repetitions, [&] { modified_out = modified_body_building(SectorBasis::build(cd), a); });
    } else {
      const SectorBasis sb = SectorBasis::build(cd);
      rec.modified_ms = median_ms(opt.repetitions, [&] { modified_out = modified_body_building(sb, a); });
    }
    rec.equal = naive_out == modified_out.to_basis();
    result.records.push_back(rec);
    if (!rec.equal) throw VerificationError("benchmark trial " + std::to_string(trial) + ": naive and modified updates differ");
  }
  result.summary = summarize(result.records);
  return result;
}

std::vector<BenchBucket> summarize(const std::vector<BenchRecord>& records) {
  std::vector<BenchBucket> out{{"<=10", 10}, {"<=20", 20}, {"<=40", 40}, {"overall", std::nullopt}};
  for (auto& b : out) {
    double naive = 0, modified = 0;
    for (const auto& r : records) {
      if (b.max_broken && r.broken > *b.max_broken) continue;
      ++b.count;
      naive += r.naive_ms;
      modified += r.modified_ms;
    }
    if (b.count > 0) {
      b.naive_mean = naive / static_cast<double>(b.count);
      b.modified_mean = modified / static_cast<double>(b.count);
    }
  }
  return out;
}

std::string format_bench_csv(const BenchResult& result) {
  std::ostringstream out;
  out << kBenchCsvHeader << '\n';
  for (const auto& r : result.records) {
    out << r.trial << ',' << r.n_attrs << ',' << r.n_objects << ',' << r.n_implications << ',' << r.broken << ','
        << fixed(r.naive_ms) << ',' << fixed(r.modified_ms) << ',' << (r.equal ? "true" : "false") << '\n';
  }
  out << "# summary\n";
  out << "# bucket,count,naive_mean_ms,modified_mean_ms\n";
  for (const auto& b : result.summary) {
    out << "# " << b.label << ',' << b.count << ',' << fixed(b.naive_mean) << ',' << fixed(b.modified_mean) << '\n';
  }
  out << "# closed_trials," << result.closed_trials << '\n';
  return out.str();
}

std::string format_bench_text(const BenchResult& result) {
  std::ostringstream out;
  const auto& o = result.options;
  out << o.trials << " trials, dims " << o.min_dim << ".." << o.max_dim << ", density " << o.density << ", seed "
      << o.seed << '\n';
  out << "sets already closed: " << result.closed_trials << '\n';
  char line[128];
  std::snprintf(line, sizeof line, "%-8s %6s %12s %12s %8s\n", "broken", "count", "naive ms", "modified ms", "ratio");
  out << line;
  for (const auto& b : result.summary) {
    const double ratio = b.modified_mean > 0 ? b.naive_mean / b.modified_mean : 0;
    std::snprintf(line, sizeof line, "%-8s %6zu %12.4f %12.4f %8.2f\n", b.label.c_str(), b.count, b.naive_mean,
                  b.modified_mean, ratio);
    out << line;
  }
  return out.str();
}

}  // namespace hornup
