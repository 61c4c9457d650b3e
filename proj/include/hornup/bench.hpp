#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hornup {

struct BenchOptions {
  std::size_t trials = 1000;
  std::size_t min_dim = 10;
  std::size_t max_dim = 15;
  std::uint64_t seed = 1;
  double density = 0.5;
  /// Redraw the new set until it is not already closed.
  bool skip_closed = false;
  /// Draw the new set as a fresh random row instead of a uniform subset.
  bool from_rows = false;
  /// Count sector construction inside the modified timing.
  bool time_prep = false;
  std::size_t repetitions = 3;
};

struct BenchRecord {
  std::size_t trial = 0;
  std::size_t n_attrs = 0;
  std::size_t n_objects = 0;
  std::size_t n_implications = 0;
  std::size_t broken = 0;
  double naive_ms = 0;
  double modified_ms = 0;
  bool equal = false;
};

/// Means over the records with broken <= max_broken (all records when absent).
struct BenchBucket {
  std::string label;
  std::optional<std::size_t> max_broken;
  std::size_t count = 0;
  double naive_mean = 0;
  double modified_mean = 0;
};

struct BenchResult {
  BenchOptions options;
  std::vector<BenchRecord> records;
  std::vector<BenchBucket> summary;
  /// Trials whose set was already closed.
  std::size_t closed_trials = 0;
};

/// Throws VerificationError at the first trial where the two routes disagree.
BenchResult run_bench(const BenchOptions& options);

/// Buckets broken <= 10, <= 20, <= 40 and overall.
std::vector<BenchBucket> summarize(const std::vector<BenchRecord>& records);

inline constexpr const char* kBenchCsvHeader =
    "trial,n_attrs,n_objects,n_implications,broken,naive_ms,modified_ms,equal";

std::string format_bench_csv(const BenchResult& result);
std::string format_bench_text(const BenchResult& result);

}  // namespace hornup
