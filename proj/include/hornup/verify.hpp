#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hornup/fixture.hpp"

namespace hornup {

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failure, for the report.
  std::string detail;

  bool ok() const { return failed == 0; }
  /// One check of the current trial; the first failing check becomes `detail`.
  void record(bool good, const std::string& what);
  /// Counts the current trial as passed when all of its checks held.
  void end_trial();

 private:
  bool trial_failed_ = false;
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool ok() const;
  /// One `PASS name passed/total` or `FAIL name ...` line per property.
  std::string format() const;
};

enum class Suite { all, cd, d, rm };

/// Checks one fixture against its expected basis and the oracle.
PropertyResult check_fixture(const Fixture& fx);

PropertyResult verify_cd_oracle(std::size_t trials, std::uint64_t seed);
PropertyResult verify_cd_naive_reduce(std::size_t trials, std::uint64_t seed);
/// Direct in, direct out for the naive formula, and its family is the extended family.
PropertyResult verify_cd_naive_direct(std::size_t trials, std::uint64_t seed);
/// The modified formula needs no post-hoc reduction and respects the size bound.
PropertyResult verify_cd_structure(std::size_t trials, std::uint64_t seed);
PropertyResult verify_cd_iterated(std::size_t trials, std::uint64_t seed);

PropertyResult verify_d_oracle(std::size_t trials, std::uint64_t seed);
/// Inputs where the new set splits a binary equivalence.
PropertyResult verify_d_broken_equivalence(std::size_t trials, std::uint64_t seed);
PropertyResult verify_d_filter_agreement(std::size_t trials, std::uint64_t seed);
/// b-direct closure of the result equals the extended operator on every subset.
PropertyResult verify_d_bdirect_identity(std::size_t trials, std::uint64_t seed);
/// No Z -> d inside Y-down_A for another non-binary Y -> d of the result.
PropertyResult verify_d_refinement_free(std::size_t trials, std::uint64_t seed);
/// Orders, replacement sets, and lifts obey their stated properties.
PropertyResult verify_d_stages(std::size_t trials, std::uint64_t seed);

PropertyResult verify_rm_oracle(std::size_t trials, std::uint64_t seed);
/// The union with the new implications is direct; closures agree off the removed set.
PropertyResult verify_rm_lemmas(std::size_t trials, std::uint64_t seed);
PropertyResult verify_rm_roundtrip(std::size_t trials, std::uint64_t seed);
PropertyResult verify_transversals(std::size_t trials, std::uint64_t seed);

/// `budget` random trials per property; 0 runs the fixtures only.
VerifyReport run_verify(Suite suite, std::size_t budget, std::uint64_t seed,
                        const std::filesystem::path& fixture_dir = default_fixture_dir());

}  // namespace hornup
