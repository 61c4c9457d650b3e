#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "hornup/attr_set.hpp"
#include "hornup/basis.hpp"
#include "hornup/family.hpp"

namespace hornup {

/// Subset sweeps above this size are sampled instead of exhaustive.
inline constexpr std::size_t kExhaustiveLimit = 12;
/// Hard guard for enumerate_family.
inline constexpr std::size_t kEnumerateLimit = 20;
/// Number of random subsets used by sampled sweeps.
inline constexpr std::size_t kSampledSubsets = 1000;

/// Least superset of y closed under every implication (forward chaining).
AttrSet closure_forward(const Basis& b, AttrSet y);

/// y plus the heads of implications whose body lies in y; one sweep only.
AttrSet closure_direct_pass(const Basis& b, AttrSet y);

/// y-down under the binary part, then one sweep of the whole basis over
/// that set. Throws UnpreparedBasis if the binary part is not transitive.
AttrSet closure_bdirect(const Basis& b, AttrSet y);

/// Intersection of the rows containing y; the full set if none does.
AttrSet closure_from_context(const Context& k, AttrSet y);

/// A closure operator backed by implications, a context, or a family.
class ClosureOperator {
 public:
  using Source = std::variant<Basis, Context, MooreFamily>;

  explicit ClosureOperator(Source source) : source_(std::move(source)) {}

  const Universe& universe() const;
  AttrSet operator()(AttrSet y) const;

 private:
  Source source_;
};

/// Every closed set. Throws UniverseTooLarge past kEnumerateLimit.
MooreFamily enumerate_family(const Basis& b);
MooreFamily enumerate_family(const Context& k);

/// f plus its intersections with a.
MooreFamily extend_family(const MooreFamily& f, AttrSet a);

/// phi(y) when y is not inside a, phi(y) & a otherwise: the closure operator
/// of the family extended by a.
AttrSet extended_operator(const ClosureOperator& phi, AttrSet a, AttrSet y);

/// Semantic directness: one pass equals forward chaining on every subset
/// (exhaustive up to kExhaustiveLimit, sampled with `seed` above).
bool is_direct(const Basis& b, std::uint64_t seed = 0);

struct BdirectVerdict {
  bool binary_transitive = false;
  /// closure_bdirect agrees with closure_forward on the swept subsets.
  bool semantic = false;
  /// For every A -> b and C u {b} -> d there is G -> d with G inside (A u C)-down.
  bool syntactic = false;

  bool holds() const { return binary_transitive && semantic; }
};

BdirectVerdict bdirect_verdict(const Basis& b, std::uint64_t seed = 0);
inline bool is_bdirect(const Basis& b, std::uint64_t seed = 0) { return bdirect_verdict(b, seed).holds(); }

/// Calls `fn(AttrSet)` on every subset of the universe for n <= kExhaustiveLimit,
/// otherwise on kSampledSubsets uniform random subsets drawn from `seed`.
template <typename Fn>
bool all_subsets_satisfy(std::size_t n, std::uint64_t seed, Fn&& fn);

}  // namespace hornup

#include "hornup/detail/subset_sweep.hpp"
