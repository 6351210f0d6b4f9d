#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cohomtab/functionals.hpp"
#include "cohomtab/table.hpp"

namespace cohomtab {

inline constexpr std::uint64_t kDefaultSeed = 20080917;

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return trials > 0 && failures == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 500;
  int max_s = 6;
};

using Rng = std::mt19937_64;

// Random strictly increasing sequence of `length` integers in [lo, hi].
std::vector<int> random_increasing(Rng& rng, int length, int lo, int hi);
DegreeSequence random_degrees(Rng& rng, int s, int lo, int hi);
// p/q with |p| <= num_bound, 1 <= q <= den_bound.
Rational random_rational(Rng& rng, int num_bound, int den_bound);
// Window-only table with random rational entries on `window`.
CohomologyTable random_table(Rng& rng, int n, Window window, bool nonnegative);
// Strictly decreasing chain of `count` root sequences of length <= n, roots in [lo, hi].
std::vector<RootSequence> random_chain(Rng& rng, int n, int count, int lo, int hi);

// -L(d,φ^0) = Σ A_k L(d^{(s+1-k)}, ψ^{(s+1-k)}) on random d and random tables.
SuiteResult chi_expansion_suite(const SuiteOptions& options);
// The descending-induction product identity on random rational values, all (ℓ, t).
SuiteResult product_identity_suite(const SuiteOptions& options);
// L(d,∞)(γ^z) = 0 for random generators.
SuiteResult interpolation_suite(const SuiteOptions& options);
// ⟨β^d,γ⟩_{c,τ} = L(d,φ^τ) for c < d_τ, = L(d,φ^{τ+1}) for c >= d_{τ+1};
// ⟨β^d,γ⟩ = L(d,(0,1,...,s+1)).
SuiteResult pairing_reduction_suite(const SuiteOptions& options);

std::vector<SuiteResult> run_identity_suites(const SuiteOptions& options);

// L(d,φ^j)(γ) >= 0 for 1 <= j <= s and -L(d,φ^0)(γ) >= 0 over `count`
// random sequences with s <= s_max and entries in `box`.
SuiteResult positivity_suite(const std::string& name, const CohomologyTable& t, Rng& rng, int count,
                             int box_lo, int box_hi, int s_max);

// L(d,∞)(γ) = 0 over `count` random sequences with s >= dim γ.
SuiteResult interpolation_on_table(const std::string& name, const CohomologyTable& t, Rng& rng,
                                   int count, int box_lo, int box_hi, int s_max);

}  // namespace cohomtab
