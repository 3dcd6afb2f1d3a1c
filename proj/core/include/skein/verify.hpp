#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skein/loop_monomial.hpp"
#include "skein/word.hpp"

namespace skein {

// Property suites realizing the per-module invariants. Each suite is
// deterministic for a fixed seed and returns machine-readable results; a
// failure message carries enough detail to reproduce the counterexample.

struct SuiteOptions {
  int n_max = 4;        // strand bound for engine sweeps
  int exp_max = 2;      // |exponent| bound
  int index_max = 2;    // loop index bound
  int samples = 100;    // randomized repetitions
  std::uint64_t seed = 20250809ull;
  bool canonical = true;
};

struct SuiteResult {
  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// relations | lemmas | order | pipeline | matrix | trace
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

// Deterministic generator used by the suites (and reusable in tests).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  int nonzero(int max_abs) {
    int v = uniform(1, max_abs);
    return uniform(0, 1) ? v : -v;
  }

  // Grammar monomial: consecutive support from 0, nonzero exponents.
  LoopMonomial grammar_monomial(int max_index, int max_abs_exp, bool canonical);

  // Arbitrary support (possibly gapped) monomial.
  LoopMonomial loop_monomial(int max_index, int max_abs_exp);

  // Random word over the base letters (and looping macros when allowed).
  Word word(int n, int length, bool macros);

 private:
  std::uint64_t state_;
};

}  // namespace skein
