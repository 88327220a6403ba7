#pragma once

// Exhaustive and randomized checks of the algebraic identities, shared by
// the CLI `verify` command and the acceptance tests.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliffcat/clifford.h"
#include "cliffcat/euler.h"

namespace cliffcat {

struct VerifyOptions {
  HalfInt bound = HalfInt::from_doubled(11);  // |index| and entry bound
  std::size_t grade_max = 3;                  // m, n <= grade_max
  std::uint64_t seed = 1;
  std::size_t random_cases = 200;
};

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

// Individual checks.
VerifyReport check_fock_relations(const VerifyOptions& opt);
VerifyReport check_clifford_algebra(const VerifyOptions& opt);
VerifyReport check_k_clifford_relations(const VerifyOptions& opt);
VerifyReport check_intertwining(const VerifyOptions& opt);
VerifyReport check_normalize_route(const VerifyOptions& opt);
VerifyReport check_adjointness(const VerifyOptions& opt);
VerifyReport check_characters(const VerifyOptions& opt);
VerifyReport check_koszul(const VerifyOptions& opt);
VerifyReport check_glhalf(const VerifyOptions& opt);

/// Suite names: clifford, intertwine, adjoint, characters, koszul, glhalf, all.
/// Throws std::invalid_argument for an unknown name.
std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& opt);
const std::vector<std::string>& suite_names();

// Random generators used by the randomized checks and tests.
WedgeMonomial random_monomial(std::mt19937_64& rng, HalfInt pool, std::size_t max_each = 3);
FockVector random_fock(std::mt19937_64& rng, HalfInt pool, std::size_t max_terms = 4);
CliffordElement random_word(std::mt19937_64& rng, HalfInt pool, std::size_t max_letters = 3);
KVector random_kvector(std::mt19937_64& rng, std::size_t grade_max, HalfInt bound,
                       std::size_t max_terms = 4);

/// Indices -bound, ..., -1/2, 1/2, ..., bound.
std::vector<HalfInt> signed_indices(HalfInt bound);
/// Indices 1/2, ..., bound.
std::vector<HalfInt> positive_indices(HalfInt bound);

std::string format_report(const VerifyReport& r, std::size_t max_failures = 10);

}  // namespace cliffcat
