#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alignlab {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure

  bool passed() const { return failures == 0; }
};

// Self-check suites pitting the closed forms against the direct-definition
// oracles. Each returns the number of checks run and any violations found.
SuiteResult verify_genfunc(std::uint64_t seed);
SuiteResult verify_dominance(std::uint64_t seed);
SuiteResult verify_tails(std::uint64_t seed);
SuiteResult verify_converse(std::uint64_t seed);
SuiteResult verify_hyp(std::uint64_t seed);

std::vector<std::string> verification_suite_names();

/// Runs the named suites ("all" or empty list = every suite).
std::vector<SuiteResult> run_verification(const std::vector<std::string>& suites,
                                          std::uint64_t seed);

}  // namespace alignlab
