#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dotdepth/identities.hpp"

namespace dotdepth {

struct SuiteOptions {
  std::size_t maxLen = 7;      // word length for refinement suites
  std::uint64_t seed = 1;      // random corpora
  std::size_t smallCap = 4;    // semigroup size limit for the exhaustive suites
};

/// Names accepted by run_suite, in the order they are listed.
const std::vector<std::string>& suite_names();

/// Runs one named property suite over the built-in corpus. Each returned
/// report is one property instance (usually one semigroup or language).
/// Throws InputError for an unknown name.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace dotdepth
