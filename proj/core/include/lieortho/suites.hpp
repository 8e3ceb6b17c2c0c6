#pragma once

#include "lieortho/classify.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lieortho {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> witness; // first failure
  bool passed() const { return failures == 0; }
};

// closure, center, radical, series, eigen, semisimple, heisenberg,
// almost-abelian, minimal-nilradical, sl2-semidirect, class-group.
std::vector<std::string> suite_names();

// Runs one suite; `samples` is the per-family sample count. Throws
// std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string &name, std::uint64_t seed, std::size_t samples);
// "all" expands to every suite in order.
std::vector<SuiteResult> run_suites(const std::string &name, std::uint64_t seed,
                                    std::size_t samples);

// Generators for every classified family over the catalog, used by the
// suites.
std::vector<FamilyGenerator> standard_families();

// Almost abelian matrices covering both normal-layout cases.
std::vector<Matrix> almost_abelian_instances();

} // namespace lieortho
