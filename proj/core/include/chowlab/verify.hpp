#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chowlab {

enum class Level { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  Level level = Level::Quick;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Identifiers 1..14 of the acceptance checks.
std::vector<int> criterion_ids();
Level criterion_level(int id);
std::string criterion_name(int id);

/// Runs one check; library errors are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);
/// Quick runs every quick check; Full runs all of them.
std::vector<CriterionResult> run_criteria(Level level, std::uint64_t seed = 1);

}  // namespace chowlab
