#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/io.hpp"

namespace primegraph {

struct SuiteParams {
  // Upper bound on instance size for exhaustive suites; 0 keeps the suite default.
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  // Random instances for sampling suites; extraction_sound uses a tenth of it.
  std::size_t samples = 10'000;
  std::size_t jobs = 1;
};

struct Violation {
  std::size_t index = 0;
  Json input;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  Json parameters;
  double wall_seconds = 0;

  bool passed() const { return violations.empty(); }
  // Wall time is left out unless requested so that reports are reproducible
  // byte for byte.
  Json to_json(bool with_time = false) const;
};

const std::vector<std::string>& suite_ids();
bool is_suite(const std::string& id);

// Throws std::invalid_argument for an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteParams& params = {});

// Re-checks one violation payload; returns the violation message if the
// instance still violates the suite's claim.
std::optional<std::string> check_instance(const std::string& id, const Json& input);

// Random graph on n vertices with independent edges of probability 1/2.
Graph random_graph(std::size_t n, std::uint64_t seed);

}  // namespace primegraph
