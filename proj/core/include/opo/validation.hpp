#pragma once

#include "opo/params.hpp"
#include "opo/quadrature.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace opo {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double measured = 0.0; // worst deviation observed
  double bound = 0.0;    // allowed deviation
};

const char* to_string(CheckStatus s) noexcept;

struct ValidationOptions {
  std::uint64_t seed = 12345;
  std::int64_t mc_samples = 100000;
  int random_points = 20;
};

// Runs the algebraic identities, oracle cross-checks and Stokes zeros at
// randomly drawn (k, omega) for the given parameter set.
std::vector<CheckResult> run_validation(const OpoParams& p, const QuadratureSpec& q,
                                        const ValidationOptions& opts);

} // namespace opo
