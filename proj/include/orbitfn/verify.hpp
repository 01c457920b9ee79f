#pragma once

#include <string>

#include "orbitfn/transforms.hpp"

namespace orbitfn {

struct VerifyCheck {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::string algebra;
  SignHom sigma;
  long long M = 0;
  double tolerance = 0.0;
  std::vector<VerifyCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs the count-agreement, Gram, exponential-sum, symmetry and transform
/// round-trip checks for one (algebra, sigma, M) configuration.  Randomized
/// inputs are drawn from a fixed seed so reports are reproducible.
VerifyReport run_verification(const RootSystemData& rs, const WeylGroup& group,
                              SignHom sigma, long long M, double tol,
                              unsigned seed = 20260810u);

}  // namespace orbitfn
