// Copyright 2026 the sqptlab authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SQPTLAB_VERIFY_HPP
#define SQPTLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sqpt/types.hpp"

namespace sqpt {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Structural self-checks across all modules at dimension d: vectorization
// identities, channel representation conversions, frame duality, SIC
// constants, and the full chi-solve pipeline. break_frame injects a
// duplicated frame element and lets the FrameError propagate.
std::vector<CheckResult> run_verification(int d, std::uint64_t seed,
                                          bool break_frame = false);

}  // namespace sqpt

#endif
