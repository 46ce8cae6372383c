#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jwx/pauli.hpp"

namespace jwx {

enum class Suite { car, rotations, crossed, jw, norms, all };

// Throws ParseError for an unknown name.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct VerifyOptions {
  Site range_lo = -6;
  Site range_hi = 6;
  // Window size for the isomorphism checks; at most 5.
  std::size_t window = 4;
  // Tolerance for checks that go through a spectral norm.
  double tol = 1e-10;
  std::uint64_t seed = 42;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool exact = true;  // symbolic checks pass only on a zero residual
  bool passed = true;
  double residual = 0.0;
  std::size_t cases = 0;
  std::string note;
};

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options);

}  // namespace jwx
