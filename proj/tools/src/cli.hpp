#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "td13/encoding.hpp"

namespace td13::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kRetryBudget = 3,
  kVerifyFailed = 4,
  kSelftestFailed = 5,
};

constexpr int kDepthCap = 12;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelftestOptions {
  int depth = 6;
  int seeds = 5;
  std::uint64_t seed = 1;
  SConvention conv = SConvention::anchored;
};

/// Prints one row per suite; returns true when all pass.
bool selftest(const SelftestOptions& opt, std::ostream& out);

}  // namespace td13::cli
