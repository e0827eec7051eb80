// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entclone::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericFailure = 2,
  kMalformedState = 3,
};

/// Runs one command line. `args[0]` is the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entclone::cli
