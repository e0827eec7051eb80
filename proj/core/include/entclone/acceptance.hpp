// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace entclone {

struct CriterionResult {
  int id;
  std::string name;
  double measured;
  double expected;
  double tolerance;
  bool passed;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  /// Perturbs the closed forms inside the oracle-equivalence check only.
  double closed_form_offset = 0.0;
};

/// Runs the nine end-to-end reproduction checks in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One "[PASS]"/"[FAIL]" line per criterion.
void write_acceptance(std::ostream& os, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace entclone
