// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entclone/matrix_core.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {

/// Negativity can only rule cloning out. NotRuledOut never means "possible".
enum class Verdict { RuledOut, Boundary, NotRuledOut };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

inline constexpr double kVerdictTolerance = 1e-9;
/// Allowed gap between closed-form and numerically evaluated negativities.
inline constexpr double kConsistencyTolerance = 1e-8;

struct ClosedForm {
  double n_in;
  double n_out;
};

/// N(rho_in) = 2cd for both cases;
/// case I:  N(rho_out) = 4a^2b^2 + 4 sqrt(a^2 b^2 (a^2 - b^2)^2),
/// case II: N(rho_out) = 2 sqrt(2 (a^6 b^2 + a^2 b^6)).
ClosedForm closed_form(CloningCase which, double a, double c);

/// Right-hand side of the no-cloning inequality cd < rhs, i.e. N(rho_out)/2.
double blank_rhs(CloningCase which, double a);

struct FeasibilityVerdict {
  CloningCase which;
  double a;
  double c;
  double n_in;
  double n_out;
  std::optional<double> numeric_n_out;
  Verdict verdict;
  /// n_out/2 - c sqrt(1 - c^2); positive means the blank is too weakly entangled.
  double margin;
};

/// Thrown when the closed form and the 16x16 numeric evaluation disagree.
class ConsistencyError : public NumericError {
 public:
  using NumericError::NumericError;
};

FeasibilityVerdict verdict(CloningCase which, double a, double c, bool numeric = false);

struct BoundaryResult {
  CloningCase which;
  double a;
  double rhs;
  /// Smallest c^2 (c <= d convention) for which negativity stops ruling the
  /// cloner out; absent when no two-qubit blank suffices.
  std::optional<double> c_min_sq;
  std::optional<double> e_blank_min;
  bool two_qubit_blank_impossible;
};

BoundaryResult blank_boundary(CloningCase which, double a);

struct RangeResult {
  /// Endpoints of the set of a where even a maximally entangled blank is
  /// ruled out; absent when that set is empty.
  std::optional<double> a_low;
  std::optional<double> a_high;
  /// Zeros of rhs(a) - 1/2 without a sign change.
  std::vector<double> tangent_points;
};

RangeResult maximal_blank_range(CloningCase which, double tol = 1e-8);

struct SweepRow {
  double a;
  double rhs;
  std::optional<double> c_min_sq;
  std::optional<double> e_blank_min;
  Verdict verdict_at_maximal_blank;
};

std::vector<SweepRow> sweep(CloningCase which, double a_min, double a_max, int steps);

inline constexpr std::string_view kSweepCsvHeader = "a,rhs,c_min_sq,e_blank_min,verdict_max_blank";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& is);
void save_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

enum class Bell3Verdict { Insufficient, NecessaryConditionMet };

std::string_view to_string(Bell3Verdict v);

/// Entanglement bookkeeping for cloning three Bell states with a blank.
struct Bell3Report {
  double blank_ebits;
  double two_copy_ree_bound;   // 2 - log2 3
  double input_bound;          // two_copy_ree_bound + blank_ebits
  double output_assumed;       // 2, taken as given rather than computed
  double output_hashing;       // coherent information of the actual rho_out
  double output_entropy;       // S(rho_out)
  double required_blank;       // output_assumed - two_copy_ree_bound
  double max_two_qubit_ebits;  // 1
  Bell3Verdict verdict;
};

Bell3Report bell3_report(double blank_ebits);
void write_bell3_report(std::ostream& os, const Bell3Report& report);

struct CrosscheckOptions {
  int samples = 100;
  std::uint64_t seed = 42;
  /// Always evaluated in addition to the random samples.
  std::vector<std::pair<double, double>> extra_points;
  /// Added to both closed-form values; used to confirm the check can fail.
  double closed_form_offset = 0.0;
};

struct CrosscheckResult {
  double max_abs_deviation = 0.0;
  double worst_a = 0.0;
  double worst_c = 0.0;
  int evaluated = 0;
};

/// Compares closed-form negativities with numeric ones computed on the built
/// 16x16 states. Throws ConsistencyError naming the offending points when any
/// deviation exceeds kConsistencyTolerance.
CrosscheckResult crosscheck(CloningCase which, const CrosscheckOptions& options = {});

}  // namespace entclone
