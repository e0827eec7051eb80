// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/cloning_analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "entclone/monotones.hpp"

namespace entclone {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_open_unit(double x, const char* name) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidInput(fmt::format("degenerate parameter: {} must lie strictly in (0, 1)", name));
  }
}

double n_out_closed_form(CloningCase which, double a) {
  const double a2 = a * a;
  const double b2 = 1.0 - a2;
  if (which == CloningCase::I) {
    const double diff = a2 - b2;
    return 4.0 * a2 * b2 + 4.0 * std::sqrt(a2 * b2 * diff * diff);
  }
  return 2.0 * std::sqrt(2.0 * (a2 * a2 * a2 * b2 + a2 * b2 * b2 * b2));
}

Verdict classify(double margin) {
  if (margin > kVerdictTolerance) return Verdict::RuledOut;
  if (std::abs(margin) <= kVerdictTolerance) return Verdict::Boundary;
  return Verdict::NotRuledOut;
}

std::string fmt9(double v) { return fmt::format("{:.9g}", v); }

std::string fmt_optional(const std::optional<double>& v) { return v ? fmt9(*v) : "NA"; }

double parse_field(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput(fmt::format("sweep CSV: invalid number '{}'", text));
  }
  return v;
}

std::optional<double> parse_optional_field(std::string_view text) {
  if (text == "NA") return std::nullopt;
  return parse_field(text);
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::RuledOut: return "RULED_OUT";
    case Verdict::Boundary: return "BOUNDARY";
    case Verdict::NotRuledOut: return "NOT_RULED_OUT";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::RuledOut, Verdict::Boundary, Verdict::NotRuledOut}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

ClosedForm closed_form(CloningCase which, double a, double c) {
  require_open_unit(a, "a");
  require_open_unit(c, "c");
  return {2.0 * c * std::sqrt(1.0 - c * c), n_out_closed_form(which, a)};
}

double blank_rhs(CloningCase which, double a) {
  require_open_unit(a, "a");
  return 0.5 * n_out_closed_form(which, a);
}

FeasibilityVerdict verdict(CloningCase which, double a, double c, bool numeric) {
  const ClosedForm cf = closed_form(which, a, c);
  FeasibilityVerdict v{which, a, c, cf.n_in, cf.n_out, std::nullopt, Verdict::NotRuledOut, 0.0};
  v.margin = 0.5 * cf.n_out - c * std::sqrt(1.0 - c * c);
  v.verdict = classify(v.margin);
  if (numeric) {
    const CloningIO io = build_cloning_pair(which, a, c);
    v.numeric_n_out = negativity(io.rho_out);
    if (std::abs(*v.numeric_n_out - cf.n_out) > kConsistencyTolerance) {
      throw ConsistencyError(fmt::format(
          "closed-form N(rho_out) = {} disagrees with numeric value {} at a = {}, c = {}",
          fmt9(cf.n_out), fmt9(*v.numeric_n_out), fmt9(a), fmt9(c)));
    }
  }
  return v;
}

BoundaryResult blank_boundary(CloningCase which, double a) {
  BoundaryResult r{which, a, blank_rhs(which, a), std::nullopt, std::nullopt, false};
  r.two_qubit_blank_impossible = r.rhs > 0.5 + 1e-12;
  if (!r.two_qubit_blank_impossible) {
    // Smaller root of t(1 - t) = rhs^2, written to avoid cancellation.
    const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * r.rhs * r.rhs));
    r.c_min_sq = 2.0 * r.rhs * r.rhs / (1.0 + disc);
    r.e_blank_min = binary_entropy(*r.c_min_sq);
  }
  return r;
}

RangeResult maximal_blank_range(CloningCase which, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("maximal_blank_range: tol must be positive");
  const auto g = [which](double a) { return blank_rhs(which, a) - 0.5; };
  // Same cutoff blank_boundary uses to call a blank impossible.
  const auto above = [&g](double a) { return g(a) > 1e-12; };

  RangeResult result;
  std::vector<double> roots;
  // rhs is symmetric under a <-> sqrt(1 - a^2), so 1/sqrt2 is always a
  // critical point; search each side of it separately.
  constexpr int kGrid = 4096;
  constexpr double kEdge = 1e-9;
  const std::pair<double, double> halves[] = {{kEdge, kInvSqrt2 - kEdge},
                                              {kInvSqrt2 + kEdge, 1.0 - kEdge}};
  for (const auto& [lo, hi] : halves) {
    double prev_a = lo;
    bool prev_above = above(lo);
    for (int k = 1; k <= kGrid; ++k) {
      const double cur_a = lo + (hi - lo) * k / kGrid;
      const bool cur_above = above(cur_a);
      if (prev_above != cur_above) {
        double left = prev_a;
        double right = cur_a;
        while (right - left > tol) {
          const double mid = 0.5 * (left + right);
          if (above(mid) == prev_above) {
            left = mid;
          } else {
            right = mid;
          }
        }
        roots.push_back(0.5 * (left + right));
      }
      prev_a = cur_a;
      prev_above = cur_above;
    }
  }

  constexpr double kProbe = 1e-3;
  if (std::abs(g(kInvSqrt2)) <= 1e-12 &&
      (g(kInvSqrt2 - kProbe) < 0.0) == (g(kInvSqrt2 + kProbe) < 0.0)) {
    result.tangent_points.push_back(kInvSqrt2);
  }
  if (!roots.empty()) {
    result.a_low = *std::min_element(roots.begin(), roots.end());
    result.a_high = *std::max_element(roots.begin(), roots.end());
  }
  return result;
}

std::vector<SweepRow> sweep(CloningCase which, double a_min, double a_max, int steps) {
  if (!(a_min > 0.0 && a_min < a_max && a_max < 1.0)) {
    throw InvalidInput("sweep: require 0 < a_min < a_max < 1");
  }
  if (steps < 2) throw InvalidInput("sweep: steps must be at least 2");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double a = k == steps - 1 ? a_max : a_min + (a_max - a_min) * k / (steps - 1);
    const BoundaryResult b = blank_boundary(which, a);
    rows.push_back({a, b.rhs, b.c_min_sq, b.e_blank_min, verdict(which, a, kInvSqrt2).verdict});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << fmt9(r.a) << ',' << fmt9(r.rhs) << ',' << fmt_optional(r.c_min_sq) << ','
       << fmt_optional(r.e_blank_min) << ',' << to_string(r.verdict_at_maximal_blank) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw InvalidInput("sweep CSV: missing or unexpected header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw InvalidInput("sweep CSV: expected 5 fields per row");
    const auto v = parse_verdict(fields[4]);
    if (!v) throw InvalidInput(fmt::format("sweep CSV: unknown verdict '{}'", fields[4]));
    rows.push_back({parse_field(fields[0]), parse_field(fields[1]),
                    parse_optional_field(fields[2]), parse_optional_field(fields[3]), *v});
  }
  return rows;
}

void save_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw NumericError(fmt::format("cannot open '{}' for writing", path.string()));
  write_sweep_csv(os, rows);
  os.flush();
  if (!os) throw NumericError(fmt::format("failed writing '{}'", path.string()));
}

std::string_view to_string(Bell3Verdict v) {
  return v == Bell3Verdict::Insufficient ? "INSUFFICIENT" : "NECESSARY_CONDITION_MET";
}

Bell3Report bell3_report(double blank_ebits) {
  if (!(blank_ebits >= 0.0)) throw InvalidInput("bell3_report: blank_ebits must be >= 0");
  const double log2_3 = std::log2(3.0);
  // rho_out does not depend on the blank.
  const CloningIO io = build_three_bell_pair(bell(0, 0));

  Bell3Report r{};
  r.blank_ebits = blank_ebits;
  r.two_copy_ree_bound = 2.0 - log2_3;
  r.input_bound = r.two_copy_ree_bound + blank_ebits;
  r.output_assumed = 2.0;
  r.output_hashing = hashing_lower_bound(io.rho_out);
  r.output_entropy = vn_entropy(io.rho_out.mat());
  r.required_blank = r.output_assumed - r.two_copy_ree_bound;
  r.max_two_qubit_ebits = 1.0;
  r.verdict = blank_ebits < r.required_blank - 1e-9 ? Bell3Verdict::Insufficient
                                                    : Bell3Verdict::NecessaryConditionMet;
  return r;
}

void write_bell3_report(std::ostream& os, const Bell3Report& r) {
  os << "blank_ebits " << fmt9(r.blank_ebits) << '\n'
     << "two_copy_ree_bound " << fmt9(r.two_copy_ree_bound) << '\n'
     << "input_ree_bound " << fmt9(r.input_bound) << '\n'
     << "output_ree_lower_bound " << fmt9(r.output_assumed) << " ASSUMED\n"
     << "output_hashing_lower_bound " << fmt9(r.output_hashing) << " COMPUTED\n"
     << "output_entropy " << fmt9(r.output_entropy) << '\n'
     << "required_blank_ebits " << fmt9(r.required_blank) << '\n'
     << "max_two_qubit_ebits " << fmt9(r.max_two_qubit_ebits) << '\n'
     << "verdict " << to_string(r.verdict) << '\n';
}

CrosscheckResult crosscheck(CloningCase which, const CrosscheckOptions& options) {
  if (options.samples < 1) throw InvalidInput("crosscheck: samples must be >= 1");
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.05, 0.95);
  std::vector<std::pair<double, double>> points;
  points.reserve(options.samples + options.extra_points.size());
  for (int s = 0; s < options.samples; ++s) {
    const double a = uniform(rng);
    const double c = uniform(rng);
    points.emplace_back(a, c);
  }
  points.insert(points.end(), options.extra_points.begin(), options.extra_points.end());

  CrosscheckResult result;
  std::vector<std::string> offenders;
  for (const auto& [a, c] : points) {
    const ClosedForm cf = closed_form(which, a, c);
    const CloningIO io = build_cloning_pair(which, a, c);
    const double dev =
        std::max(std::abs(negativity(io.rho_in) - (cf.n_in + options.closed_form_offset)),
                 std::abs(negativity(io.rho_out) - (cf.n_out + options.closed_form_offset)));
    if (dev > result.max_abs_deviation || result.evaluated == 0) {
      result.max_abs_deviation = dev;
      result.worst_a = a;
      result.worst_c = c;
    }
    ++result.evaluated;
    if (dev > kConsistencyTolerance) {
      offenders.push_back(fmt::format("(case {}, a={}, c={}, deviation={})",
                                      which == CloningCase::I ? "I" : "II", fmt9(a), fmt9(c),
                                      fmt9(dev)));
    }
  }
  if (!offenders.empty()) {
    std::string msg = fmt::format("crosscheck failed at {} point(s):", offenders.size());
    for (std::size_t k = 0; k < std::min<std::size_t>(offenders.size(), 10); ++k) {
      msg += ' ' + offenders[k];
    }
    throw ConsistencyError(msg);
  }
  return result;
}

}  // namespace entclone
