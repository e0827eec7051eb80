// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "entclone/acceptance.hpp"
#include "entclone/cloning_analysis.hpp"
#include "entclone/monotones.hpp"
#include "entclone/state_factory.hpp"
#include "entclone/state_io.hpp"

namespace entclone::cli {

namespace {

std::string g9(double v) { return fmt::format("{:.9g}", v); }

CloningCase to_case(int c) { return c == 1 ? CloningCase::I : CloningCase::II; }

struct Options {
  std::string state;
  std::string kind;
  std::string out_path;
  int which = 0;
  double a = 0.0;
  double c = 0.0;
  bool numeric = false;
  double tol = 1e-8;
  double a_min = 0.0;
  double a_max = 0.0;
  int steps = 200;
  double blank_ebits = 1.0;
  int terms = 0;
  int iters = 2000;
  int restarts = 4;
  std::uint64_t seed = 42;
};

int run_negativity(const Options& o, std::ostream& out) {
  out << "negativity " << g9(negativity(load_dmat(o.state))) << '\n';
  return kSuccess;
}

int run_entropy(const Options& o, std::ostream& out) {
  static const std::map<std::string, SchmidtKind, std::less<>> kinds{
      {"psi1", SchmidtKind::Psi1},
      {"psi2", SchmidtKind::Psi2},
      {"psi3", SchmidtKind::Psi3},
      {"phi", SchmidtKind::Phi}};
  out << "entanglement_entropy "
      << g9(entanglement_entropy(schmidt_state(kinds.at(o.kind), o.a))) << '\n';
  return kSuccess;
}

int run_feasibility(const Options& o, std::ostream& out) {
  const FeasibilityVerdict v = verdict(to_case(o.which), o.a, o.c, o.numeric);
  out << "case " << o.which << '\n'
      << "a " << g9(v.a) << '\n'
      << "c " << g9(v.c) << '\n'
      << "n_in " << g9(v.n_in) << '\n'
      << "n_out " << g9(v.n_out) << '\n';
  if (v.numeric_n_out) out << "numeric_n_out " << g9(*v.numeric_n_out) << '\n';
  out << "margin " << g9(v.margin) << '\n' << "verdict " << to_string(v.verdict) << '\n';
  return kSuccess;
}

int run_boundary(const Options& o, std::ostream& out) {
  const BoundaryResult b = blank_boundary(to_case(o.which), o.a);
  out << "case " << o.which << '\n' << "a " << g9(b.a) << '\n' << "rhs " << g9(b.rhs) << '\n';
  out << "c_min_sq " << (b.c_min_sq ? g9(*b.c_min_sq) : "NA") << '\n';
  out << "e_blank_min " << (b.e_blank_min ? g9(*b.e_blank_min) : "NA") << '\n';
  out << "two_qubit_blank_impossible " << (b.two_qubit_blank_impossible ? "true" : "false")
      << '\n';
  return kSuccess;
}

int run_range(const Options& o, std::ostream& out) {
  const RangeResult r = maximal_blank_range(to_case(o.which), o.tol);
  out << "case " << o.which << '\n';
  out << "a_low " << (r.a_low ? g9(*r.a_low) : "NA") << '\n';
  out << "a_high " << (r.a_high ? g9(*r.a_high) : "NA") << '\n';
  out << "tangent_points";
  for (double t : r.tangent_points) out << ' ' << g9(t);
  out << '\n';
  return kSuccess;
}

int run_sweep(const Options& o, std::ostream& out) {
  const auto rows = sweep(to_case(o.which), o.a_min, o.a_max, o.steps);
  save_sweep_csv(o.out_path, rows);
  out << "rows " << rows.size() << '\n' << "out " << o.out_path << '\n';
  return kSuccess;
}

int run_bell3(const Options& o, std::ostream& out) {
  write_bell3_report(out, bell3_report(o.blank_ebits));
  return kSuccess;
}

int run_ree(const Options& o, std::ostream& out) {
  ReeOptions opt;
  opt.terms = o.terms;
  opt.iters = o.iters;
  opt.restarts = o.restarts;
  opt.seed = o.seed;
  const ReeResult r = ree_upper_bound(load_dmat(o.state), opt);
  write_ree_report(out, r);
  return r.converged ? kSuccess : kNumericFailure;
}

int run_verify(const Options& o, std::ostream& out) {
  AcceptanceOptions opt;
  opt.seed = o.seed;
  const auto results = run_acceptance(opt);
  write_acceptance(out, results);
  return all_passed(results) ? kSuccess : kNumericFailure;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-monotone bounds for exact LOCC cloning of entangled qubits",
               "entclone"};
  app.require_subcommand(1);
  Options o;
  const auto case_check = CLI::IsMember({1, 2});
  const auto positive = CLI::PositiveNumber;

  auto* neg = app.add_subcommand("negativity", "Negativity of a DMAT state file");
  neg->add_option("--state", o.state, "DMAT file")->required();

  auto* ent = app.add_subcommand("entropy", "Entanglement entropy of a Schmidt-form state");
  ent->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"psi1", "psi2", "psi3", "phi"}));
  ent->add_option("--a", o.a, "Schmidt coefficient a (c for phi)")->required();

  auto* feas = app.add_subcommand("feasibility", "Negativity verdict for a cloner");
  feas->add_option("--case", o.which)->required()->check(case_check);
  feas->add_option("--a", o.a)->required();
  feas->add_option("--c", o.c)->required();
  feas->add_flag("--numeric", o.numeric, "Cross-check against the numeric 16x16 negativity");

  auto* bnd = app.add_subcommand("boundary", "Minimal blank entanglement");
  bnd->add_option("--case", o.which)->required()->check(case_check);
  bnd->add_option("--a", o.a)->required();

  auto* rng = app.add_subcommand("range", "Range of a where a maximally entangled blank fails");
  rng->add_option("--case", o.which)->required()->check(case_check);
  rng->add_option("--tol", o.tol, "Bisection width")->check(positive);

  auto* swp = app.add_subcommand("sweep", "Write the boundary curve as CSV");
  swp->add_option("--case", o.which)->required()->check(case_check);
  swp->add_option("--a-min", o.a_min)->required();
  swp->add_option("--a-max", o.a_max)->required();
  swp->add_option("--steps", o.steps)->check(CLI::Range(2, 1000000));
  swp->add_option("--out", o.out_path)->required();

  auto* b3 = app.add_subcommand("bell3", "Blank requirement for cloning three Bell states");
  b3->add_option("--blank-ebits", o.blank_ebits)->check(CLI::NonNegativeNumber);

  auto* ree = app.add_subcommand("ree", "Relative-entropy-of-entanglement upper bound");
  ree->add_option("--state", o.state, "DMAT file")->required();
  ree->add_option("--terms", o.terms)->check(CLI::PositiveNumber);
  ree->add_option("--iters", o.iters)->check(CLI::NonNegativeNumber);
  ree->add_option("--restarts", o.restarts)->check(CLI::PositiveNumber);
  ree->add_option("--seed", o.seed);

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_option("--seed", o.seed);

  const std::vector<std::pair<CLI::App*, std::function<int(const Options&, std::ostream&)>>>
      handlers{{neg, run_negativity}, {ent, run_entropy}, {feas, run_feasibility},
               {bnd, run_boundary},   {rng, run_range},   {swp, run_sweep},
               {b3, run_bell3},       {ree, run_ree},     {ver, run_verify}};

  std::vector<std::string> storage(args.begin(), args.end());
  if (storage.empty()) storage.emplace_back("entclone");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsageError;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o, out);
    }
  } catch (const FormatError& e) {
    err << "error: malformed state file: " << e.what() << '\n';
    return kMalformedState;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsageError;
}

}  // namespace entclone::cli
