// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "entclone/matrix_core.hpp"
#include "entclone/state_factory.hpp"

namespace entclone {

/// Malformed or unreadable state file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text formats. Lines starting with '#' are comments; complex entries are
// written "<re>,<im>" with 17 significant digits.
//
//   DMAT <dimA> <dimB>            PVEC <dimA> <dimB>
//   <d entries>   (d rows)        <one entry per line>  (d lines)

void write_dmat(std::ostream& os, const BipartiteDensity& rho);
BipartiteDensity read_dmat(std::istream& is);

void write_pvec(std::ostream& os, const ComplexVector& amp, int dimA, int dimB);
void write_pvec(std::ostream& os, const PureState& psi);
PureState read_pvec(std::istream& is);

void save_dmat(const std::filesystem::path& path, const BipartiteDensity& rho);
BipartiteDensity load_dmat(const std::filesystem::path& path);

}  // namespace entclone
