// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include "entclone/state_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace entclone {

namespace {

std::string format_entry(Complex z) { return fmt::format("{:.17g},{:.17g}", z.real(), z.imag()); }

double parse_double(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw FormatError(fmt::format("invalid number '{}'", text));
  }
  return v;
}

Complex parse_entry(std::string_view token) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) {
    throw FormatError(fmt::format("entry '{}' is not of the form <re>,<im>", token));
  }
  return {parse_double(token.substr(0, comma)), parse_double(token.substr(comma + 1))};
}

// Yields whitespace-separated tokens of non-comment lines.
class TokenReader {
 public:
  explicit TokenReader(std::istream& is) : is_(is) {}

  bool next_line(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(is_, line)) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      return true;
    }
    return false;
  }

 private:
  std::istream& is_;
};

std::pair<int, int> parse_header(TokenReader& reader, std::string_view tag) {
  std::vector<std::string> tokens;
  if (!reader.next_line(tokens)) throw FormatError(fmt::format("missing {} header", tag));
  if (tokens.size() != 3 || tokens[0] != tag) {
    throw FormatError(fmt::format("expected header '{} <dimA> <dimB>'", tag));
  }
  const double da = parse_double(tokens[1]);
  const double db = parse_double(tokens[2]);
  if (da < 1 || db < 1 || da != static_cast<int>(da) || db != static_cast<int>(db) ||
      da * db > 4096) {
    throw FormatError("header dimensions must be positive integers");
  }
  return {static_cast<int>(da), static_cast<int>(db)};
}

}  // namespace

void write_dmat(std::ostream& os, const BipartiteDensity& rho) {
  os << "DMAT " << rho.dimA() << ' ' << rho.dimB() << '\n';
  const ComplexMatrix& m = rho.mat();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << format_entry(m(r, c));
    }
    os << '\n';
  }
}

BipartiteDensity read_dmat(std::istream& is) {
  TokenReader reader(is);
  const auto [dimA, dimB] = parse_header(reader, "DMAT");
  const int d = dimA * dimB;
  ComplexMatrix m(d, d);
  std::vector<std::string> tokens;
  for (int r = 0; r < d; ++r) {
    if (!reader.next_line(tokens)) throw FormatError(fmt::format("expected {} rows", d));
    if (static_cast<int>(tokens.size()) != d) {
      throw FormatError(fmt::format("row {} has {} entries, expected {}", r, tokens.size(), d));
    }
    for (int c = 0; c < d; ++c) m(r, c) = parse_entry(tokens[c]);
  }
  if (reader.next_line(tokens)) throw FormatError("trailing data after matrix rows");
  try {
    return BipartiteDensity(std::move(m), dimA, dimB);
  } catch (const InvalidInput& e) {
    throw FormatError(e.what());
  }
}

void write_pvec(std::ostream& os, const ComplexVector& amp, int dimA, int dimB) {
  os << "PVEC " << dimA << ' ' << dimB << '\n';
  for (const Complex& z : amp) os << format_entry(z) << '\n';
}

void write_pvec(std::ostream& os, const PureState& psi) {
  write_pvec(os, psi.amp(), psi.dimA(), psi.dimB());
}

PureState read_pvec(std::istream& is) {
  TokenReader reader(is);
  const auto [dimA, dimB] = parse_header(reader, "PVEC");
  const int d = dimA * dimB;
  ComplexVector amp(d);
  std::vector<std::string> tokens;
  for (int k = 0; k < d; ++k) {
    if (!reader.next_line(tokens) || tokens.size() != 1) {
      throw FormatError(fmt::format("expected {} amplitude lines", d));
    }
    amp[k] = parse_entry(tokens[0]);
  }
  try {
    return PureState(std::move(amp), dimA, dimB);
  } catch (const InvalidInput& e) {
    throw FormatError(e.what());
  }
}

void save_dmat(const std::filesystem::path& path, const BipartiteDensity& rho) {
  std::ofstream os(path);
  if (!os) throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
  write_dmat(os, rho);
  if (!os) throw FormatError(fmt::format("failed writing '{}'", path.string()));
}

BipartiteDensity load_dmat(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw FormatError(fmt::format("cannot open '{}'", path.string()));
  return read_dmat(is);
}

}  // namespace entclone
