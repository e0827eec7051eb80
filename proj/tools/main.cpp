// Copyright 2026 The entclone Authors.
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return entclone::cli::dispatch({argv, argv + argc}, std::cout, std::cerr);
}
