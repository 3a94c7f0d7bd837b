//===- treegraft-refopt.cpp - Bundled opt-style target -----------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// Command line shape of a compiler's opt tool: pass flags plus one input
// file. Validates the input with the bundled reference checks, prints the
// canonical form on success, and reports diagnostics on stderr otherwise.
//
//===----------------------------------------------------------------------===//

#include "treegraft/Parse.h"
#include "treegraft/Print.h"
#include "treegraft/Reference.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace treegraft;

int main(int argc, char **argv) {
  std::vector<std::string> flags;
  std::string inputPath;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (!arg.empty() && arg[0] == '-') {
      flags.push_back(std::move(arg));
    } else if (inputPath.empty()) {
      inputPath = std::move(arg);
    } else {
      std::cerr << "error: expected exactly one input file\n";
      return 2;
    }
  }
  if (inputPath.empty()) {
    std::cerr << "usage: treegraft-refopt [--pass[=option]]... <input.mlir>\n";
    return 2;
  }

  std::ifstream in(inputPath, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << inputPath << "'\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  ReferenceVerdict verdict = referenceValidate(text, flags);
  for (const std::string &diag : verdict.diagnostics)
    std::cerr << diag << "\n";
  if (verdict.exitCode == 0)
    std::cout << print(parse(text));
  return verdict.exitCode;
}
