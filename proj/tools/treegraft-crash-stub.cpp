//===- treegraft-crash-stub.cpp - Misbehaving target for loop tests ----------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//
//
// A target that goes wrong on purpose. It aborts when the input contains a
// magic byte sequence (STUB_ABORT_ON, default "comb.add") and can hang for
// STUB_SLEEP_SECS seconds first, which is how the driver's timeout and
// crash handling get exercised end to end.
//
//===----------------------------------------------------------------------===//

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

int main(int argc, char **argv) {
  const char *magic = std::getenv("STUB_ABORT_ON");
  if (!magic || !*magic)
    magic = "comb.add";
  if (const char *secs = std::getenv("STUB_SLEEP_SECS"))
    sleep(static_cast<unsigned>(std::atoi(secs)));

  // Pass flags are accepted and ignored; the last plain argument is the
  // input file, matching how the driver invokes targets.
  std::string inputPath;
  for (int i = 1; i < argc; ++i)
    if (argv[i][0] != '-')
      inputPath = argv[i];
  if (inputPath.empty())
    return 0;

  std::ifstream in(inputPath, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (buffer.str().find(magic) != std::string::npos)
    std::abort();
  return 0;
}
