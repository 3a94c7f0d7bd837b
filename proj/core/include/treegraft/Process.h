//===- Process.h - Target invocation ----------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef TREEGRAFT_PROCESS_H
#define TREEGRAFT_PROCESS_H

#include "treegraft/Passes.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace treegraft {

/// The target executable itself could not be started. Unlike a target
/// failure, this is a configuration error and aborts the run.
class SpawnError : public std::runtime_error {
public:
  explicit SpawnError(const std::string &what) : std::runtime_error(what) {}
};

struct RunResult {
  bool exited = false; // normal termination; exitCode is meaningful
  int exitCode = 0;
  bool signaled = false; // killed by a signal
  int termSignal = 0;
  bool timedOut = false; // deadline hit; the process was killed
  std::string stdoutText;
  std::string stderrText;
  int64_t durationMs = 0;

  bool abnormal() const { return signaled || timedOut; }
};

/// Target name that selects the in-process validator instead of an
/// external binary.
inline constexpr const char *kBuiltinTarget = "builtin:reference";

/// Runs the bundled validator in-process; diagnostics become stderr lines.
RunResult runBuiltinReference(const std::string &text,
                              const std::vector<PassInvocation> &pipeline);

/// Spawns `targetPath` with one flag per pipeline entry plus the input
/// file path, captures stdout/stderr (capped at outputCap bytes each), and
/// kills the process when it outlives timeoutMs. Throws SpawnError when
/// the binary cannot be executed at all.
RunResult runSubprocess(const std::string &targetPath,
                        const std::vector<PassInvocation> &pipeline,
                        const std::string &inputPath, int64_t timeoutMs,
                        size_t outputCap = 1 << 20);

/// Dispatches on targetCmd: the builtin name runs in-process (text is
/// validated directly); anything else is treated as an executable path and
/// gets the text via a temp file under tmpDir.
RunResult runTarget(const std::string &targetCmd,
                    const std::vector<PassInvocation> &pipeline,
                    const std::string &text, const std::string &tmpDir,
                    int64_t timeoutMs);

} // namespace treegraft

#endif // TREEGRAFT_PROCESS_H
