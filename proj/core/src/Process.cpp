//===- Process.cpp - Target invocation ---------------------------------------===//
//
// Part of TreeGraft, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "treegraft/Process.h"

#include "treegraft/Reference.h"

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace treegraft {

RunResult runBuiltinReference(const std::string &text,
                              const std::vector<PassInvocation> &pipeline) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> flags;
  flags.reserve(pipeline.size());
  for (const PassInvocation &inv : pipeline)
    flags.push_back(inv.flag());

  ReferenceVerdict verdict = referenceValidate(text, flags);
  RunResult result;
  result.exited = true;
  result.exitCode = verdict.exitCode;
  for (const std::string &diag : verdict.diagnostics) {
    result.stderrText += diag;
    result.stderrText += '\n';
  }
  result.durationMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

namespace {

// Reads whatever is available on fd into out, discarding past the cap.
// Returns false on EOF.
bool drain(int fd, std::string &out, size_t cap) {
  char buf[4096];
  for (;;) {
    ssize_t n = read(fd, buf, sizeof buf);
    if (n == 0)
      return false;
    if (n < 0)
      return errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR;
    if (out.size() < cap)
      out.append(buf, buf + std::min<size_t>(static_cast<size_t>(n),
                                             cap - out.size()));
  }
}

void setNonBlocking(int fd) {
  fcntl(fd, F_SETFL, fcntl(fd, F_GETFL, 0) | O_NONBLOCK);
}

} // namespace

RunResult runSubprocess(const std::string &targetPath,
                        const std::vector<PassInvocation> &pipeline,
                        const std::string &inputPath, int64_t timeoutMs,
                        size_t outputCap) {
  int outPipe[2], errPipe[2], execPipe[2];
  if (pipe(outPipe) != 0 || pipe(errPipe) != 0 || pipe(execPipe) != 0)
    throw SpawnError(std::string("pipe: ") + std::strerror(errno));
  fcntl(execPipe[1], F_SETFD, FD_CLOEXEC);

  std::vector<std::string> argvStore;
  argvStore.push_back(targetPath);
  for (const PassInvocation &inv : pipeline)
    argvStore.push_back(inv.flag());
  argvStore.push_back(inputPath);
  std::vector<char *> argv;
  for (std::string &arg : argvStore)
    argv.push_back(arg.data());
  argv.push_back(nullptr);

  auto start = std::chrono::steady_clock::now();
  pid_t pid = fork();
  if (pid < 0) {
    throw SpawnError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    dup2(outPipe[1], STDOUT_FILENO);
    dup2(errPipe[1], STDERR_FILENO);
    close(outPipe[0]);
    close(outPipe[1]);
    close(errPipe[0]);
    close(errPipe[1]);
    close(execPipe[0]);
    execv(argv[0], argv.data());
    int err = errno; // exec failed: report errno through the CLOEXEC pipe
    (void)!write(execPipe[1], &err, sizeof err);
    _exit(127);
  }

  close(outPipe[1]);
  close(errPipe[1]);
  close(execPipe[1]);
  setNonBlocking(outPipe[0]);
  setNonBlocking(errPipe[0]);

  int execErr = 0;
  ssize_t execN = read(execPipe[0], &execErr, sizeof execErr);
  close(execPipe[0]);
  if (execN == sizeof execErr) {
    waitpid(pid, nullptr, 0);
    close(outPipe[0]);
    close(errPipe[0]);
    throw SpawnError("cannot execute '" + targetPath +
                     "': " + std::strerror(execErr));
  }

  RunResult result;
  auto deadline = start + std::chrono::milliseconds(timeoutMs);
  bool outOpen = true, errOpen = true;
  while (outOpen || errOpen) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                    deadline - std::chrono::steady_clock::now())
                    .count();
    if (left <= 0) {
      result.timedOut = true;
      kill(pid, SIGKILL);
      break;
    }
    pollfd fds[2];
    nfds_t n = 0;
    if (outOpen)
      fds[n++] = {outPipe[0], POLLIN, 0};
    if (errOpen)
      fds[n++] = {errPipe[0], POLLIN, 0};
    int ready = poll(fds, n, static_cast<int>(left));
    if (ready < 0 && errno != EINTR)
      break;
    for (nfds_t i = 0; i < n; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR)))
        continue;
      bool stillOpen;
      if (fds[i].fd == outPipe[0]) {
        stillOpen = drain(outPipe[0], result.stdoutText, outputCap);
        outOpen = stillOpen;
      } else {
        stillOpen = drain(errPipe[0], result.stderrText, outputCap);
        errOpen = stillOpen;
      }
    }
  }
  // After a kill the pipes still need draining so the child can be reaped.
  drain(outPipe[0], result.stdoutText, outputCap);
  drain(errPipe[0], result.stderrText, outputCap);
  close(outPipe[0]);
  close(errPipe[0]);

  int status = 0;
  waitpid(pid, &status, 0);
  if (!result.timedOut) {
    if (WIFEXITED(status)) {
      result.exited = true;
      result.exitCode = WEXITSTATUS(status);
    } else if (WIFSIGNALED(status)) {
      result.signaled = true;
      result.termSignal = WTERMSIG(status);
    }
  }
  result.durationMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

RunResult runTarget(const std::string &targetCmd,
                    const std::vector<PassInvocation> &pipeline,
                    const std::string &text, const std::string &tmpDir,
                    int64_t timeoutMs) {
  if (targetCmd == kBuiltinTarget)
    return runBuiltinReference(text, pipeline);

  static std::atomic<uint64_t> counter{0};
  std::filesystem::path path =
      std::filesystem::path(tmpDir) /
      ("case-" + std::to_string(counter.fetch_add(1)) + ".mlir");
  {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
  RunResult result =
      runSubprocess(targetCmd, pipeline, path.string(), timeoutMs);
  std::error_code ec;
  std::filesystem::remove(path, ec);
  return result;
}

} // namespace treegraft
