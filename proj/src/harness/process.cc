// Copyright 2026 The Solgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "solgen/harness/process.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

namespace solgen::harness {
namespace {

void CloseFd(int& fd) {
  if (fd >= 0) close(fd);
  fd = -1;
}

}  // namespace

std::vector<std::string> SplitCommand(const std::string& command) {
  std::istringstream in(command);
  std::vector<std::string> out;
  for (std::string word; in >> word;) out.push_back(word);
  return out;
}

ProcessResult RunProcess(const std::vector<std::string>& argv, const std::string& input,
                         std::chrono::milliseconds timeout) {
  if (argv.empty()) throw EnvironmentError("empty command");
  int in_pipe[2], out_pipe[2], err_pipe[2], exec_pipe[2];
  if (pipe2(in_pipe, O_CLOEXEC) || pipe2(out_pipe, O_CLOEXEC) ||
      pipe2(err_pipe, O_CLOEXEC) || pipe2(exec_pipe, O_CLOEXEC)) {
    throw EnvironmentError(std::string("pipe: ") + std::strerror(errno));
  }
  std::vector<char*> args;
  for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  pid_t pid = fork();
  if (pid < 0) throw EnvironmentError(std::string("fork: ") + std::strerror(errno));
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    setpgid(0, 0);
    execvp(args[0], args.data());
    int code = errno;
    ssize_t ignored = write(exec_pipe[1], &code, sizeof(code));
    (void)ignored;
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  close(err_pipe[1]);
  close(exec_pipe[1]);

  int exec_errno = 0;
  ssize_t n = read(exec_pipe[0], &exec_errno, sizeof(exec_errno));
  close(exec_pipe[0]);
  if (n == sizeof(exec_errno)) {
    CloseFd(in_pipe[1]);
    close(out_pipe[0]);
    close(err_pipe[0]);
    waitpid(pid, nullptr, 0);
    throw EnvironmentError("cannot execute " + argv[0] + ": " + std::strerror(exec_errno));
  }

  ProcessResult result;
  int fds[3] = {in_pipe[1], out_pipe[0], err_pipe[0]};
  fcntl(fds[0], F_SETFL, O_NONBLOCK);
  size_t written = 0;
  if (input.empty()) CloseFd(fds[0]);
  auto deadline = std::chrono::steady_clock::now() + timeout;
  char buffer[65536];
  while (fds[1] >= 0 || fds[2] >= 0) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      break;
    }
    pollfd pfds[3];
    int count = 0;
    int which[3];
    if (fds[0] >= 0) { pfds[count] = {fds[0], POLLOUT, 0}; which[count++] = 0; }
    if (fds[1] >= 0) { pfds[count] = {fds[1], POLLIN, 0}; which[count++] = 1; }
    if (fds[2] >= 0) { pfds[count] = {fds[2], POLLIN, 0}; which[count++] = 2; }
    int ready = poll(pfds, count, static_cast<int>(std::min<int64_t>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    for (int i = 0; i < count; ++i) {
      if (!pfds[i].revents) continue;
      int w = which[i];
      if (w == 0) {
        ssize_t k = write(fds[0], input.data() + written, input.size() - written);
        if (k > 0) written += static_cast<size_t>(k);
        if (k < 0 && errno != EAGAIN) CloseFd(fds[0]);
        if (written == input.size()) CloseFd(fds[0]);
      } else {
        ssize_t k = read(fds[w], buffer, sizeof(buffer));
        if (k > 0) {
          (w == 1 ? result.out : result.err).append(buffer, static_cast<size_t>(k));
        } else if (k == 0 || errno != EAGAIN) {
          CloseFd(fds[w]);
        }
      }
    }
  }
  for (int& fd : fds) CloseFd(fd);
  int status = 0;
  waitpid(pid, &status, 0);
  if (!result.timed_out && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace solgen::harness
