// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Criteria 1-8 run in-process; criterion 9 drives the CLI end to end.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "circleop/acceptance.hpp"

namespace {

#ifndef CIRCLEOP_CLI_PATH
#define CIRCLEOP_CLI_PATH "circleop"
#endif

bool run_verify_all_via_cli() {
  const std::string cmd = std::string(CIRCLEOP_CLI_PATH) + " verify-all 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  char buffer[4096];
  std::string output;
  while (fgets(buffer, sizeof(buffer), pipe)) output += buffer;
  const int status = pclose(pipe);
  const bool exit_zero = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
  const bool reports_pass = output.find("\"all_passed\": true") != std::string::npos;
  return exit_zero && reports_pass;
}

}  // namespace

int main() {
  const auto results = circleop::acceptance::run_all(&std::cout);
  bool ok = circleop::acceptance::all_passed(results);

  const bool cli_ok = run_verify_all_via_cli();
  std::cout << (cli_ok ? "[PASS] " : "[FAIL] ") << "9 verify-all"
            << ": CLI gate " << (cli_ok ? "exits 0 with all criteria green"
                                        : "failed or exited nonzero")
            << "\n";
  ok = ok && cli_ok;

  std::cout << (ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return ok ? 0 : 1;
}
