#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ldic::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags, invalid q, scheme/graph mismatch, unmet precondition
  kDecodeFail = 2,  // verify: some (receiver, symbol) pair is not decodable
  kParseError = 3,  // unreadable or malformed graph / code file
  kBudget = 4,      // an enumeration exceeded --budget
  kStructural = 5,  // code and graph disagree on shape (N, MN)
};

struct RunConfig {
  std::string command; // minrank | construct | verify | profile | tradeoff | oracle | normalize
  std::string graph_path;
  std::string code_path;
  std::uint32_t q = 2;
  int M = 1;
  std::optional<std::string> r;
  int ell = 0;
  std::string scheme;
  int anchor = 1;
  std::optional<std::uint64_t> budget;
  std::string out;
  unsigned threads = 0;
};

/// Parses argv and dispatches. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_minrank(const RunConfig& config, std::ostream& out);
int cmd_construct(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_profile(const RunConfig& config, std::ostream& out);
int cmd_tradeoff(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::ostream& out);
int cmd_normalize(const RunConfig& config, std::ostream& out);

} // namespace ldic::cli
