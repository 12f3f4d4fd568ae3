#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crankforge/congruence.hpp"

namespace crankforge::cli {

/// Exit-code contract shared by every subcommand.
enum ExitCode : int { kOk = 0, kRefuted = 1, kUsage = 2 };

/// Output of one job: record lines (without newlines) plus its exit code.
struct JobResult {
  std::vector<std::string> lines;
  int exit_code = kOk;
};

struct VerifyJob {
  CrankSource family = CrankSource::j2;
  int ell = 0;
  int m = 0;
  int k = 0;  ///< conjecture family only
  int j = 0;  ///< conjecture family only
  std::vector<int> deltas;  ///< empty: admissible set (theorems) or scanned set (conjecture)
  int depth = 200;
  bool timing = true;
};

struct ScanJob {
  int k = 1;
  int j = 0;
  int ell_max = 11;
  int depth = 500;
  bool check_conjecture = false;
};

using Job = std::variant<VerifyJob, ScanJob>;

/// Largest accepted q-depth: CRANKFORGE_DEPTH_LIMIT, default 10^6.
int depth_limit();
void require_depth(int depth);

/// Builds the crank spec a verify job refers to. Throws DomainError.
CrankSpec spec_for(const VerifyJob& job);

/// Checks every precondition without doing the expensive work.
void validate(const Job& job);

JobResult run(const VerifyJob& job);
JobResult run(const ScanJob& job);
JobResult run(const Job& job);

/// Runs jobs with up to `parallelism` in flight; results come back in
/// submission order regardless of completion order.
std::vector<JobResult> run_all(const std::vector<Job>& jobs, int parallelism);

/// Parses a campaign file: {"parallelism": n, "output": path, "jobs": [...]}.
struct Campaign {
  std::vector<Job> jobs;
  std::string output;
  int parallelism = 1;
};
Campaign parse_campaign(const std::string& json_text);

}  // namespace crankforge::cli
