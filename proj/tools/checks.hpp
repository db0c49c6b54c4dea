#pragma once

// Check jobs behind the vosa subcommands.  Every job returns a list of JSON
// reports carrying at least "example", "check", "residual", "pass" and
// "first_mismatch".

#include "vosa/numeric.hpp"
#include "vosa/rational.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vosa::cli {

struct RunConfig {
  // Explicit truncation; each check falls back to its own default when unset.
  std::optional<Rational> order;
  double tol = 1e-6;
  std::vector<EvalPoint> points;
  bool parallel = false;
};

// Raised for malformed input; the CLI maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  std::string id;  // reports are ordered by id
  std::function<std::vector<nlohmann::json>()> run;
};

Rational parse_rational(const std::string& s);
// "re,im" (tau at u = 0) or "u_re,u_im,tau_re,tau_im".
EvalPoint parse_point(const std::string& s);
// Default truncation: VOSA_ORDER when set, else 6.
Rational default_order();

std::vector<Job> character_jobs(const RunConfig& cfg, const std::vector<std::string>& examples,
                                const std::string& sector);
std::vector<Job> theta_jobs(const RunConfig& cfg, const std::vector<std::string>& examples);
std::vector<Job> glue_jobs(const RunConfig& cfg, const std::vector<std::string>& examples);
std::vector<Job> classify_jobs(const RunConfig& cfg);
std::vector<Job> modular_jobs(const RunConfig& cfg, const std::vector<std::string>& examples);
std::vector<Job> genus_jobs(const RunConfig& cfg, const std::vector<std::string>& examples);
std::vector<Job> flow_jobs(const RunConfig& cfg, const std::vector<std::string>& examples);
std::vector<Job> n4_jobs(const RunConfig& cfg, const std::string& action, int window);
std::vector<Job> freefield_jobs(const RunConfig& cfg);
std::vector<Job> all_jobs(const RunConfig& cfg);

// Runs the jobs (concurrently when cfg.parallel) and concatenates their
// reports in id order.  A job that throws std::invalid_argument raises
// UsageError; any other exception becomes a failing report.
std::vector<nlohmann::json> run_jobs(const std::vector<Job>& jobs, bool parallel);

std::string format_text(const std::vector<nlohmann::json>& reports);

}  // namespace vosa::cli
