#ifndef SPOTOPT_REPORT_HPP
#define SPOTOPT_REPORT_HPP

#include <string>
#include <vector>

#include "spotopt/baselines.hpp"
#include "spotopt/gss.hpp"
#include "spotopt/sim.hpp"
#include "spotopt/types.hpp"

namespace spotopt::report {

inline constexpr int kSchemaVersion = 1;

struct RunOptions {
  PodSpec spec;
  gss::GssConfig gss;
  baselines::BaselineConfig baseline;
  std::vector<std::string> exclude_ids;
  std::int64_t cache_ttl_seconds = resilience::UnavailableOfferingsCache::kDefaultTtlSeconds;
};

// End-to-end optimization: enrich, search, report. JSON payload with
// allocation, efficiency, chosen alpha, evaluation trail and warnings.
std::string run_optimize(const std::vector<InstanceCandidate>& candidates,
                         const RunOptions& opts);

// Evaluates the ILP on an alpha grid. CSV columns:
// alpha,e_total,cost,pods,gss_pick where gss_pick marks the grid point
// closest to the alpha the search settled on.
std::string run_sweep_alpha(const std::vector<InstanceCandidate>& candidates,
                            const RunOptions& opts, double step);

struct CompareOutput {
  std::string json;
  std::string csv;
};

// Runs kubepacs, greedy and the SpotVerse variants over the 20-scenario
// grid; per scenario e_total is normalized to kubepacs = 1.0.
CompareOutput run_compare(const std::vector<InstanceCandidate>& candidates,
                          const RunOptions& opts);

// Trace replay over a snapshot directory plus an event file.
CompareOutput run_simulate(const std::string& trace_dir, const std::string& events_path,
                           const RunOptions& opts);

}  // namespace spotopt::report

#endif  // SPOTOPT_REPORT_HPP
