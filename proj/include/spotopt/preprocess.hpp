#ifndef SPOTOPT_PREPROCESS_HPP
#define SPOTOPT_PREPROCESS_HPP

#include <span>
#include <string>
#include <vector>

#include "spotopt/types.hpp"

namespace spotopt::preprocess {

struct Normalizers {
  double perf_min = 0.0;
  double sp_min = 0.0;
};

// Pods of the requested shape that fit on one instance:
// min(floor(cpu / req_cpu), floor(mem / req_mem)). Zero when too small.
std::int64_t pod_capacity(const InstanceCandidate& candidate, const PodSpec& spec);

// Workload-aware benchmark adjustment: when the candidate's capability flags
// intersect the requested preference and a base on-demand price is known, the
// benchmark is multiplied by ondemand_price / base_ondemand_price. A candidate
// with both flags scales once. General preference never scales.
double scale_benchmark(const InstanceCandidate& candidate, Workload preference);

struct EnrichResult {
  std::vector<EnrichedCandidate> candidates;  // sorted ascending by id
  std::vector<std::string> warnings;
};

// Applies pod_capacity and scale_benchmark, drops candidates with zero pod
// capacity or t3 = 0, sets perf = scaled_benchmark * pod_capacity.
// Warns (not errors) for flag-matching candidates missing a base price.
// Throws Error(NoFeasibleCandidates) when nothing survives.
EnrichResult enrich(std::span<const InstanceCandidate> candidates, const PodSpec& spec);

// Elementwise minima of perf and spot_price. Throws Error(EmptyCandidateSet).
Normalizers normalizers(std::span<const EnrichedCandidate> enriched);

}  // namespace spotopt::preprocess

#endif  // SPOTOPT_PREPROCESS_HPP
