#ifndef SPOTOPT_BASELINES_HPP
#define SPOTOPT_BASELINES_HPP

#include <span>

#include "spotopt/types.hpp"

namespace spotopt::baselines {

struct BaselineConfig {
  // Cutoff for the SpotVerse availability filter: candidates with
  // (3 - sps_single) + interrupt_freq above this are dropped.
  double spotverse_threshold = 3.0;
};

// Ranks candidates by per-node scaled_benchmark / spot_price descending
// (id ascending on ties) and allocates up to T3 from the top until the pod
// demand is covered; the last pick takes only what coverage needs.
// Throws InsufficientCapacityError.
Allocation greedy(std::span<const EnrichedCandidate> enriched, const PodSpec& spec);

// SpotVerse-style selection, lowest price per node. Applies the availability
// filter, then fills the entire demand from the cheapest surviving type with
// no T3 bound. Requires sps_single and interrupt_freq on every candidate.
// Throws Error(NoCandidatesPassFilter), Error(MissingAvailabilityData),
// InsufficientCapacityError.
Allocation spotverse_node(std::span<const InstanceCandidate> candidates, const PodSpec& spec,
                          const BaselineConfig& cfg = {});

// Same filter, sort key spot_price / pod_capacity ascending.
Allocation spotverse_pod(std::span<const InstanceCandidate> candidates, const PodSpec& spec,
                         const BaselineConfig& cfg = {});

}  // namespace spotopt::baselines

#endif  // SPOTOPT_BASELINES_HPP
