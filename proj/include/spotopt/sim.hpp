#ifndef SPOTOPT_SIM_HPP
#define SPOTOPT_SIM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spotopt/baselines.hpp"
#include "spotopt/gss.hpp"
#include "spotopt/resilience.hpp"
#include "spotopt/types.hpp"

namespace spotopt::sim {

// Strategy names accepted by replay.
inline constexpr const char* kStrategyKubePacs = "kubepacs";
inline constexpr const char* kStrategyGreedy = "greedy";
inline constexpr const char* kStrategySpotverseNode = "spotverse-node";
inline constexpr const char* kStrategySpotversePod = "spotverse-pod";

struct FulfillEntry {
  std::string id;
  std::int64_t requested = 0;
  std::int64_t granted = 0;  // min(requested, t3 at snapshot time)
};

// Deterministic fulfillment model: each candidate grants min(x_i, t3_i).
// Throws Error(UnknownCandidate) when an allocation id is not in the snapshot.
std::vector<FulfillEntry> fulfill(const Allocation& allocation, const MarketSnapshot& snapshot);

struct SimRecord {
  std::int64_t timestamp = 0;
  std::string strategy;
  std::optional<Allocation> allocation;
  std::optional<EfficiencyReport> report;
  std::string error;  // nonempty when the strategy failed on this snapshot
  std::int64_t requested_nodes = 0;
  std::int64_t fulfilled_nodes = 0;
  std::int64_t max_count_per_type = 0;
  bool covers = false;  // total pods allocated >= req_pod
};

struct RecoveryRecord {
  std::string strategy;
  std::int64_t event_time = 0;
  std::string candidate_id;
  // Snapshot steps from the last pre-event snapshot to the first post-event
  // snapshot whose allocation covers the demand; -1 when never restored.
  int latency_snapshots = -1;
};

struct SimReport {
  std::vector<SimRecord> records;       // one per (snapshot, strategy)
  std::vector<RecoveryRecord> recoveries;
};

struct ReplayConfig {
  gss::GssConfig gss;
  baselines::BaselineConfig baseline;
  std::int64_t cache_ttl_seconds = resilience::UnavailableOfferingsCache::kDefaultTtlSeconds;
};

// Replays a trace: per snapshot, applies the interrupt events that fall in
// its window, filters offerings with active cache entries, reruns each
// strategy and records fulfillment and efficiency. Strategy errors are
// recorded per cell, not fatal.
SimReport replay(std::span<const MarketSnapshot> trace, std::span<const InterruptEvent> events,
                 const PodSpec& spec, const std::vector<std::string>& strategies,
                 const ReplayConfig& config = {});

// The 20 evaluation scenarios: requested pod counts {10,50,100,400,1000}
// crossed with per-pod shapes {(1,2),(2,2),(1,4)}, plus five irregular
// (pods, cpu, mem) tuples.
std::vector<PodSpec> scenario_grid();

}  // namespace spotopt::sim

#endif  // SPOTOPT_SIM_HPP
