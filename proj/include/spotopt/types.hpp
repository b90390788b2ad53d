#ifndef SPOTOPT_TYPES_HPP
#define SPOTOPT_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spotopt/errors.hpp"

namespace spotopt {

enum class Workload {
  General,
  Network,
  Disk,
  DiskAndNetwork,
};

const char* workload_name(Workload w);
std::optional<Workload> workload_from_name(const std::string& name);

// Per-pod resource request. All pods in one request share the same shape.
struct PodSpec {
  double req_cpu = 0.0;   // vCPU cores per pod
  double req_mem = 0.0;   // GiB per pod
  std::int64_t req_pod = 0;
  Workload workload = Workload::General;
};

// Throws InvalidSpecError naming the violated field.
const PodSpec& validate_pod_spec(const PodSpec& spec);

// One instance type in one availability zone. The same type in distinct AZs
// is a distinct candidate with its own spot price and T3 bound.
// Id format: "{instance_type}/{region}/{az}".
struct InstanceCandidate {
  std::string id;
  std::string instance_type;
  std::string region;
  std::string az;
  double cpu = 0.0;
  double mem = 0.0;
  double spot_price = 0.0;
  double ondemand_price = 0.0;
  std::optional<double> base_ondemand_price;  // general-purpose sibling's on-demand price
  double benchmark = 0.0;                     // single-core score
  std::int64_t t3 = 0;                        // max simultaneous instances at SPS 3
  bool network_optimized = false;
  bool disk_optimized = false;
  std::optional<int> sps_single;      // 1..3, SpotVerse baselines only
  std::optional<int> interrupt_freq;  // bucket >= 0, SpotVerse baselines only
};

struct EnrichedCandidate {
  InstanceCandidate base;
  std::int64_t pod_capacity = 0;
  double scaled_benchmark = 0.0;
  double perf = 0.0;  // scaled_benchmark * pod_capacity
};

struct AllocationEntry {
  std::string id;
  std::int64_t count = 0;
};

struct Allocation {
  std::vector<AllocationEntry> entries;  // sorted ascending by id, counts > 0
  std::int64_t total_pods_allocated = 0;
  double hourly_cost = 0.0;
};

// Input row for building an Allocation; carries the per-candidate data the
// derived fields need.
struct AllocationItem {
  std::string id;
  std::int64_t count = 0;
  std::int64_t pod_capacity = 0;
  double spot_price = 0.0;
};

// Sorts by id, drops zero counts, computes total pods and hourly cost.
Allocation make_allocation(std::vector<AllocationItem> items);

struct EfficiencyReport {
  double e_perf_cost = 0.0;
  double e_over_pods = 0.0;
  double e_total = 0.0;
  double alpha = 0.0;
};

struct InterruptEvent {
  std::int64_t t = 0;  // epoch seconds
  std::string candidate_id;
};

struct MarketSnapshot {
  std::int64_t timestamp = 0;  // epoch seconds
  std::vector<InstanceCandidate> candidates;
};

}  // namespace spotopt

#endif  // SPOTOPT_TYPES_HPP
