#include "spotopt/preprocess.hpp"

#include <algorithm>
#include <cmath>

namespace spotopt::preprocess {

std::int64_t pod_capacity(const InstanceCandidate& candidate, const PodSpec& spec) {
  const double by_cpu = std::floor(candidate.cpu / spec.req_cpu);
  const double by_mem = std::floor(candidate.mem / spec.req_mem);
  const double pods = std::min(by_cpu, by_mem);
  return pods <= 0.0 ? 0 : static_cast<std::int64_t>(pods);
}

namespace {

bool capability_matches(const InstanceCandidate& c, Workload preference) {
  switch (preference) {
    case Workload::General:
      return false;
    case Workload::Network:
      return c.network_optimized;
    case Workload::Disk:
      return c.disk_optimized;
    case Workload::DiskAndNetwork:
      return c.network_optimized || c.disk_optimized;
  }
  return false;
}

}  // namespace

double scale_benchmark(const InstanceCandidate& candidate, Workload preference) {
  if (!capability_matches(candidate, preference)) return candidate.benchmark;
  if (!candidate.base_ondemand_price) return candidate.benchmark;
  return candidate.benchmark * (candidate.ondemand_price / *candidate.base_ondemand_price);
}

EnrichResult enrich(std::span<const InstanceCandidate> candidates, const PodSpec& spec) {
  validate_pod_spec(spec);
  EnrichResult out;
  for (const auto& c : candidates) {
    if (capability_matches(c, spec.workload) && !c.base_ondemand_price)
      out.warnings.push_back("candidate " + c.id +
                             " matches the workload preference but has no base "
                             "on-demand price; benchmark left unscaled");
    const std::int64_t pods = pod_capacity(c, spec);
    if (pods < 1 || c.t3 < 1) continue;
    EnrichedCandidate e;
    e.base = c;
    e.pod_capacity = pods;
    e.scaled_benchmark = scale_benchmark(c, spec.workload);
    e.perf = e.scaled_benchmark * static_cast<double>(pods);
    out.candidates.push_back(std::move(e));
  }
  if (out.candidates.empty())
    throw Error(ErrorCode::NoFeasibleCandidates,
                "no candidate can host the requested pod shape");
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const EnrichedCandidate& a, const EnrichedCandidate& b) {
              return a.base.id < b.base.id;
            });
  return out;
}

Normalizers normalizers(std::span<const EnrichedCandidate> enriched) {
  if (enriched.empty()) throw Error(ErrorCode::EmptyCandidateSet, "empty candidate set");
  Normalizers n{enriched[0].perf, enriched[0].base.spot_price};
  for (const auto& e : enriched) {
    n.perf_min = std::min(n.perf_min, e.perf);
    n.sp_min = std::min(n.sp_min, e.base.spot_price);
  }
  return n;
}

}  // namespace spotopt::preprocess
