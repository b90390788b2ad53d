#include "spotopt/baselines.hpp"

#include <algorithm>
#include <vector>

#include "spotopt/preprocess.hpp"

namespace spotopt::baselines {

Allocation greedy(std::span<const EnrichedCandidate> enriched, const PodSpec& spec) {
  validate_pod_spec(spec);
  std::vector<const EnrichedCandidate*> order;
  order.reserve(enriched.size());
  for (const auto& e : enriched) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const EnrichedCandidate* a, const EnrichedCandidate* b) {
              const double ra = a->scaled_benchmark / a->base.spot_price;
              const double rb = b->scaled_benchmark / b->base.spot_price;
              if (ra != rb) return ra > rb;
              return a->base.id < b->base.id;
            });

  std::vector<AllocationItem> items;
  std::int64_t remaining = spec.req_pod;
  for (const auto* e : order) {
    if (remaining <= 0) break;
    const std::int64_t needed =
        (remaining + e->pod_capacity - 1) / e->pod_capacity;
    const std::int64_t take = std::min(needed, e->base.t3);
    items.push_back({e->base.id, take, e->pod_capacity, e->base.spot_price});
    remaining -= take * e->pod_capacity;
  }
  if (remaining > 0) throw InsufficientCapacityError(remaining, "greedy exhausted all candidates");
  return make_allocation(std::move(items));
}

namespace {

struct Survivor {
  const InstanceCandidate* candidate;
  std::int64_t pods;
};

std::vector<Survivor> spotverse_filter(std::span<const InstanceCandidate> candidates,
                                       const PodSpec& spec, const BaselineConfig& cfg) {
  validate_pod_spec(spec);
  std::vector<Survivor> out;
  for (const auto& c : candidates) {
    if (!c.sps_single || !c.interrupt_freq)
      throw Error(ErrorCode::MissingAvailabilityData,
                  "candidate " + c.id + " lacks sps_single/interrupt_freq");
    const double score = (3.0 - *c.sps_single) + *c.interrupt_freq;
    if (score > cfg.spotverse_threshold) continue;
    out.push_back({&c, preprocess::pod_capacity(c, spec)});
  }
  if (out.empty())
    throw Error(ErrorCode::NoCandidatesPassFilter, "no candidate passes the availability filter");
  return out;
}

Allocation cheapest_fill(std::vector<Survivor> survivors, const PodSpec& spec) {
  std::erase_if(survivors, [](const Survivor& s) { return s.pods < 1; });
  if (survivors.empty())
    throw InsufficientCapacityError(spec.req_pod, "no surviving candidate can host a pod");
  // The whole demand lands on the front of the sort; no per-type cap applies.
  const auto& pick = survivors.front();
  const std::int64_t count = (spec.req_pod + pick.pods - 1) / pick.pods;
  return make_allocation({{pick.candidate->id, count, pick.pods, pick.candidate->spot_price}});
}

}  // namespace

Allocation spotverse_node(std::span<const InstanceCandidate> candidates, const PodSpec& spec,
                          const BaselineConfig& cfg) {
  auto survivors = spotverse_filter(candidates, spec, cfg);
  std::sort(survivors.begin(), survivors.end(), [](const Survivor& a, const Survivor& b) {
    if (a.candidate->spot_price != b.candidate->spot_price)
      return a.candidate->spot_price < b.candidate->spot_price;
    return a.candidate->id < b.candidate->id;
  });
  return cheapest_fill(std::move(survivors), spec);
}

Allocation spotverse_pod(std::span<const InstanceCandidate> candidates, const PodSpec& spec,
                         const BaselineConfig& cfg) {
  auto survivors = spotverse_filter(candidates, spec, cfg);
  std::erase_if(survivors, [](const Survivor& s) { return s.pods < 1; });
  if (survivors.empty())
    throw InsufficientCapacityError(spec.req_pod, "no surviving candidate can host a pod");
  std::sort(survivors.begin(), survivors.end(), [](const Survivor& a, const Survivor& b) {
    const double pa = a.candidate->spot_price / static_cast<double>(a.pods);
    const double pb = b.candidate->spot_price / static_cast<double>(b.pods);
    if (pa != pb) return pa < pb;
    return a.candidate->id < b.candidate->id;
  });
  return cheapest_fill(std::move(survivors), spec);
}

}  // namespace spotopt::baselines
