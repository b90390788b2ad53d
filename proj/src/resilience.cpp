#include "spotopt/resilience.hpp"

#include <algorithm>

namespace spotopt::resilience {

void UnavailableOfferingsCache::record_interrupt(const InterruptEvent& event) {
  std::lock_guard<std::mutex> lock(mu_);
  expiry_[event.candidate_id] = event.t + ttl_;
}

bool UnavailableOfferingsCache::is_unavailable(const std::string& id, std::int64_t now) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = expiry_.find(id);
  return it != expiry_.end() && now < it->second;
}

std::vector<std::string> UnavailableOfferingsCache::active_ids(std::int64_t now) const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, expiry] : expiry_)
    if (now < expiry) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

gss::GssResult reoptimize(std::span<const EnrichedCandidate> enriched, const PodSpec& spec,
                          const UnavailableOfferingsCache& cache, std::int64_t now,
                          const gss::GssConfig& config, const gss::IlpSolver& solver) {
  std::vector<EnrichedCandidate> remaining;
  std::int64_t excluded_pods = 0;
  for (const auto& e : enriched) {
    if (cache.is_unavailable(e.base.id, now))
      excluded_pods += e.pod_capacity * e.base.t3;
    else
      remaining.push_back(e);
  }

  std::int64_t cap = 0;
  for (const auto& e : remaining) cap += e.pod_capacity * e.base.t3;
  if (cap < spec.req_pod)
    throw InsufficientCapacityError(
        spec.req_pod - cap, "excluded offerings would have provided " +
                                std::to_string(excluded_pods) + " pods");

  return gss::search(remaining, spec, config, solver);
}

}  // namespace spotopt::resilience
