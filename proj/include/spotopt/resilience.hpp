#ifndef SPOTOPT_RESILIENCE_HPP
#define SPOTOPT_RESILIENCE_HPP

#include <cstdint>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spotopt/gss.hpp"
#include "spotopt/types.hpp"

namespace spotopt::resilience {

// TTL cache of recently interrupted offerings. One writer (the interrupt
// handler) and concurrent readers (the optimizer); entries update atomically.
class UnavailableOfferingsCache {
 public:
  static constexpr std::int64_t kDefaultTtlSeconds = 180;

  explicit UnavailableOfferingsCache(std::int64_t ttl_seconds = kDefaultTtlSeconds)
      : ttl_(ttl_seconds) {}

  // Records expiry = event.t + ttl; re-recording refreshes the expiry.
  // Unknown ids are recorded as-is; validation happens at query time.
  void record_interrupt(const InterruptEvent& event);

  bool is_unavailable(const std::string& id, std::int64_t now) const;
  std::vector<std::string> active_ids(std::int64_t now) const;
  std::int64_t ttl_seconds() const noexcept { return ttl_; }

 private:
  std::int64_t ttl_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::int64_t> expiry_;
};

// Drops candidates with an active cache entry at `now`, then reruns the
// golden section search. The result never contains a cached offering.
// Throws InsufficientCapacityError whose message accounts for the pods the
// excluded offerings would have provided.
gss::GssResult reoptimize(std::span<const EnrichedCandidate> enriched, const PodSpec& spec,
                          const UnavailableOfferingsCache& cache, std::int64_t now,
                          const gss::GssConfig& config = {},
                          const gss::IlpSolver& solver = ilp::solve);

}  // namespace spotopt::resilience

#endif  // SPOTOPT_RESILIENCE_HPP
