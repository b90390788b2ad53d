#include "spotopt/sim.hpp"

#include <algorithm>
#include <unordered_map>

#include "spotopt/preprocess.hpp"

namespace spotopt::sim {

std::vector<FulfillEntry> fulfill(const Allocation& allocation, const MarketSnapshot& snapshot) {
  std::unordered_map<std::string, const InstanceCandidate*> by_id;
  for (const auto& c : snapshot.candidates) by_id[c.id] = &c;
  std::vector<FulfillEntry> out;
  out.reserve(allocation.entries.size());
  for (const auto& e : allocation.entries) {
    auto it = by_id.find(e.id);
    if (it == by_id.end())
      throw Error(ErrorCode::UnknownCandidate, "allocation references unknown candidate: " + e.id);
    out.push_back({e.id, e.count, std::min(e.count, it->second->t3)});
  }
  return out;
}

namespace {

// Efficiency against the raw snapshot, so baseline picks that the enrichment
// filter would drop (t3 = 0) still get a report.
EfficiencyReport snapshot_efficiency(const Allocation& alloc, const MarketSnapshot& snap,
                                     const PodSpec& spec) {
  std::unordered_map<std::string, const InstanceCandidate*> by_id;
  for (const auto& c : snap.candidates) by_id[c.id] = &c;
  EfficiencyReport r;
  std::int64_t pods = 0;
  for (const auto& e : alloc.entries) {
    const auto& c = *by_id.at(e.id);
    r.e_perf_cost += preprocess::scale_benchmark(c, spec.workload) *
                     static_cast<double>(e.count) / c.spot_price;
    pods += preprocess::pod_capacity(c, spec) * e.count;
  }
  r.e_over_pods = static_cast<double>(spec.req_pod) / static_cast<double>(pods);
  r.e_total = r.e_perf_cost * r.e_over_pods;
  return r;
}

Allocation run_strategy(const std::string& name,
                        const std::vector<InstanceCandidate>& candidates, const PodSpec& spec,
                        const ReplayConfig& config) {
  if (name == kStrategyKubePacs || name == kStrategyGreedy) {
    auto enriched = preprocess::enrich(candidates, spec);
    if (name == kStrategyKubePacs)
      return gss::search(enriched.candidates, spec, config.gss).best_allocation;
    return baselines::greedy(enriched.candidates, spec);
  }
  if (name == kStrategySpotverseNode)
    return baselines::spotverse_node(candidates, spec, config.baseline);
  if (name == kStrategySpotversePod)
    return baselines::spotverse_pod(candidates, spec, config.baseline);
  throw Error(ErrorCode::InvalidSpec, "unknown strategy: " + name);
}

}  // namespace

SimReport replay(std::span<const MarketSnapshot> trace, std::span<const InterruptEvent> events,
                 const PodSpec& spec, const std::vector<std::string>& strategies,
                 const ReplayConfig& config) {
  validate_pod_spec(spec);
  SimReport report;
  resilience::UnavailableOfferingsCache cache(config.cache_ttl_seconds);

  // snapshot index covering each event, for recovery bookkeeping
  struct PendingRecovery {
    std::size_t event_index;
    std::size_t last_pre_event_snapshot;  // index into trace
  };
  std::unordered_map<std::string, std::vector<PendingRecovery>> pending;  // per strategy
  std::vector<char> recovered(events.size() * strategies.size(), 0);
  auto recovery_slot = [&](std::size_t event_index, std::size_t strategy_index) -> char& {
    return recovered[event_index * strategies.size() + strategy_index];
  };
  report.recoveries.reserve(events.size() * strategies.size());
  for (const auto& ev : events)
    for (const auto& name : strategies)
      report.recoveries.push_back({name, ev.t, ev.candidate_id, -1});

  std::size_t next_event = 0;
  for (std::size_t si = 0; si < trace.size(); ++si) {
    const auto& snap = trace[si];
    while (next_event < events.size() && events[next_event].t <= snap.timestamp) {
      cache.record_interrupt(events[next_event]);
      for (const auto& name : strategies)
        pending[name].push_back({next_event, si == 0 ? 0 : si - 1});
      ++next_event;
    }

    std::vector<InstanceCandidate> available;
    available.reserve(snap.candidates.size());
    for (const auto& c : snap.candidates)
      if (!cache.is_unavailable(c.id, snap.timestamp)) available.push_back(c);

    for (std::size_t sti = 0; sti < strategies.size(); ++sti) {
      const auto& name = strategies[sti];
      SimRecord rec;
      rec.timestamp = snap.timestamp;
      rec.strategy = name;
      try {
        Allocation alloc = run_strategy(name, available, spec, config);
        auto fulfilled = fulfill(alloc, snap);
        for (const auto& f : fulfilled) {
          rec.requested_nodes += f.requested;
          rec.fulfilled_nodes += f.granted;
          rec.max_count_per_type = std::max(rec.max_count_per_type, f.requested);
        }
        rec.covers = alloc.total_pods_allocated >= spec.req_pod;
        rec.report = snapshot_efficiency(alloc, snap, spec);
        rec.allocation = std::move(alloc);
      } catch (const Error& e) {
        rec.error = e.what();
      }

      if (rec.covers) {
        for (const auto& p : pending[name]) {
          if (recovery_slot(p.event_index, sti)) continue;
          recovery_slot(p.event_index, sti) = true;
          report.recoveries[p.event_index * strategies.size() + sti].latency_snapshots =
              static_cast<int>(si - p.last_pre_event_snapshot);
        }
      }
      report.records.push_back(std::move(rec));
    }
  }
  return report;
}

std::vector<PodSpec> scenario_grid() {
  std::vector<PodSpec> out;
  const std::int64_t pod_counts[] = {10, 50, 100, 400, 1000};
  const std::pair<double, double> shapes[] = {{1.0, 2.0}, {2.0, 2.0}, {1.0, 4.0}};
  for (auto pods : pod_counts)
    for (auto [cpu, mem] : shapes) out.push_back({cpu, mem, pods, Workload::General});
  // irregular (pods, cpu, mem) tuples
  out.push_back({7.0, 7.0, 17, Workload::General});
  out.push_back({3.0, 5.0, 75, Workload::General});
  out.push_back({4.0, 2.0, 115, Workload::General});
  out.push_back({1.0, 6.0, 287, Workload::General});
  out.push_back({1.0, 9.0, 439, Workload::General});
  return out;
}

}  // namespace spotopt::sim
