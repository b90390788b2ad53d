#include "spotopt/types.hpp"

#include <algorithm>

namespace spotopt {

const char* workload_name(Workload w) {
  switch (w) {
    case Workload::General:
      return "general";
    case Workload::Network:
      return "network";
    case Workload::Disk:
      return "disk";
    case Workload::DiskAndNetwork:
      return "disk-network";
  }
  return "general";
}

std::optional<Workload> workload_from_name(const std::string& name) {
  if (name == "general") return Workload::General;
  if (name == "network") return Workload::Network;
  if (name == "disk") return Workload::Disk;
  if (name == "disk-network") return Workload::DiskAndNetwork;
  return std::nullopt;
}

const PodSpec& validate_pod_spec(const PodSpec& spec) {
  if (!(spec.req_cpu > 0.0)) throw InvalidSpecError("req_cpu");
  if (!(spec.req_mem > 0.0)) throw InvalidSpecError("req_mem");
  if (spec.req_pod < 1) throw InvalidSpecError("req_pod");
  return spec;
}

Allocation make_allocation(std::vector<AllocationItem> items) {
  std::sort(items.begin(), items.end(),
            [](const AllocationItem& a, const AllocationItem& b) { return a.id < b.id; });
  Allocation out;
  for (const auto& it : items) {
    if (it.count <= 0) continue;
    out.entries.push_back({it.id, it.count});
    out.total_pods_allocated += it.pod_capacity * it.count;
    out.hourly_cost += it.spot_price * static_cast<double>(it.count);
  }
  return out;
}

}  // namespace spotopt
