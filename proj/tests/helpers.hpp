#ifndef SPOTOPT_TEST_HELPERS_HPP
#define SPOTOPT_TEST_HELPERS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spotopt/ilp.hpp"
#include "spotopt/preprocess.hpp"
#include "spotopt/types.hpp"

namespace spotopt::test {

inline InstanceCandidate mk(std::string id, double cpu, double mem, double spot, double od,
                            double benchmark, std::int64_t t3) {
  InstanceCandidate c;
  c.id = id;
  auto slash = id.find('/');
  c.instance_type = slash == std::string::npos ? id : id.substr(0, slash);
  c.region = "us-east-1";
  c.az = "a";
  c.cpu = cpu;
  c.mem = mem;
  c.spot_price = spot;
  c.ondemand_price = od;
  c.benchmark = benchmark;
  c.t3 = t3;
  return c;
}

inline std::vector<EnrichedCandidate> enriched_of(const std::vector<InstanceCandidate>& cands,
                                                  const PodSpec& spec) {
  return preprocess::enrich(cands, spec).candidates;
}

// Random bounded-knapsack problem inside the brute-force oracle's comfort
// zone: N <= 6 terms, T3 <= 4, demand <= 30.
inline ilp::IlpProblem random_problem(std::mt19937& rng) {
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<std::int64_t> pod_dist(1, 5);
  std::uniform_int_distribution<std::int64_t> t3_dist(1, 4);
  std::uniform_real_distribution<double> sp_dist(0.01, 1.0);
  std::uniform_real_distribution<double> bs_dist(1e3, 5e4);
  std::uniform_real_distribution<double> alpha_dist(0.0, 1.0);

  const int n = n_dist(rng);
  std::vector<EnrichedCandidate> enriched;
  std::int64_t capacity = 0;
  for (int i = 0; i < n; ++i) {
    EnrichedCandidate e;
    e.base = mk("c" + std::to_string(i), 1, 1, sp_dist(rng), 1.0, bs_dist(rng), t3_dist(rng));
    e.pod_capacity = pod_dist(rng);
    e.scaled_benchmark = e.base.benchmark;
    e.perf = e.scaled_benchmark * static_cast<double>(e.pod_capacity);
    capacity += e.pod_capacity * e.base.t3;
    enriched.push_back(e);
  }
  auto norm = preprocess::normalizers(enriched);
  std::uniform_int_distribution<std::int64_t> demand_dist(1, std::min<std::int64_t>(30, capacity));
  PodSpec spec{1.0, 1.0, demand_dist(rng), Workload::General};
  return ilp::build_problem(enriched, norm, spec, alpha_dist(rng));
}

inline bool same_allocation(const Allocation& a, const Allocation& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].id != b.entries[i].id || a.entries[i].count != b.entries[i].count)
      return false;
  return true;
}

inline std::string data_path(const std::string& rel) {
  return std::string(SPOTOPT_DATA_DIR) + "/" + rel;
}

}  // namespace spotopt::test

#endif  // SPOTOPT_TEST_HELPERS_HPP
