// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run via ctest or directly from the build tree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "spotopt/baselines.hpp"
#include "spotopt/gss.hpp"
#include "spotopt/ilp.hpp"
#include "spotopt/ingest.hpp"
#include "spotopt/preprocess.hpp"
#include "spotopt/sim.hpp"

using namespace spotopt;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

std::vector<InstanceCandidate> fixture30() {
  return ingest::load_candidates(test::data_path("fixtures/candidates_30.csv"));
}

std::vector<InstanceCandidate> fixture8() {
  return ingest::load_candidates(test::data_path("fixtures/candidates_8.csv"));
}

// 1. Exact solver equals the brute-force oracle on 500 random problems.
void criterion_ilp_exactness() {
  std::mt19937 rng(618033988);
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 500 && ok; ++round) {
    auto problem = test::random_problem(rng);
    auto fast = ilp::solve(problem);
    auto slow = ilp::brute_force_solve(problem);
    if (ilp::objective_value(problem, fast) != ilp::objective_value(problem, slow) ||
        !test::same_allocation(fast, slow)) {
      ok = false;
      detail = "mismatch at round " + std::to_string(round);
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && secs >= 30.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + " s";
  }
  if (ok) detail = "500 problems, " + std::to_string(secs) + " s";
  report(1, "solve matches brute force on 500 random problems", ok, detail);
}

// 2. Evaluation counts for epsilon 0.1 / 0.01 / 0.001 are 7 / 12 / 17.
void criterion_gss_iterations() {
  PodSpec spec{1, 2, 50, Workload::General};
  auto enriched = preprocess::enrich(fixture8(), spec).candidates;
  bool ok = true;
  std::string detail;
  for (auto [eps, want] : {std::pair{0.1, 7}, {0.01, 12}, {0.001, 17}}) {
    gss::GssConfig cfg;
    cfg.epsilon = eps;
    auto result = gss::search(enriched, spec, cfg);
    detail += (detail.empty() ? "" : ", ") + std::to_string(result.iteration_count);
    if (result.iteration_count != want) ok = false;
  }
  report(2, "ILP evaluation counts are 7/12/17 for eps 0.1/0.01/0.001", ok, detail);
}

struct ScenarioEval {
  PodSpec spec;
  double gss = 0.0;
  double greedy = 0.0;
  double fixed0 = 0.0, fixed05 = 0.0, fixed1 = 0.0;
  bool kubepacs_within_t3 = true;
  bool spotverse_exceeds_t3 = false;
};

std::vector<ScenarioEval> evaluate_grid() {
  auto cands = fixture30();
  std::vector<ScenarioEval> out;
  for (const auto& spec : sim::scenario_grid()) {
    ScenarioEval ev;
    ev.spec = spec;
    auto enriched = preprocess::enrich(cands, spec).candidates;
    auto norm = preprocess::normalizers(enriched);

    auto result = gss::search(enriched, spec);
    ev.gss = result.best_report.e_total;
    for (const auto& e : result.best_allocation.entries)
      for (const auto& c : cands)
        if (c.id == e.id && e.count > c.t3) ev.kubepacs_within_t3 = false;

    auto greedy_alloc = baselines::greedy(enriched, spec);
    ev.greedy = gss::efficiency(greedy_alloc, enriched, spec, 0.0).e_total;

    auto at = [&](double alpha) {
      auto alloc = ilp::solve(ilp::build_problem(enriched, norm, spec, alpha));
      return gss::efficiency(alloc, enriched, spec, alpha).e_total;
    };
    ev.fixed0 = at(0.0);
    ev.fixed05 = at(0.5);
    ev.fixed1 = at(1.0);

    auto sv = baselines::spotverse_node(cands, spec);
    for (const auto& e : sv.entries)
      for (const auto& c : cands)
        if (c.id == e.id && e.count > c.t3) ev.spotverse_exceeds_t3 = true;
    out.push_back(ev);
  }
  return out;
}

// 3. GSS dominates fixed alpha in {0, 0.5, 1} on every scenario.
void criterion_fixed_alpha(const std::vector<ScenarioEval>& grid) {
  bool ok = true;
  bool strict = false;
  for (const auto& ev : grid) {
    if (ev.gss < ev.fixed0 || ev.gss < ev.fixed05 || ev.gss < ev.fixed1) ok = false;
    if (ev.gss > ev.fixed0 || ev.gss > ev.fixed05 || ev.gss > ev.fixed1) strict = true;
  }
  report(3, "search e_total >= fixed alpha {0, 0.5, 1} on all 20 scenarios", ok && strict,
         strict ? "" : "never strictly better");
}

// 4. GSS dominates greedy everywhere; mean relative improvement positive.
void criterion_greedy(const std::vector<ScenarioEval>& grid) {
  bool ok = true;
  double mean = 0.0;
  for (const auto& ev : grid) {
    if (ev.gss < ev.greedy) ok = false;
    mean += (ev.gss - ev.greedy) / ev.greedy;
  }
  mean /= static_cast<double>(grid.size());
  std::ostringstream detail;
  detail << "mean improvement " << mean * 100.0 << "%";
  report(4, "search e_total >= greedy on all 20 scenarios, mean gain > 0", ok && mean > 0.0,
         detail.str());
}

// 5. KubePACS stays within T3; SpotVerse-Node breaches it somewhere.
void criterion_t3_safety(const std::vector<ScenarioEval>& grid) {
  bool kubepacs_ok = true;
  bool spotverse_breaches = false;
  for (const auto& ev : grid) {
    kubepacs_ok = kubepacs_ok && ev.kubepacs_within_t3;
    spotverse_breaches = spotverse_breaches || ev.spotverse_exceeds_t3;
  }
  report(5, "kubepacs never exceeds t3; spotverse-node does", kubepacs_ok && spotverse_breaches);
}

// 6. Workload scaling worked example.
void criterion_scaling() {
  InstanceCandidate c = test::mk("n/x/a", 4, 8, 0.1, 0.23, 10000, 5);
  c.network_optimized = true;
  c.base_ondemand_price = 0.17;
  const double scaled = preprocess::scale_benchmark(c, Workload::Network);
  const double want = 10000.0 * 0.23 / 0.17;
  bool ok = std::abs(scaled - want) / want <= 1e-12 &&
            preprocess::scale_benchmark(c, Workload::General) == 10000.0;
  report(6, "benchmark scales by 0.23/0.17 under network preference only", ok);
}

// 7. Interrupting the chosen top candidate: excluded next snapshot, coverage
// kept, recovery in one snapshot, eligible again after the ttl.
void criterion_recovery() {
  auto cands = fixture8();
  PodSpec spec{1, 2, 50, Workload::General};
  std::vector<MarketSnapshot> trace;
  for (std::int64_t t : {0, 100, 400}) trace.push_back({t, cands});

  // find the top pick at the first snapshot, then interrupt it
  auto enriched = preprocess::enrich(cands, spec).candidates;
  auto first = gss::search(enriched, spec);
  const std::string top = first.best_allocation.entries.front().id;
  std::vector<InterruptEvent> events = {{50, top}};

  auto rep = sim::replay(trace, events, spec, {sim::kStrategyKubePacs});
  auto contains = [&](std::size_t idx) {
    if (!rep.records[idx].allocation) return false;
    for (const auto& e : rep.records[idx].allocation->entries)
      if (e.id == top) return true;
    return false;
  };
  bool ok = rep.records.size() == 3;
  ok = ok && contains(0);
  ok = ok && !contains(1) && rep.records[1].covers;       // excluded but still covered
  ok = ok && contains(2);                                 // ttl 180 lapsed by t=400
  ok = ok && rep.recoveries.size() == 1 && rep.recoveries[0].latency_snapshots == 1;
  report(7, "interrupted top pick: excluded, covered, 1-snapshot recovery, ttl return", ok);
}

// 8. Fulfillment equals min(50, t3) across a t3 sweep.
void criterion_fulfillment() {
  bool ok = true;
  std::int64_t prev = -1;
  for (std::int64_t t3 : {5, 10, 20, 35, 50}) {
    MarketSnapshot snap;
    snap.timestamp = 0;
    snap.candidates = {test::mk("a/x/a", 4, 8, 0.1, 0.2, 40000, t3)};
    auto full = sim::fulfill(make_allocation({{"a/x/a", 50, 4, 0.1}}), snap);
    const std::int64_t granted = full[0].granted;
    if (granted != std::min<std::int64_t>(50, t3) || granted < prev) ok = false;
    prev = granted;
  }
  report(8, "fulfillment equals min(50, t3) and is monotone in t3", ok);
}

// 9. Metric identities on 1000 random allocations.
void criterion_metric_identities() {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<std::int64_t> count_dist(1, 20);
  std::uniform_int_distribution<std::int64_t> pod_dist(1, 8);
  std::uniform_real_distribution<double> sp_dist(0.01, 1.0);
  std::uniform_real_distribution<double> bs_dist(1e3, 5e4);

  bool ok = true;
  for (int round = 0; round < 1000 && ok; ++round) {
    const int n = n_dist(rng);
    std::vector<EnrichedCandidate> enriched;
    std::vector<AllocationItem> items;
    std::int64_t pods = 0;
    for (int i = 0; i < n; ++i) {
      EnrichedCandidate e;
      e.base = test::mk("c" + std::to_string(i), 8, 16, sp_dist(rng), 1.0, bs_dist(rng), 50);
      e.pod_capacity = pod_dist(rng);
      e.scaled_benchmark = e.base.benchmark;
      e.perf = e.scaled_benchmark * static_cast<double>(e.pod_capacity);
      const std::int64_t count = count_dist(rng);
      pods += count * e.pod_capacity;
      items.push_back({e.base.id, count, e.pod_capacity, e.base.spot_price});
      enriched.push_back(e);
    }
    std::uniform_int_distribution<std::int64_t> req_dist(1, pods);
    PodSpec spec{1, 2, req_dist(rng), Workload::General};
    auto r = gss::efficiency(make_allocation(items), enriched, spec, 0.5);
    if (std::abs(r.e_total - r.e_perf_cost * r.e_over_pods) >
        1e-12 * std::abs(r.e_total))
      ok = false;
    if (pods >= spec.req_pod && r.e_over_pods > 1.0) ok = false;
  }
  report(9, "e_total identity and coverage bound hold on 1000 random allocations", ok);
}

// 10. Two CLI compare runs produce byte-identical reports.
void criterion_determinism() {
  const std::string cli = SPOTOPT_CLI_PATH;
  const std::string fixture = test::data_path("fixtures/candidates_30.csv");
  auto run = [&](const std::string& json, const std::string& csv) {
    const std::string cmd = cli + " compare --candidates " + fixture + " --out-json " + json +
                            " --out-csv " + csv + " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool ok = run("/tmp/spotopt_acc_1.json", "/tmp/spotopt_acc_1.csv") &&
            run("/tmp/spotopt_acc_2.json", "/tmp/spotopt_acc_2.csv");
  if (ok) {
    const auto j1 = slurp("/tmp/spotopt_acc_1.json");
    ok = !j1.empty() && j1 == slurp("/tmp/spotopt_acc_2.json") &&
         slurp("/tmp/spotopt_acc_1.csv") == slurp("/tmp/spotopt_acc_2.csv");
  }
  report(10, "two compare runs emit byte-identical reports", ok);
}

}  // namespace

int main() {
  criterion_ilp_exactness();
  criterion_gss_iterations();
  auto grid = evaluate_grid();
  criterion_fixed_alpha(grid);
  criterion_greedy(grid);
  criterion_t3_safety(grid);
  criterion_scaling();
  criterion_recovery();
  criterion_fulfillment();
  criterion_metric_identities();
  criterion_determinism();

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
