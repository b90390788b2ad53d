#include "spotopt/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "spotopt/format.hpp"
#include "spotopt/ingest.hpp"
#include "spotopt/preprocess.hpp"

namespace spotopt::report {

using nlohmann::json;

namespace {

std::vector<InstanceCandidate> apply_excludes(const std::vector<InstanceCandidate>& candidates,
                                              const std::vector<std::string>& exclude) {
  if (exclude.empty()) return candidates;
  std::unordered_set<std::string> drop(exclude.begin(), exclude.end());
  std::vector<InstanceCandidate> out;
  for (const auto& c : candidates)
    if (!drop.count(c.id)) out.push_back(c);
  return out;
}

json allocation_json(const Allocation& a) {
  json entries = json::array();
  for (const auto& e : a.entries) entries.push_back({{"id", e.id}, {"count", e.count}});
  return {{"entries", entries},
          {"total_pods", a.total_pods_allocated},
          {"hourly_cost", a.hourly_cost}};
}

json efficiency_json(const EfficiencyReport& r) {
  return {{"e_perf_cost", r.e_perf_cost},
          {"e_over_pods", r.e_over_pods},
          {"e_total", r.e_total},
          {"alpha", r.alpha}};
}

// Efficiency of an allocation over raw candidates; baselines may pick
// offerings the enrichment filter would drop.
EfficiencyReport raw_efficiency(const Allocation& alloc,
                                const std::vector<InstanceCandidate>& candidates,
                                const PodSpec& spec) {
  std::unordered_map<std::string, const InstanceCandidate*> by_id;
  for (const auto& c : candidates) by_id[c.id] = &c;
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

bool exceeds_t3(const Allocation& alloc, const std::vector<InstanceCandidate>& candidates) {
  std::unordered_map<std::string, std::int64_t> t3;
  for (const auto& c : candidates) t3[c.id] = c.t3;
  for (const auto& e : alloc.entries) {
    auto it = t3.find(e.id);
    if (it != t3.end() && e.count > it->second) return true;
  }
  return false;
}

std::int64_t max_count(const Allocation& alloc) {
  std::int64_t m = 0;
  for (const auto& e : alloc.entries) m = std::max(m, e.count);
  return m;
}

}  // namespace

std::string run_optimize(const std::vector<InstanceCandidate>& candidates,
                         const RunOptions& opts) {
  validate_pod_spec(opts.spec);
  const auto pool = apply_excludes(candidates, opts.exclude_ids);
  auto enriched = preprocess::enrich(pool, opts.spec);
  auto result = gss::search(enriched.candidates, opts.spec, opts.gss);

  json evals = json::array();
  for (const auto& ev : result.evaluations)
    evals.push_back({{"alpha", ev.alpha}, {"e_total", ev.e_total}});

  json out = {{"schema_version", kSchemaVersion},
              {"alpha", result.best_report.alpha},
              {"iterations", result.iteration_count},
              {"allocation", allocation_json(result.best_allocation)},
              {"efficiency", efficiency_json(result.best_report)},
              {"evaluations", evals},
              {"warnings", enriched.warnings}};
  return out.dump(2) + "\n";
}

std::string run_sweep_alpha(const std::vector<InstanceCandidate>& candidates,
                            const RunOptions& opts, double step) {
  validate_pod_spec(opts.spec);
  if (!(step > 0.0) || step > 1.0)
    throw Error(ErrorCode::InvalidSpec, "sweep step must be in (0, 1]");
  const auto pool = apply_excludes(candidates, opts.exclude_ids);
  auto enriched = preprocess::enrich(pool, opts.spec);
  const auto norm = preprocess::normalizers(enriched.candidates);
  const auto gss_result = gss::search(enriched.candidates, opts.spec, opts.gss);
  const double gss_alpha = gss_result.best_report.alpha;

  const int n = static_cast<int>(std::llround(1.0 / step));
  int pick = 0;
  double pick_dist = 2.0;
  std::vector<std::array<double, 4>> rows;  // alpha, e_total, cost, pods
  for (int i = 0; i <= n; ++i) {
    const double alpha = std::min(1.0, static_cast<double>(i) * step);
    const auto problem = ilp::build_problem(enriched.candidates, norm, opts.spec, alpha);
    const auto alloc = ilp::solve(problem);
    const auto rep = gss::efficiency(alloc, enriched.candidates, opts.spec, alpha);
    rows.push_back({alpha, rep.e_total, alloc.hourly_cost,
                    static_cast<double>(alloc.total_pods_allocated)});
    const double dist = std::abs(alpha - gss_alpha);
    if (dist < pick_dist) {
      pick_dist = dist;
      pick = i;
    }
  }

  std::ostringstream out;
  out << "alpha,e_total,cost,pods,gss_pick\n";
  for (int i = 0; i <= n; ++i)
    out << format_double(rows[i][0]) << ',' << format_double(rows[i][1]) << ','
        << format_double(rows[i][2]) << ',' << static_cast<std::int64_t>(rows[i][3]) << ','
        << (i == pick ? 1 : 0) << "\n";
  return out.str();
}

CompareOutput run_compare(const std::vector<InstanceCandidate>& candidates,
                          const RunOptions& opts) {
  const auto pool = apply_excludes(candidates, opts.exclude_ids);
  const char* strategy_names[] = {sim::kStrategyKubePacs, sim::kStrategyGreedy,
                                  sim::kStrategySpotverseNode, sim::kStrategySpotversePod};

  json scenarios = json::array();
  std::ostringstream csv;
  csv << "req_pod,req_cpu,req_mem,strategy,e_total,normalized,max_count_per_type,"
         "exceeds_t3,hourly_cost,total_pods,error\n";

  for (auto spec : sim::scenario_grid()) {
    spec.workload = opts.spec.workload;
    json strategies = json::object();
    double kubepacs_e_total = 0.0;

    struct Cell {
      std::string error;
      Allocation alloc;
      EfficiencyReport rep;
      bool ok = false;
    };
    std::vector<Cell> cells(4);
    for (int s = 0; s < 4; ++s) {
      try {
        Allocation alloc;
        if (s == 0 || s == 1) {
          auto enriched = preprocess::enrich(pool, spec);
          alloc = (s == 0)
                      ? gss::search(enriched.candidates, spec, opts.gss).best_allocation
                      : baselines::greedy(enriched.candidates, spec);
        } else if (s == 2) {
          alloc = baselines::spotverse_node(pool, spec, opts.baseline);
        } else {
          alloc = baselines::spotverse_pod(pool, spec, opts.baseline);
        }
        cells[s].rep = raw_efficiency(alloc, pool, spec);
        cells[s].alloc = std::move(alloc);
        cells[s].ok = true;
      } catch (const Error& e) {
        cells[s].error = e.what();
      }
    }
    if (cells[0].ok) kubepacs_e_total = cells[0].rep.e_total;

    for (int s = 0; s < 4; ++s) {
      const auto& cell = cells[s];
      json entry;
      double normalized = 0.0;
      if (cell.ok) {
        normalized = kubepacs_e_total > 0.0 ? cell.rep.e_total / kubepacs_e_total : 0.0;
        entry = {{"e_total", cell.rep.e_total},
                 {"normalized", normalized},
                 {"max_count_per_type", max_count(cell.alloc)},
                 {"exceeds_t3", exceeds_t3(cell.alloc, pool)},
                 {"hourly_cost", cell.alloc.hourly_cost},
                 {"total_pods", cell.alloc.total_pods_allocated},
                 {"allocation", allocation_json(cell.alloc)}};
      } else {
        entry = {{"error", cell.error}};
      }
      strategies[strategy_names[s]] = entry;

      csv << spec.req_pod << ',' << format_double(spec.req_cpu) << ','
          << format_double(spec.req_mem) << ',' << strategy_names[s] << ',';
      if (cell.ok)
        csv << format_double(cell.rep.e_total) << ',' << format_double(normalized) << ','
            << max_count(cell.alloc) << ',' << (exceeds_t3(cell.alloc, pool) ? 1 : 0) << ','
            << format_double(cell.alloc.hourly_cost) << ',' << cell.alloc.total_pods_allocated
            << ',';
      else
        csv << ",,,,,," << cell.error;
      csv << "\n";
    }

    scenarios.push_back({{"req_pod", spec.req_pod},
                         {"req_cpu", spec.req_cpu},
                         {"req_mem", spec.req_mem},
                         {"strategies", strategies}});
  }

  json out = {{"schema_version", kSchemaVersion},
              {"workload", workload_name(opts.spec.workload)},
              {"scenarios", scenarios}};
  return {out.dump(2) + "\n", csv.str()};
}

CompareOutput run_simulate(const std::string& trace_dir, const std::string& events_path,
                           const RunOptions& opts) {
  validate_pod_spec(opts.spec);
  auto trace = ingest::load_trace(trace_dir);
  if (trace.empty()) throw Error(ErrorCode::IoError, "trace directory holds no snapshots");
  std::vector<InterruptEvent> events;
  if (!events_path.empty()) events = ingest::load_events(events_path);

  sim::ReplayConfig config;
  config.gss = opts.gss;
  config.baseline = opts.baseline;
  config.cache_ttl_seconds = opts.cache_ttl_seconds;
  const std::vector<std::string> strategies = {sim::kStrategyKubePacs, sim::kStrategyGreedy,
                                               sim::kStrategySpotverseNode,
                                               sim::kStrategySpotversePod};
  const auto report = sim::replay(trace, events, opts.spec, strategies, config);

  json records = json::array();
  std::ostringstream csv;
  csv << "timestamp,strategy,covers,requested_nodes,fulfilled_nodes,max_count_per_type,"
         "e_total,hourly_cost,error\n";
  for (const auto& r : report.records) {
    json rec = {{"timestamp", r.timestamp},
                {"strategy", r.strategy},
                {"covers", r.covers},
                {"requested_nodes", r.requested_nodes},
                {"fulfilled_nodes", r.fulfilled_nodes},
                {"max_count_per_type", r.max_count_per_type}};
    if (r.allocation) rec["allocation"] = allocation_json(*r.allocation);
    if (r.report) rec["efficiency"] = efficiency_json(*r.report);
    if (!r.error.empty()) rec["error"] = r.error;
    records.push_back(rec);

    csv << r.timestamp << ',' << r.strategy << ',' << (r.covers ? 1 : 0) << ','
        << r.requested_nodes << ',' << r.fulfilled_nodes << ',' << r.max_count_per_type << ',';
    if (r.report) csv << format_double(r.report->e_total);
    csv << ',';
    if (r.allocation) csv << format_double(r.allocation->hourly_cost);
    csv << ',' << r.error << "\n";
  }

  json recoveries = json::array();
  for (const auto& rec : report.recoveries)
    recoveries.push_back({{"strategy", rec.strategy},
                          {"event_time", rec.event_time},
                          {"candidate_id", rec.candidate_id},
                          {"latency_snapshots", rec.latency_snapshots}});

  json out = {{"schema_version", kSchemaVersion},
              {"records", records},
              {"recoveries", recoveries}};
  return {out.dump(2) + "\n", csv.str()};
}

}  // namespace spotopt::report
