#include "spotopt/gss.hpp"

#include <cmath>
#include <unordered_map>

#include "spotopt/preprocess.hpp"

namespace spotopt::gss {

EfficiencyReport efficiency(const Allocation& allocation,
                            std::span<const EnrichedCandidate> enriched,
                            const PodSpec& spec, double alpha) {
  if (allocation.entries.empty())
    throw Error(ErrorCode::EmptyAllocation, "empty allocation");
  std::unordered_map<std::string, const EnrichedCandidate*> by_id;
  for (const auto& e : enriched) by_id[e.base.id] = &e;

  EfficiencyReport r;
  r.alpha = alpha;
  std::int64_t pods = 0;
  for (const auto& entry : allocation.entries) {
    auto it = by_id.find(entry.id);
    if (it == by_id.end())
      throw Error(ErrorCode::UnknownCandidate, "unknown candidate in allocation: " + entry.id);
    const auto& e = *it->second;
    r.e_perf_cost +=
        e.scaled_benchmark * static_cast<double>(entry.count) / e.base.spot_price;
    pods += e.pod_capacity * entry.count;
  }
  r.e_over_pods = static_cast<double>(spec.req_pod) / static_cast<double>(pods);
  r.e_total = r.e_perf_cost * r.e_over_pods;
  return r;
}

int iteration_bound(double epsilon) {
  return static_cast<int>(std::ceil(std::log(epsilon) / std::log(kGoldenRatio))) + 1;
}

GssResult search(std::span<const EnrichedCandidate> enriched, const PodSpec& spec,
                 const GssConfig& config, const IlpSolver& solver) {
  const auto norm = preprocess::normalizers(enriched);
  GssResult result;
  bool have_best = false;

  auto evaluate = [&](double alpha) {
    const auto problem = ilp::build_problem(enriched, norm, spec, alpha);
    Allocation alloc = solver(problem);
    EfficiencyReport report = efficiency(alloc, enriched, spec, alpha);
    result.evaluations.push_back({alpha, report.e_total});
    if (!have_best || report.e_total > result.best_report.e_total) {
      result.best_allocation = std::move(alloc);
      result.best_report = report;
      have_best = true;
    }
    return report.e_total;
  };

  double lo = config.alpha_lo;
  double hi = config.alpha_hi;

  evaluate(lo);  // pure-cost probe, outside the golden bracket

  double a1 = hi - kGoldenRatio * (hi - lo);
  double a2 = lo + kGoldenRatio * (hi - lo);
  double e1 = evaluate(a1);
  double e2 = evaluate(a2);

  const int contractions = std::max(0, iteration_bound(config.epsilon) - 2);
  for (int i = 0; i < contractions; ++i) {
    if (e1 >= e2) {
      hi = a2;
      a2 = a1;
      e2 = e1;
      a1 = hi - kGoldenRatio * (hi - lo);
      e1 = evaluate(a1);
    } else {
      lo = a1;
      a1 = a2;
      e1 = e2;
      a2 = lo + kGoldenRatio * (hi - lo);
      e2 = evaluate(a2);
    }
  }

  result.iteration_count = static_cast<int>(result.evaluations.size());
  return result;
}

}  // namespace spotopt::gss
