#ifndef SPOTOPT_GSS_HPP
#define SPOTOPT_GSS_HPP

#include <functional>
#include <span>
#include <vector>

#include "spotopt/ilp.hpp"
#include "spotopt/types.hpp"

namespace spotopt::gss {

inline constexpr double kGoldenRatio = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct GssConfig {
  double epsilon = 0.01;
  double alpha_lo = 0.0;
  double alpha_hi = 1.0;
};

struct GssEvaluation {
  double alpha = 0.0;
  double e_total = 0.0;
};

struct GssResult {
  Allocation best_allocation;
  EfficiencyReport best_report;
  std::vector<GssEvaluation> evaluations;  // in evaluation order
  int iteration_count = 0;                 // == evaluations.size()
};

// E_PerfCost = sum(scaled_benchmark_i * x_i / sp_i), E_OverPods =
// req_pod / sum(Pod_i * x_i), E_Total = product. Throws Error(EmptyAllocation).
EfficiencyReport efficiency(const Allocation& allocation,
                            std::span<const EnrichedCandidate> enriched,
                            const PodSpec& spec, double alpha);

// Evaluation budget for tolerance epsilon on a unit interval:
// ceil(log(epsilon) / log(phi)) + 1.
int iteration_bound(double epsilon);

using IlpSolver = std::function<Allocation(const ilp::IlpProblem&)>;

// Golden section search over alpha in [lo, hi] maximizing E_Total, with one
// extra probe at alpha = lo before the bracket starts so the result always
// dominates the pure-cost answer. The landscape is step-like rather than
// strictly unimodal, so the result is the running best across every evaluated
// point, not the final bracket midpoint. Total ILP evaluations:
// iteration_bound(epsilon) + 1.
GssResult search(std::span<const EnrichedCandidate> enriched, const PodSpec& spec,
                 const GssConfig& config = {}, const IlpSolver& solver = ilp::solve);

}  // namespace spotopt::gss

#endif  // SPOTOPT_GSS_HPP
