#ifndef SPOTOPT_ILP_HPP
#define SPOTOPT_ILP_HPP

#include <span>
#include <string>
#include <vector>

#include "spotopt/preprocess.hpp"
#include "spotopt/types.hpp"

namespace spotopt::ilp {

struct IlpTerm {
  std::string id;
  double coefficient = 0.0;       // -alpha * perf/perf_min + (1-alpha) * sp/sp_min
  std::int64_t pod_capacity = 0;  // >= 1
  std::int64_t bound = 0;         // T3, >= 1
  double spot_price = 0.0;
};

struct IlpProblem {
  std::vector<IlpTerm> terms;  // sorted ascending by id
  std::int64_t demand = 0;
  double alpha = 0.0;
};

IlpProblem build_problem(std::span<const EnrichedCandidate> enriched,
                         const preprocess::Normalizers& norm, const PodSpec& spec,
                         double alpha);

// Objective value of a count vector given in the problem's term order,
// accumulated from the last term to the first. Both solvers report objectives
// through this function so equal allocations compare bit-equal.
double objective_value(const IlpProblem& problem, std::span<const std::int64_t> counts);
double objective_value(const IlpProblem& problem, const Allocation& allocation);

// Exact minimizer of sum(c_i * x_i) subject to sum(Pod_i * x_i) >= demand,
// 0 <= x_i <= T3_i, x integer. Among objective-optimal solutions the result
// has minimal total allocated pods; remaining ties resolve to the allocation
// whose count vector (ascending id order) is lexicographically greatest,
// i.e. counts go to the smallest ids first.
// Throws InsufficientCapacityError or Error(ProblemTooLarge).
Allocation solve(const IlpProblem& problem);

// Exhaustive-enumeration oracle with the identical tie-break.
// Throws Error(OracleTooLarge) when prod(T3_i + 1) > 10^7.
Allocation brute_force_solve(const IlpProblem& problem);

}  // namespace spotopt::ilp

#endif  // SPOTOPT_ILP_HPP
