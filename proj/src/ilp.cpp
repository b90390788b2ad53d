#include "spotopt/ilp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace spotopt::ilp {

namespace {

constexpr std::int64_t kMaxResidualDemand = 1'000'000;
constexpr std::int64_t kMaxDpStates = 50'000'000;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Val {
  double cost = kInf;
  std::int64_t pods = 0;
};

bool better(const Val& a, const Val& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.pods < b.pods;
}

Allocation to_allocation(const IlpProblem& problem, std::span<const std::int64_t> counts) {
  std::vector<AllocationItem> items;
  items.reserve(problem.terms.size());
  for (std::size_t i = 0; i < problem.terms.size(); ++i) {
    const auto& t = problem.terms[i];
    items.push_back({t.id, counts[i], t.pod_capacity, t.spot_price});
  }
  return make_allocation(std::move(items));
}

void check_feasible(const IlpProblem& problem) {
  std::int64_t cap = 0;
  for (const auto& t : problem.terms) cap += t.pod_capacity * t.bound;
  if (cap < problem.demand)
    throw InsufficientCapacityError(problem.demand - cap,
                                    "total capacity " + std::to_string(cap) + " of " +
                                        std::to_string(problem.demand) + " pods");
}

}  // namespace

IlpProblem build_problem(std::span<const EnrichedCandidate> enriched,
                         const preprocess::Normalizers& norm, const PodSpec& spec,
                         double alpha) {
  IlpProblem p;
  p.alpha = alpha;
  p.demand = spec.req_pod;
  p.terms.reserve(enriched.size());
  for (const auto& e : enriched) {
    IlpTerm t;
    t.id = e.base.id;
    t.coefficient = -alpha * (e.perf / norm.perf_min) +
                    (1.0 - alpha) * (e.base.spot_price / norm.sp_min);
    t.pod_capacity = e.pod_capacity;
    t.bound = e.base.t3;
    t.spot_price = e.base.spot_price;
    p.terms.push_back(std::move(t));
  }
  std::sort(p.terms.begin(), p.terms.end(),
            [](const IlpTerm& a, const IlpTerm& b) { return a.id < b.id; });
  return p;
}

double objective_value(const IlpProblem& problem, std::span<const std::int64_t> counts) {
  double obj = 0.0;
  for (std::size_t i = problem.terms.size(); i-- > 0;)
    obj = static_cast<double>(counts[i]) * problem.terms[i].coefficient + obj;
  return obj;
}

double objective_value(const IlpProblem& problem, const Allocation& allocation) {
  std::unordered_map<std::string, std::int64_t> by_id;
  for (const auto& e : allocation.entries) by_id[e.id] = e.count;
  std::vector<std::int64_t> counts(problem.terms.size(), 0);
  for (std::size_t i = 0; i < problem.terms.size(); ++i) {
    auto it = by_id.find(problem.terms[i].id);
    if (it != by_id.end()) counts[i] = it->second;
  }
  return objective_value(problem, counts);
}

Allocation solve(const IlpProblem& problem) {
  check_feasible(problem);
  const std::size_t n = problem.terms.size();
  std::vector<std::int64_t> counts(n, 0);

  // Every unit of a negative-coefficient term strictly improves the objective
  // and relaxes coverage, so those terms saturate at their bound.
  std::int64_t covered = 0;
  std::vector<std::size_t> open;  // indices with coefficient >= 0, id order
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = problem.terms[i];
    if (t.coefficient < 0.0) {
      counts[i] = t.bound;
      covered += t.pod_capacity * t.bound;
    } else {
      open.push_back(i);
    }
  }

  const std::int64_t residual = std::max<std::int64_t>(0, problem.demand - covered);
  if (residual > kMaxResidualDemand)
    throw Error(ErrorCode::ProblemTooLarge,
                "residual demand " + std::to_string(residual) + " exceeds the solver cap");

  if (residual == 0) return to_allocation(problem, counts);

  const std::size_t m = open.size();
  if (static_cast<std::int64_t>(m + 1) * (residual + 1) > kMaxDpStates)
    throw Error(ErrorCode::ProblemTooLarge, "DP state space exceeds the solver cap");

  // Suffix tables over covered demand capped at the residual: G[j][d] is the
  // best (cost, pods) completion using open terms j.. when d pods are already
  // covered. Costs accumulate last-term-first, matching objective_value.
  std::vector<std::vector<Val>> G(m + 1, std::vector<Val>(residual + 1));
  for (std::size_t j = 0; j <= m; ++j) G[j][residual] = {0.0, 0};
  for (std::int64_t d = 0; d < residual; ++d) G[m][d] = {kInf, 0};

  for (std::size_t j = m; j-- > 0;) {
    const auto& t = problem.terms[open[j]];
    for (std::int64_t d = 0; d < residual; ++d) {
      const std::int64_t need = residual - d;
      const std::int64_t kmax =
          std::min(t.bound, (need + t.pod_capacity - 1) / t.pod_capacity);
      Val best{kInf, 0};
      for (std::int64_t k = 0; k <= kmax; ++k) {
        const std::int64_t d2 = std::min(residual, d + k * t.pod_capacity);
        const Val& next = G[j + 1][d2];
        if (next.cost == kInf) continue;
        Val cand{static_cast<double>(k) * t.coefficient + next.cost,
                 k * t.pod_capacity + next.pods};
        if (better(cand, best)) best = cand;
      }
      G[j][d] = best;
    }
  }

  // Feasibility was checked up front, so the start state is reachable.
  // Reconstruct by taking the largest workable count at each term in id
  // order, which yields the lexicographically greatest optimal vector.
  std::int64_t d = 0;
  for (std::size_t j = 0; j < m && d < residual; ++j) {
    const auto& t = problem.terms[open[j]];
    const Val target = G[j][d];
    const std::int64_t need = residual - d;
    const std::int64_t kmax =
        std::min(t.bound, (need + t.pod_capacity - 1) / t.pod_capacity);
    for (std::int64_t k = kmax; k >= 0; --k) {
      const std::int64_t d2 = std::min(residual, d + k * t.pod_capacity);
      const Val& next = G[j + 1][d2];
      if (next.cost == kInf) continue;
      if (static_cast<double>(k) * t.coefficient + next.cost == target.cost &&
          k * t.pod_capacity + next.pods == target.pods) {
        counts[open[j]] = k;
        d = d2;
        break;
      }
    }
  }

  return to_allocation(problem, counts);
}

Allocation brute_force_solve(const IlpProblem& problem) {
  check_feasible(problem);
  const std::size_t n = problem.terms.size();
  double combos = 1.0;
  for (const auto& t : problem.terms) combos *= static_cast<double>(t.bound + 1);
  if (combos > 1e7)
    throw Error(ErrorCode::OracleTooLarge, "enumeration space exceeds 10^7 vectors");

  std::vector<std::int64_t> x(n, 0);
  std::vector<std::int64_t> best;
  double best_obj = kInf;
  std::int64_t best_pods = 0;

  while (true) {
    std::int64_t pods = 0;
    for (std::size_t i = 0; i < n; ++i) pods += problem.terms[i].pod_capacity * x[i];
    if (pods >= problem.demand) {
      const double obj = objective_value(problem, x);
      bool take = best.empty();
      if (!take && obj != best_obj) take = obj < best_obj;
      if (!take && obj == best_obj && pods != best_pods) take = pods < best_pods;
      if (!take && obj == best_obj && pods == best_pods)
        take = std::lexicographical_compare(best.begin(), best.end(), x.begin(), x.end());
      if (take) {
        best = x;
        best_obj = obj;
        best_pods = pods;
      }
    }
    // odometer over 0..bound per term
    std::size_t i = n;
    while (i-- > 0) {
      if (x[i] < problem.terms[i].bound) {
        ++x[i];
        break;
      }
      x[i] = 0;
      if (i == 0) return to_allocation(problem, best);
    }
    if (n == 0) break;
  }
  return to_allocation(problem, best);
}

}  // namespace spotopt::ilp
