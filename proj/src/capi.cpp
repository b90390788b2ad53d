#include "spotopt.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "spotopt/ingest.hpp"
#include "spotopt/report.hpp"

struct spotopt_engine {
  std::vector<spotopt::InstanceCandidate> candidates;
};

namespace {

thread_local std::string g_last_error;

spotopt_status map_error(const spotopt::Error& e) {
  using spotopt::ErrorCode;
  switch (e.code()) {
    case ErrorCode::InvalidSpec:
      return SPOTOPT_ERR_INVALID_SPEC;
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateId:
    case ErrorCode::NonMonotonicTimestamps:
      return SPOTOPT_ERR_PARSE;
    case ErrorCode::InsufficientCapacity:
    case ErrorCode::NoFeasibleCandidates:
    case ErrorCode::NoCandidatesPassFilter:
    case ErrorCode::EmptyCandidateSet:
      return SPOTOPT_ERR_INSUFFICIENT_CAPACITY;
    case ErrorCode::ProblemTooLarge:
    case ErrorCode::OracleTooLarge:
      return SPOTOPT_ERR_TOO_LARGE;
    case ErrorCode::IoError:
      return SPOTOPT_ERR_IO;
    default:
      return SPOTOPT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
spotopt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const spotopt::Error& e) {
    g_last_error = e.what();
    return map_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPOTOPT_ERR_INTERNAL;
  }
}

spotopt_status build_options(const spotopt_request* request, spotopt::report::RunOptions& opts) {
  if (!request) {
    g_last_error = "request must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  opts.spec.req_cpu = request->req_cpu;
  opts.spec.req_mem = request->req_mem;
  opts.spec.req_pod = request->req_pod;
  switch (request->workload) {
    case SPOTOPT_WORKLOAD_GENERAL:
      opts.spec.workload = spotopt::Workload::General;
      break;
    case SPOTOPT_WORKLOAD_NETWORK:
      opts.spec.workload = spotopt::Workload::Network;
      break;
    case SPOTOPT_WORKLOAD_DISK:
      opts.spec.workload = spotopt::Workload::Disk;
      break;
    case SPOTOPT_WORKLOAD_DISK_NETWORK:
      opts.spec.workload = spotopt::Workload::DiskAndNetwork;
      break;
    default:
      g_last_error = "unknown workload value";
      return SPOTOPT_ERR_INVALID_ARG;
  }
  if (request->epsilon > 0.0) opts.gss.epsilon = request->epsilon;
  if (request->spotverse_threshold > 0.0)
    opts.baseline.spotverse_threshold = request->spotverse_threshold;
  if (request->cache_ttl_seconds > 0) opts.cache_ttl_seconds = request->cache_ttl_seconds;
  for (size_t i = 0; i < request->n_exclude_ids; ++i)
    if (request->exclude_ids && request->exclude_ids[i])
      opts.exclude_ids.emplace_back(request->exclude_ids[i]);
  return SPOTOPT_OK;
}

}  // namespace

extern "C" {

int spotopt_abi_version(void) { return SPOTOPT_ABI_VERSION; }

const char* spotopt_last_error(void) { return g_last_error.c_str(); }

spotopt_status spotopt_engine_create_from_csv(const char* csv_path, spotopt_engine** out) {
  if (!csv_path || !out) {
    g_last_error = "csv_path and out must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  *out = nullptr;
  return guarded([&] {
    auto engine = std::make_unique<spotopt_engine>();
    engine->candidates = spotopt::ingest::load_candidates(csv_path);
    *out = engine.release();
    return SPOTOPT_OK;
  });
}

void spotopt_engine_destroy(spotopt_engine* engine) { delete engine; }

size_t spotopt_engine_candidate_count(const spotopt_engine* engine) {
  return engine ? engine->candidates.size() : 0;
}

spotopt_status spotopt_optimize(const spotopt_engine* engine, const spotopt_request* request,
                                char** json_out) {
  if (!engine || !json_out) {
    g_last_error = "engine and json_out must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  spotopt::report::RunOptions opts;
  if (auto st = build_options(request, opts); st != SPOTOPT_OK) return st;
  return guarded([&] {
    *json_out = dup_string(spotopt::report::run_optimize(engine->candidates, opts));
    return SPOTOPT_OK;
  });
}

spotopt_status spotopt_sweep_alpha(const spotopt_engine* engine, const spotopt_request* request,
                                   double step, char** csv_out) {
  if (!engine || !csv_out) {
    g_last_error = "engine and csv_out must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  spotopt::report::RunOptions opts;
  if (auto st = build_options(request, opts); st != SPOTOPT_OK) return st;
  return guarded([&] {
    *csv_out = dup_string(spotopt::report::run_sweep_alpha(engine->candidates, opts, step));
    return SPOTOPT_OK;
  });
}

spotopt_status spotopt_compare(const spotopt_engine* engine, const spotopt_request* request,
                               char** json_out, char** csv_out) {
  if (!engine || (!json_out && !csv_out)) {
    g_last_error = "engine and at least one output must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  spotopt::report::RunOptions opts;
  if (auto st = build_options(request, opts); st != SPOTOPT_OK) return st;
  return guarded([&] {
    auto out = spotopt::report::run_compare(engine->candidates, opts);
    if (json_out) *json_out = dup_string(out.json);
    if (csv_out) *csv_out = dup_string(out.csv);
    return SPOTOPT_OK;
  });
}

spotopt_status spotopt_simulate(const char* trace_dir, const char* events_path,
                                const spotopt_request* request, char** json_out,
                                char** csv_out) {
  if (!trace_dir || (!json_out && !csv_out)) {
    g_last_error = "trace_dir and at least one output must not be null";
    return SPOTOPT_ERR_INVALID_ARG;
  }
  spotopt::report::RunOptions opts;
  if (auto st = build_options(request, opts); st != SPOTOPT_OK) return st;
  return guarded([&] {
    auto out = spotopt::report::run_simulate(trace_dir, events_path ? events_path : "", opts);
    if (json_out) *json_out = dup_string(out.json);
    if (csv_out) *csv_out = dup_string(out.csv);
    return SPOTOPT_OK;
  });
}

void spotopt_str_free(char* s) { std::free(s); }

}  // extern "C"
