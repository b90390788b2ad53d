/* spotopt: spot instance pool recommendation engine, C API.
 *
 * All functions are thread-safe as long as each engine handle is used from
 * one thread at a time. Strings returned through out-parameters are owned by
 * the caller and must be released with spotopt_str_free().
 */
#ifndef SPOTOPT_H
#define SPOTOPT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SPOTOPT_ABI_VERSION 1

typedef struct spotopt_engine spotopt_engine;

typedef enum spotopt_status {
  SPOTOPT_OK = 0,
  SPOTOPT_ERR_INTERNAL = 1,
  SPOTOPT_ERR_INVALID_SPEC = 2,
  SPOTOPT_ERR_PARSE = 3,
  SPOTOPT_ERR_INSUFFICIENT_CAPACITY = 4,
  SPOTOPT_ERR_IO = 5,
  SPOTOPT_ERR_INVALID_ARG = 6,
  SPOTOPT_ERR_TOO_LARGE = 7
} spotopt_status;

typedef enum spotopt_workload {
  SPOTOPT_WORKLOAD_GENERAL = 0,
  SPOTOPT_WORKLOAD_NETWORK = 1,
  SPOTOPT_WORKLOAD_DISK = 2,
  SPOTOPT_WORKLOAD_DISK_NETWORK = 3
} spotopt_workload;

typedef struct spotopt_request {
  double req_cpu;        /* vCPU cores per pod, > 0 */
  double req_mem;        /* GiB per pod, > 0 */
  long long req_pod;     /* total pods, >= 1 */
  int workload;          /* spotopt_workload */
  double epsilon;        /* GSS tolerance; <= 0 means the default 0.01 */
  double spotverse_threshold;   /* <= 0 means the default 3.0 */
  long long cache_ttl_seconds;  /* <= 0 means the default 180 */
  const char* const* exclude_ids;
  size_t n_exclude_ids;
} spotopt_request;

int spotopt_abi_version(void);

/* Message for the most recent failure on the calling thread. The pointer
 * stays valid until the next failing call on the same thread. */
const char* spotopt_last_error(void);

/* Loads a candidate dataset CSV into a new engine. */
spotopt_status spotopt_engine_create_from_csv(const char* csv_path, spotopt_engine** out);
void spotopt_engine_destroy(spotopt_engine* engine);
size_t spotopt_engine_candidate_count(const spotopt_engine* engine);

/* Runs the full pipeline (enrich, golden section search over the ILP) and
 * returns a JSON report. */
spotopt_status spotopt_optimize(const spotopt_engine* engine, const spotopt_request* request,
                                char** json_out);

/* Evaluates the ILP over an alpha grid; returns CSV rows
 * alpha,e_total,cost,pods,gss_pick. */
spotopt_status spotopt_sweep_alpha(const spotopt_engine* engine, const spotopt_request* request,
                                   double step, char** csv_out);

/* Runs all strategies over the 20-scenario grid; either out pointer may be
 * NULL when that format is not wanted. */
spotopt_status spotopt_compare(const spotopt_engine* engine, const spotopt_request* request,
                               char** json_out, char** csv_out);

/* Trace replay; events_path may be NULL for an event-free replay. */
spotopt_status spotopt_simulate(const char* trace_dir, const char* events_path,
                                const spotopt_request* request, char** json_out,
                                char** csv_out);

void spotopt_str_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPOTOPT_H */
