// spotopt command line front-end. Talks to the engine exclusively through
// the C API in spotopt.h.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spotopt.h"

namespace {

bool log_enabled() {
  const char* lvl = std::getenv("SPOT_OPT_LOG");
  return lvl && *lvl && std::strcmp(lvl, "off") != 0 && std::strcmp(lvl, "none") != 0;
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[spotopt] " << msg << "\n";
}

int exit_code_for(spotopt_status status) {
  switch (status) {
    case SPOTOPT_OK:
      return 0;
    case SPOTOPT_ERR_INVALID_SPEC:
    case SPOTOPT_ERR_PARSE:
    case SPOTOPT_ERR_INVALID_ARG:
      return 2;
    case SPOTOPT_ERR_INSUFFICIENT_CAPACITY:
      return 3;
    default:
      return 1;
  }
}

int fail(spotopt_status status) {
  std::cerr << "error: " << spotopt_last_error() << "\n";
  return exit_code_for(status);
}

int workload_code(const std::string& name) {
  if (name == "general") return SPOTOPT_WORKLOAD_GENERAL;
  if (name == "network") return SPOTOPT_WORKLOAD_NETWORK;
  if (name == "disk") return SPOTOPT_WORKLOAD_DISK;
  if (name == "disk-network") return SPOTOPT_WORKLOAD_DISK_NETWORK;
  return -1;
}

struct CommonFlags {
  std::string candidates_path;
  long long pods = 0;
  double cpu = 0.0;
  double mem = 0.0;
  std::string workload = "general";
  double epsilon = 0.01;
  double threshold = 3.0;
  long long ttl = 180;
  std::vector<std::string> exclude;
};

spotopt_request make_request(const CommonFlags& flags, std::vector<const char*>& exclude_ptrs) {
  exclude_ptrs.clear();
  for (const auto& id : flags.exclude) exclude_ptrs.push_back(id.c_str());
  spotopt_request req{};
  req.req_cpu = flags.cpu;
  req.req_mem = flags.mem;
  req.req_pod = flags.pods;
  req.workload = workload_code(flags.workload);
  req.epsilon = flags.epsilon;
  req.spotverse_threshold = flags.threshold;
  req.cache_ttl_seconds = flags.ttl;
  req.exclude_ids = exclude_ptrs.empty() ? nullptr : exclude_ptrs.data();
  req.n_exclude_ids = exclude_ptrs.size();
  return req;
}

struct EngineHandle {
  spotopt_engine* ptr = nullptr;
  ~EngineHandle() { spotopt_engine_destroy(ptr); }
};

struct OwnedStr {
  char* ptr = nullptr;
  ~OwnedStr() { spotopt_str_free(ptr); }
};

bool write_output(const std::string& path, const char* payload) {
  if (path.empty()) {
    std::cout << payload;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << payload;
  log_line("wrote " + path);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spot instance pool recommendation engine"};
  app.require_subcommand(1);

  CommonFlags flags;
  double step = 0.01;
  std::string trace_dir;
  std::string events_path;
  std::string out_json;
  std::string out_csv;

  auto add_spec_flags = [&](CLI::App* cmd, bool need_spec) {
    if (need_spec) {
      cmd->add_option("--pods", flags.pods, "total pods requested")->required();
      cmd->add_option("--cpu", flags.cpu, "vCPU cores per pod")->required();
      cmd->add_option("--mem", flags.mem, "GiB per pod")->required();
    }
    cmd->add_option("--workload", flags.workload, "general|network|disk|disk-network")
        ->check(CLI::IsMember({"general", "network", "disk", "disk-network"}));
    cmd->add_option("--epsilon", flags.epsilon, "alpha search tolerance (default 0.01)");
  };

  auto* optimize = app.add_subcommand("optimize", "recommend an instance pool");
  optimize->add_option("--candidates", flags.candidates_path, "candidate dataset CSV")->required();
  add_spec_flags(optimize, true);
  optimize->add_option("--exclude", flags.exclude, "candidate id to exclude (repeatable)");

  auto* sweep = app.add_subcommand("sweep-alpha", "evaluate the ILP over an alpha grid");
  sweep->add_option("--candidates", flags.candidates_path, "candidate dataset CSV")->required();
  add_spec_flags(sweep, true);
  sweep->add_option("--step", step, "alpha grid step (default 0.01)");
  sweep->add_option("--exclude", flags.exclude, "candidate id to exclude (repeatable)");

  auto* compare = app.add_subcommand("compare", "run all strategies over the scenario grid");
  compare->add_option("--candidates", flags.candidates_path, "candidate dataset CSV")->required();
  add_spec_flags(compare, false);
  compare->add_option("--threshold", flags.threshold, "SpotVerse availability cutoff (default 3.0)");
  compare->add_option("--out-json", out_json, "write the JSON report here instead of stdout");
  compare->add_option("--out-csv", out_csv, "also write the CSV table here");

  auto* simulate = app.add_subcommand("simulate", "replay a market trace with interrupts");
  simulate->add_option("--trace", trace_dir, "directory of <epoch>.csv snapshots")->required();
  simulate->add_option("--events", events_path, "JSON-lines interrupt events");
  add_spec_flags(simulate, true);
  simulate->add_option("--threshold", flags.threshold, "SpotVerse availability cutoff");
  simulate->add_option("--ttl", flags.ttl, "unavailable-offerings cache TTL seconds (default 180)");
  simulate->add_option("--out-json", out_json, "write the JSON report here instead of stdout");
  simulate->add_option("--out-csv", out_csv, "also write the CSV table here");

  CLI11_PARSE(app, argc, argv);

  std::vector<const char*> exclude_ptrs;
  const spotopt_request req = make_request(flags, exclude_ptrs);

  if (simulate->parsed()) {
    OwnedStr json, csv;
    auto status = spotopt_simulate(trace_dir.c_str(),
                                   events_path.empty() ? nullptr : events_path.c_str(), &req,
                                   &json.ptr, &csv.ptr);
    if (status != SPOTOPT_OK) return fail(status);
    if (!write_output(out_json, json.ptr)) return 1;
    if (!out_csv.empty() && !write_output(out_csv, csv.ptr)) return 1;
    return 0;
  }

  EngineHandle engine;
  auto status = spotopt_engine_create_from_csv(flags.candidates_path.c_str(), &engine.ptr);
  if (status != SPOTOPT_OK) return fail(status);
  log_line("loaded " + std::to_string(spotopt_engine_candidate_count(engine.ptr)) +
           " candidates from " + flags.candidates_path);

  if (optimize->parsed()) {
    OwnedStr json;
    status = spotopt_optimize(engine.ptr, &req, &json.ptr);
    if (status != SPOTOPT_OK) return fail(status);
    std::cout << json.ptr;
    return 0;
  }

  if (sweep->parsed()) {
    OwnedStr csv;
    status = spotopt_sweep_alpha(engine.ptr, &req, step, &csv.ptr);
    if (status != SPOTOPT_OK) return fail(status);
    std::cout << csv.ptr;
    return 0;
  }

  // compare
  OwnedStr json, csv;
  status = spotopt_compare(engine.ptr, &req, &json.ptr, &csv.ptr);
  if (status != SPOTOPT_OK) return fail(status);
  if (!write_output(out_json, json.ptr)) return 1;
  if (!out_csv.empty() && !write_output(out_csv, csv.ptr)) return 1;
  return 0;
}
