#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "spotopt.h"

namespace {

std::string fixture_path() { return spotopt::test::data_path("fixtures/candidates_30.csv"); }

spotopt_request basic_request(long long pods = 50) {
  spotopt_request req{};
  req.req_cpu = 1.0;
  req.req_mem = 2.0;
  req.req_pod = pods;
  req.workload = SPOTOPT_WORKLOAD_GENERAL;
  return req;
}

struct Engine {
  spotopt_engine* ptr = nullptr;
  ~Engine() { spotopt_engine_destroy(ptr); }
};

struct Str {
  char* ptr = nullptr;
  ~Str() { spotopt_str_free(ptr); }
};

}  // namespace

TEST_CASE("abi version") { CHECK(spotopt_abi_version() == SPOTOPT_ABI_VERSION); }

TEST_CASE("engine loads the fixture dataset") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  CHECK(spotopt_engine_candidate_count(engine.ptr) == 30);
}

TEST_CASE("missing file maps to an io error with a message") {
  spotopt_engine* engine = nullptr;
  auto status = spotopt_engine_create_from_csv("/no/such/file.csv", &engine);
  CHECK(status == SPOTOPT_ERR_IO);
  CHECK(engine == nullptr);
  CHECK(std::strlen(spotopt_last_error()) > 0);
}

TEST_CASE("optimize returns a versioned JSON report") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  auto req = basic_request();
  Str out;
  REQUIRE(spotopt_optimize(engine.ptr, &req, &out.ptr) == SPOTOPT_OK);

  auto j = nlohmann::json::parse(out.ptr);
  CHECK(j["schema_version"] == 1);
  CHECK(j["efficiency"]["e_over_pods"].get<double>() <= 1.0);
  CHECK(j["allocation"]["total_pods"].get<long long>() >= 50);
  CHECK(j["iterations"] == 12);  // default epsilon 0.01, plus the alpha=0 probe
}

TEST_CASE("invalid spec and capacity errors map to distinct statuses") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  Str out;

  auto bad = basic_request();
  bad.req_cpu = 0.0;
  CHECK(spotopt_optimize(engine.ptr, &bad, &out.ptr) == SPOTOPT_ERR_INVALID_SPEC);
  CHECK(std::string(spotopt_last_error()).find("req_cpu") != std::string::npos);

  auto huge = basic_request(1'000'000);
  CHECK(spotopt_optimize(engine.ptr, &huge, &out.ptr) == SPOTOPT_ERR_INSUFFICIENT_CAPACITY);

  CHECK(spotopt_optimize(engine.ptr, nullptr, &out.ptr) == SPOTOPT_ERR_INVALID_ARG);
}

TEST_CASE("exclusions drop candidates from the result") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  auto req = basic_request();
  const char* excluded[] = {"m7i.large/us-east-1/a"};
  req.exclude_ids = excluded;
  req.n_exclude_ids = 1;
  Str out;
  REQUIRE(spotopt_optimize(engine.ptr, &req, &out.ptr) == SPOTOPT_OK);
  CHECK(std::string(out.ptr).find("m7i.large/us-east-1/a") == std::string::npos);
}

TEST_CASE("sweep_alpha emits the grid table") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  auto req = basic_request();
  Str out;
  REQUIRE(spotopt_sweep_alpha(engine.ptr, &req, 0.25, &out.ptr) == SPOTOPT_OK);
  std::string csv(out.ptr);
  CHECK(csv.rfind("alpha,e_total,cost,pods,gss_pick", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 grid rows
}

TEST_CASE("compare output is byte-stable across runs") {
  Engine engine;
  REQUIRE(spotopt_engine_create_from_csv(fixture_path().c_str(), &engine.ptr) == SPOTOPT_OK);
  auto req = basic_request();
  Str j1, c1, j2, c2;
  REQUIRE(spotopt_compare(engine.ptr, &req, &j1.ptr, &c1.ptr) == SPOTOPT_OK);
  REQUIRE(spotopt_compare(engine.ptr, &req, &j2.ptr, &c2.ptr) == SPOTOPT_OK);
  CHECK(std::string(j1.ptr) == std::string(j2.ptr));
  CHECK(std::string(c1.ptr) == std::string(c2.ptr));
}

TEST_CASE("simulate runs the fixture trace") {
  auto req = basic_request();
  Str json, csv;
  REQUIRE(spotopt_simulate(spotopt::test::data_path("trace").c_str(),
                           spotopt::test::data_path("events.jsonl").c_str(), &req, &json.ptr,
                           &csv.ptr) == SPOTOPT_OK);
  auto j = nlohmann::json::parse(json.ptr);
  CHECK(j["records"].size() == 3 * 4);  // snapshots x strategies
}

TEST_CASE("destroy and free tolerate null") {
  spotopt_engine_destroy(nullptr);
  spotopt_str_free(nullptr);
}
