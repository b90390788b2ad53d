#include <doctest.h>

#include <atomic>
#include <thread>

#include "helpers.hpp"
#include "spotopt/resilience.hpp"

using namespace spotopt;
using test::mk;

namespace {

std::vector<EnrichedCandidate> small_pool() {
  PodSpec spec{1, 2, 8, Workload::General};
  return test::enriched_of(
      {
          mk("a", 4, 8, 0.10, 1.0, 40000, 5),
          mk("b", 4, 8, 0.12, 1.0, 38000, 5),
          mk("c", 4, 8, 0.14, 1.0, 36000, 5),
      },
      spec);
}

bool contains(const Allocation& alloc, const std::string& id) {
  for (const auto& e : alloc.entries)
    if (e.id == id) return true;
  return false;
}

}  // namespace

TEST_CASE("cache entries expire after the ttl") {
  resilience::UnavailableOfferingsCache cache;  // default 180 s
  cache.record_interrupt({100, "x"});
  CHECK(cache.is_unavailable("x", 150));
  CHECK(cache.is_unavailable("x", 279));
  CHECK(!cache.is_unavailable("x", 281));
  CHECK(!cache.is_unavailable("never-seen", 150));
}

TEST_CASE("re-recording refreshes the expiry") {
  resilience::UnavailableOfferingsCache cache(100);
  cache.record_interrupt({100, "x"});
  cache.record_interrupt({150, "x"});
  CHECK(cache.is_unavailable("x", 240));
  CHECK(cache.active_ids(240) == std::vector<std::string>{"x"});
  CHECK(!cache.is_unavailable("x", 250));
}

TEST_CASE("unknown ids are recorded as-is") {
  resilience::UnavailableOfferingsCache cache(100);
  cache.record_interrupt({0, "no-such-candidate"});
  CHECK(cache.is_unavailable("no-such-candidate", 50));
}

TEST_CASE("active_ids is sorted and drops expired entries") {
  resilience::UnavailableOfferingsCache cache(100);
  cache.record_interrupt({0, "b"});
  cache.record_interrupt({0, "a"});
  cache.record_interrupt({-200, "old"});
  CHECK(cache.active_ids(50) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("reoptimize excludes active offerings and recovers coverage") {
  auto pool = small_pool();
  PodSpec spec{1, 2, 8, Workload::General};

  auto baseline = resilience::UnavailableOfferingsCache();
  auto before = resilience::reoptimize(pool, spec, baseline, 0);
  REQUIRE(contains(before.best_allocation, "a"));

  resilience::UnavailableOfferingsCache cache;
  cache.record_interrupt({10, "a"});
  auto after = resilience::reoptimize(pool, spec, cache, 20);
  CHECK(!contains(after.best_allocation, "a"));
  CHECK(after.best_allocation.total_pods_allocated >= spec.req_pod);

  // past the ttl the offering is selectable again
  auto healed = resilience::reoptimize(pool, spec, cache, 10 + 180);
  CHECK(contains(healed.best_allocation, "a"));
}

TEST_CASE("capacity error accounts for the excluded pods") {
  auto pool = small_pool();
  PodSpec spec{1, 2, 50, Workload::General};  // pool capacity is 60
  resilience::UnavailableOfferingsCache cache;
  cache.record_interrupt({0, "a"});  // removes 20 pods
  try {
    resilience::reoptimize(pool, spec, cache, 10);
    FAIL("expected InsufficientCapacityError");
  } catch (const InsufficientCapacityError& e) {
    CHECK(e.gap() == 50 - 40);
    CHECK(std::string(e.what()).find("excluded") != std::string::npos);
  }
}

TEST_CASE("one writer and many readers race safely") {
  resilience::UnavailableOfferingsCache cache(100);
  std::atomic<bool> stop{false};
  std::thread writer([&] {
    for (int i = 0; i < 5000; ++i) cache.record_interrupt({i, "id" + std::to_string(i % 7)});
  });
  std::vector<std::thread> readers;
  for (int r = 0; r < 3; ++r)
    readers.emplace_back([&] {
      while (!stop.load()) {
        (void)cache.is_unavailable("id3", 2500);
        (void)cache.active_ids(2500);
      }
    });
  writer.join();
  stop.store(true);
  for (auto& t : readers) t.join();
  CHECK(cache.is_unavailable("id6", 4999));
}
