#ifndef SPOTOPT_INGEST_HPP
#define SPOTOPT_INGEST_HPP

#include <string>
#include <vector>

#include "spotopt/types.hpp"

namespace spotopt::ingest {

// Header line of the candidate CSV contract.
extern const char* const kCandidateCsvHeader;

// Loads a candidate dataset from CSV. Columns:
//   id,instance_type,region,az,vcpu,mem_gib,spot_price,ondemand_price,
//   base_ondemand_price,coremark_single,t3,network_optimized,disk_optimized,
//   sps_single,interrupt_freq
// Optional columns (base_ondemand_price, sps_single, interrupt_freq) may be
// blank. A blank id is composed as "{instance_type}/{region}/{az}".
// Throws ParseError or Error(DuplicateId).
std::vector<InstanceCandidate> load_candidates(const std::string& path);

// Parses candidate rows from an in-memory CSV document (same format).
std::vector<InstanceCandidate> parse_candidates(const std::string& text);

// Serializes candidates back into the CSV contract; load(parse(write(x))) == x.
std::string write_candidates(const std::vector<InstanceCandidate>& candidates);
void save_candidates(const std::string& path, const std::vector<InstanceCandidate>& candidates);

// Loads a trace directory of snapshot files named "<epoch>.csv", sorted
// ascending by timestamp. Throws Error(NonMonotonicTimestamps) on duplicates.
std::vector<MarketSnapshot> load_trace(const std::string& dir);

// Loads JSON-lines interrupt events: {"t": <epoch-sec>, "kind": "interrupt",
// "candidate_id": "<id>"}. Returned sorted ascending by t.
std::vector<InterruptEvent> load_events(const std::string& path);
std::vector<InterruptEvent> parse_events(const std::string& text);

}  // namespace spotopt::ingest

#endif  // SPOTOPT_INGEST_HPP
