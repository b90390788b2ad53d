#include "spotopt/ingest.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "spotopt/format.hpp"

namespace spotopt::ingest {

namespace fs = std::filesystem;

const char* const kCandidateCsvHeader =
    "id,instance_type,region,az,vcpu,mem_gib,spot_price,ondemand_price,"
    "base_ondemand_price,coremark_single,t3,network_optimized,disk_optimized,"
    "sps_single,interrupt_freq";

namespace {

constexpr std::size_t kNumColumns = 15;

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, std::size_t line, std::size_t col) {
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ParseError(line, col, "expected a number, got '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, std::size_t line, std::size_t col) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, col, "expected an integer, got '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s, std::size_t line, std::size_t col) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError(line, col, "expected true/false, got '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<InstanceCandidate> parse_candidates(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<InstanceCandidate> out;
  std::unordered_set<std::string> seen;

  if (!std::getline(in, line)) throw ParseError(1, 1, "missing header line");
  ++lineno;
  {
    auto fields = split_csv_line(line);
    if (fields.size() != kNumColumns || fields[0] != "id")
      throw ParseError(1, 1, "unexpected header");
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto f = split_csv_line(line);
    if (f.size() != kNumColumns)
      throw ParseError(lineno, f.size(), "expected " + std::to_string(kNumColumns) +
                                             " columns, got " + std::to_string(f.size()));
    InstanceCandidate c;
    c.instance_type = f[1];
    c.region = f[2];
    c.az = f[3];
    c.id = f[0].empty() ? c.instance_type + "/" + c.region + "/" + c.az : f[0];
    if (c.instance_type.empty() || c.region.empty() || c.az.empty())
      throw ParseError(lineno, 2, "instance_type/region/az must be nonempty");
    c.cpu = parse_double(f[4], lineno, 5);
    c.mem = parse_double(f[5], lineno, 6);
    c.spot_price = parse_double(f[6], lineno, 7);
    c.ondemand_price = parse_double(f[7], lineno, 8);
    if (!f[8].empty()) c.base_ondemand_price = parse_double(f[8], lineno, 9);
    c.benchmark = parse_double(f[9], lineno, 10);
    c.t3 = parse_int(f[10], lineno, 11);
    c.network_optimized = parse_bool(f[11], lineno, 12);
    c.disk_optimized = parse_bool(f[12], lineno, 13);
    if (!f[13].empty()) {
      auto v = parse_int(f[13], lineno, 14);
      if (v < 1 || v > 3) throw ParseError(lineno, 14, "sps_single must be in 1..3");
      c.sps_single = static_cast<int>(v);
    }
    if (!f[14].empty()) {
      auto v = parse_int(f[14], lineno, 15);
      if (v < 0) throw ParseError(lineno, 15, "interrupt_freq must be >= 0");
      c.interrupt_freq = static_cast<int>(v);
    }

    if (!(c.cpu > 0.0)) throw ParseError(lineno, 5, "vcpu must be positive");
    if (!(c.mem > 0.0)) throw ParseError(lineno, 6, "mem_gib must be positive");
    if (!(c.spot_price > 0.0)) throw ParseError(lineno, 7, "spot_price must be positive");
    if (!(c.ondemand_price > 0.0)) throw ParseError(lineno, 8, "ondemand_price must be positive");
    if (c.base_ondemand_price && !(*c.base_ondemand_price > 0.0))
      throw ParseError(lineno, 9, "base_ondemand_price must be positive");
    if (!(c.benchmark > 0.0)) throw ParseError(lineno, 10, "coremark_single must be positive");
    if (c.t3 < 0) throw ParseError(lineno, 11, "t3 must be >= 0");

    if (!seen.insert(c.id).second)
      throw Error(ErrorCode::DuplicateId, "duplicate candidate id: " + c.id);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<InstanceCandidate> load_candidates(const std::string& path) {
  return parse_candidates(read_file(path));
}

std::string write_candidates(const std::vector<InstanceCandidate>& candidates) {
  std::ostringstream out;
  out << kCandidateCsvHeader << "\n";
  for (const auto& c : candidates) {
    out << c.id << ',' << c.instance_type << ',' << c.region << ',' << c.az << ','
        << format_double(c.cpu) << ',' << format_double(c.mem) << ','
        << format_double(c.spot_price) << ',' << format_double(c.ondemand_price) << ',';
    if (c.base_ondemand_price) out << format_double(*c.base_ondemand_price);
    out << ',' << format_double(c.benchmark) << ',' << c.t3 << ','
        << (c.network_optimized ? "true" : "false") << ','
        << (c.disk_optimized ? "true" : "false") << ',';
    if (c.sps_single) out << *c.sps_single;
    out << ',';
    if (c.interrupt_freq) out << *c.interrupt_freq;
    out << "\n";
  }
  return out.str();
}

void save_candidates(const std::string& path, const std::vector<InstanceCandidate>& candidates) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write file: " + path);
  out << write_candidates(candidates);
}

std::vector<MarketSnapshot> load_trace(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, "not a directory: " + dir);
  std::vector<MarketSnapshot> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    const std::string stem = entry.path().stem().string();
    std::int64_t ts = 0;
    auto [p, ec] = std::from_chars(stem.data(), stem.data() + stem.size(), ts);
    if (ec != std::errc() || p != stem.data() + stem.size())
      throw ParseError(0, 0, "snapshot filename is not an epoch timestamp: " + stem);
    MarketSnapshot snap;
    snap.timestamp = ts;
    snap.candidates = load_candidates(entry.path().string());
    out.push_back(std::move(snap));
  }
  std::sort(out.begin(), out.end(),
            [](const MarketSnapshot& a, const MarketSnapshot& b) { return a.timestamp < b.timestamp; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].timestamp == out[i - 1].timestamp)
      throw Error(ErrorCode::NonMonotonicTimestamps,
                  "duplicate snapshot timestamp: " + std::to_string(out[i].timestamp));
  return out;
}

std::vector<InterruptEvent> parse_events(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<InterruptEvent> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError(lineno, 1, "invalid JSON");
    if (!j.contains("t") || !j["t"].is_number_integer())
      throw ParseError(lineno, 1, "missing integer field 't'");
    if (!j.contains("kind") || j["kind"] != "interrupt")
      throw ParseError(lineno, 1, "unknown event kind");
    if (!j.contains("candidate_id") || !j["candidate_id"].is_string())
      throw ParseError(lineno, 1, "missing string field 'candidate_id'");
    out.push_back({j["t"].get<std::int64_t>(), j["candidate_id"].get<std::string>()});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const InterruptEvent& a, const InterruptEvent& b) { return a.t < b.t; });
  return out;
}

std::vector<InterruptEvent> load_events(const std::string& path) {
  return parse_events(read_file(path));
}

}  // namespace spotopt::ingest
