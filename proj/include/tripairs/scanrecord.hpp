#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tripairs/exactmath.hpp"

namespace tripairs {

inline constexpr const char* kToolVersion = "0.1.0";

// One line of the append-only scan cache. All numbers are exact decimal or
// "num/den" strings in the serialized form.
struct ScanRecord {
    BigInt a, b, c;
    int rank_upper = 0;
    int rank_lower = 0;
    long accepted_pairs_count = 0;
    BigInt search_height;
    long elapsed_ms = 0;
    std::string tool_version = kToolVersion;

    bool operator==(const ScanRecord&) const = default;
};

std::string to_json_line(const ScanRecord& r);
ScanRecord scan_record_from_json(const std::string& line);

// Loads a cache file (ignoring blank lines); duplicate (a, b) keys keep the
// record with the larger search_height. Missing file yields an empty map.
std::map<std::pair<BigInt, BigInt>, ScanRecord> load_scan_cache(const std::string& path);

} // namespace tripairs
