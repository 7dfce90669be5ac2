#include "tripairs/scanrecord.hpp"

#include <fstream>

#include <json.hpp>

namespace tripairs {

using nlohmann::json;

std::string to_json_line(const ScanRecord& r) {
    json j;
    j["a"] = to_string(r.a);
    j["b"] = to_string(r.b);
    j["c"] = to_string(r.c);
    j["rank_upper"] = r.rank_upper;
    j["rank_lower"] = r.rank_lower;
    j["accepted_pairs_count"] = r.accepted_pairs_count;
    j["search_height"] = to_string(r.search_height);
    j["elapsed_ms"] = r.elapsed_ms;
    j["tool_version"] = r.tool_version;
    return j.dump();
}

ScanRecord scan_record_from_json(const std::string& line) {
    json j = json::parse(line);
    ScanRecord r;
    r.a = parse_int(j.at("a").get<std::string>());
    r.b = parse_int(j.at("b").get<std::string>());
    r.c = parse_int(j.at("c").get<std::string>());
    r.rank_upper = j.at("rank_upper").get<int>();
    r.rank_lower = j.at("rank_lower").get<int>();
    r.accepted_pairs_count = j.at("accepted_pairs_count").get<long>();
    r.search_height = parse_int(j.at("search_height").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<long>();
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
}

std::map<std::pair<BigInt, BigInt>, ScanRecord> load_scan_cache(const std::string& path) {
    std::map<std::pair<BigInt, BigInt>, ScanRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ScanRecord r = scan_record_from_json(line);
        auto key = std::make_pair(r.a, r.b);
        auto it = out.find(key);
        if (it == out.end() || it->second.search_height < r.search_height) out[key] = r;
    }
    return out;
}

} // namespace tripairs
