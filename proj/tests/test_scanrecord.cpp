#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tripairs/scanrecord.hpp"

using namespace tripairs;

TEST_CASE("json round trip") {
    ScanRecord r;
    r.a = 12;
    r.b = 35;
    r.c = 37;
    r.rank_upper = 0;
    r.rank_lower = 0;
    r.accepted_pairs_count = 4;
    r.search_height = 256;
    r.elapsed_ms = 17;
    std::string line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(scan_record_from_json(line) == r);

    // big values survive as strings
    ScanRecord big;
    big.a = parse_int("654056791401866496244333771257120");
    big.b = parse_int("227124445985970945806894399956799");
    big.c = big.a + big.b; // not a real hypotenuse; serialization only
    big.search_height = parse_int("100000000000000000000");
    big.rank_upper = 3;
    big.rank_lower = 1;
    CHECK(scan_record_from_json(to_json_line(big)) == big);
}

TEST_CASE("malformed lines throw") {
    CHECK_THROWS(scan_record_from_json("not json"));
    CHECK_THROWS(scan_record_from_json("{\"a\":\"3\"}"));
}

TEST_CASE("load_scan_cache dedups by larger search_height") {
    std::string path = "scanrecord_test_cache.jsonl";
    {
        std::ofstream out(path);
        ScanRecord r;
        r.a = 3;
        r.b = 4;
        r.c = 5;
        r.search_height = 100;
        out << to_json_line(r) << "\n\n"; // blank line is skipped
        r.search_height = 400;
        r.rank_lower = 1;
        out << to_json_line(r) << "\n";
        r = ScanRecord{};
        r.a = 5;
        r.b = 12;
        r.c = 13;
        r.search_height = 50;
        out << to_json_line(r) << "\n";
        r.search_height = 10; // stale smaller rerun, ignored
        out << to_json_line(r) << "\n";
    }
    auto cache = load_scan_cache(path);
    REQUIRE(cache.size() == 2);
    CHECK(cache.at({BigInt(3), BigInt(4)}).search_height == 400);
    CHECK(cache.at({BigInt(3), BigInt(4)}).rank_lower == 1);
    CHECK(cache.at({BigInt(5), BigInt(12)}).search_height == 50);
    std::remove(path.c_str());
}

TEST_CASE("missing cache file is empty") {
    CHECK(load_scan_cache("no_such_cache_file.jsonl").empty());
}
