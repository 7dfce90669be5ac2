#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripairs/descent2.hpp"
#include "tripairs/errors.hpp"
#include "tripairs/pairgen.hpp"
#include "tripairs/paramfam.hpp"
#include "tripairs/pythag.hpp"
#include "tripairs/scanrecord.hpp"
#include "tripairs/skewfam.hpp"

using namespace tripairs;
using nlohmann::json;

namespace {

enum class Format { human, json, csv };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::human;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected json, csv or human");
}

std::string triple_str(const PythTriple& t) {
    return "(" + to_string(t.a) + "," + to_string(t.b) + "," + to_string(t.c) + ")";
}

json triple_json(const PythTriple& t) {
    return json{{"a", to_string(t.a)}, {"b", to_string(t.b)}, {"c", to_string(t.c)},
                {"primitive", t.primitive}};
}

std::string point_str(const CurvePoint& p) {
    if (p.is_infinity()) return "infinity";
    return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

json point_json(const CurvePoint& p) {
    if (p.is_infinity()) return json{{"infinity", true}};
    return json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

struct DeriveArgs {
    std::vector<std::string> sides;
    unsigned count = 1;
};

int cmd_derive(const DeriveArgs& a, Format fmt) {
    std::vector<BigInt> n;
    for (const auto& s : a.sides) n.push_back(parse_int(s));
    PythTriple t1 = make_triple(n[0], n[1], n[2]);
    PythTriple t2 = make_triple(n[3], n[4], n[5]);
    auto pairs = enumerate_pairs(t1, t2, a.count);
    for (const auto& p : pairs) {
        switch (fmt) {
            case Format::json:
                std::cout << json{{"first", triple_json(p.first)},
                                  {"second", triple_json(p.second)},
                                  {"mu", to_string(p.mu)},
                                  {"nu", to_string(p.nu)}}
                                 .dump()
                          << "\n";
                break;
            case Format::csv:
                std::cout << to_string(p.first.a) << "," << to_string(p.first.b) << ","
                          << to_string(p.first.c) << "," << to_string(p.second.a) << ","
                          << to_string(p.second.b) << "," << to_string(p.second.c) << ","
                          << to_string(p.mu) << "," << to_string(p.nu) << "\n";
                break;
            case Format::human:
                std::cout << triple_str(p.first) << " and " << triple_str(p.second)
                          << "  ratios " << to_string(p.mu) << ", " << to_string(p.nu)
                          << "  [A'/a' = " << to_string(make_rat(p.second.a, p.first.a))
                          << ", B'/b' = " << to_string(make_rat(p.second.b, p.first.b))
                          << " verified]\n";
                break;
        }
    }
    return 0;
}

int cmd_skew(unsigned n_from, unsigned n_to, Format fmt) {
    auto members = family_members(n_from, n_to);
    for (const auto& m : members) {
        switch (fmt) {
            case Format::json:
                std::cout << json{{"n", m.n},
                                  {"U", to_string(m.U)},
                                  {"W", to_string(m.W)},
                                  {"triple", triple_json(m.triple)},
                                  {"witness", point_json(m.witness)}}
                                 .dump()
                          << "\n";
                break;
            case Format::csv:
                std::cout << m.n << "," << to_string(m.triple.a) << "," << to_string(m.triple.b)
                          << "," << to_string(m.triple.c) << "," << to_string(m.witness.x())
                          << "," << to_string(m.witness.y()) << "\n";
                break;
            case Format::human:
                std::cout << "n=" << m.n << "  triple " << triple_str(m.triple) << "  witness "
                          << point_str(m.witness) << " on E_{" << to_string(m.triple.a) << ","
                          << to_string(m.triple.b) << "}\n";
                break;
        }
    }
    return 0;
}

json report_json(const SelmerReport& rep) {
    json pairs = json::array();
    for (const auto& [b1, b2] : rep.accepted_pairs)
        pairs.push_back(json::array({to_string(b1), to_string(b2)}));
    json bad = json::array();
    for (const auto& p : rep.bad_primes) bad.push_back(to_string(p));
    json witnesses = json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(point_json(w));
    return json{{"bad_primes", bad},
                {"accepted_pairs", pairs},
                {"rank_upper", rep.rank_upper},
                {"rank_lower", rep.rank_lower},
                {"witnesses", witnesses}};
}

int cmd_rank(const std::string& as, const std::string& bs, const std::string& hs, Format fmt) {
    BigInt a = parse_int(as), b = parse_int(bs);
    BigInt c2 = a * a + b * b;
    auto c = exact_sqrt(c2);
    if (!c) throw std::invalid_argument("rank: " + as + ", " + bs + " are not legs of a triple");
    PythTriple t = make_triple(a, b, *c);
    Curve222 curve = curve_eab(t.a, t.b);
    std::vector<CurvePoint> inject;
    BigInt a3b = t.a * t.a * t.a * t.b, b3a = t.b * t.b * t.b * t.a;
    for (const BigInt& x0 : {a3b, BigInt(-a3b), b3a, BigInt(-b3a)}) {
        auto y = rational_sqrt(curve.rhs(BigRat(x0)));
        if (y && *y != 0) inject.push_back(curve.point(BigRat(x0), *y));
    }
    SelmerReport rep = rank_bounds(curve, parse_int(hs), inject);
    switch (fmt) {
        case Format::json: {
            json j = report_json(rep);
            j["triple"] = triple_json(t);
            std::cout << j.dump() << "\n";
            break;
        }
        case Format::csv:
            std::cout << to_string(t.a) << "," << to_string(t.b) << "," << to_string(t.c) << ","
                      << rep.rank_upper << "," << rep.rank_lower << "\n";
            break;
        case Format::human: {
            std::cout << "curve E_{" << to_string(t.a) << "," << to_string(t.b)
                      << "}: y^2 = x(x+" << to_string(BigInt(t.a * t.a * t.a * t.a)) << ")(x+"
                      << to_string(BigInt(t.b * t.b * t.b * t.b)) << ")\n";
            std::cout << "bad primes:";
            for (const auto& p : rep.bad_primes) std::cout << " " << to_string(p);
            std::cout << "\naccepted 2-Selmer pairs (" << rep.accepted_pairs.size() << "):";
            for (const auto& [b1, b2] : rep.accepted_pairs)
                std::cout << " (" << to_string(b1) << "," << to_string(b2) << ")";
            std::cout << "\nrank bounds: " << rep.rank_lower << " <= rank <= " << rep.rank_upper
                      << "\n";
            for (const auto& w : rep.witnesses)
                std::cout << "witness of infinite order: " << point_str(w) << "\n";
            if (rep.rank_upper == 0) std::cout << "rank 0 certified; only torsion pairs survive\n";
            break;
        }
    }
    return 0;
}

int cmd_scan(const std::string& bound, unsigned jobs, const std::string& cache_path,
             const std::string& height, Format fmt) {
    BigInt leg_bound = parse_int(bound);
    if (leg_bound < 5) return 0; // below the smallest triple: nothing to scan
    ScanOptions opts;
    opts.search_height = parse_int(height);
    opts.jobs = jobs;
    std::ofstream cache;
    if (!cache_path.empty()) {
        for (const auto& [key, rec] : load_scan_cache(cache_path)) opts.skip.insert(key);
        cache.open(cache_path, std::ios::app);
        if (!cache) throw std::invalid_argument("scan: cannot open cache file " + cache_path);
    }
    if (fmt == Format::csv) std::cout << "a,b,c,rank_upper,rank_lower\n";
    opts.on_result = [&](const PythTriple& t, const SelmerReport& rep, long ms) {
        if (cache.is_open()) {
            ScanRecord rec;
            rec.a = t.a;
            rec.b = t.b;
            rec.c = t.c;
            rec.rank_upper = rep.rank_upper;
            rec.rank_lower = rep.rank_lower;
            rec.accepted_pairs_count = static_cast<long>(rep.accepted_pairs.size());
            rec.search_height = opts.search_height;
            rec.elapsed_ms = ms;
            cache << to_json_line(rec) << "\n" << std::flush;
        }
        switch (fmt) {
            case Format::json:
                std::cout << json{{"triple", triple_json(t)},
                                  {"rank_upper", rep.rank_upper},
                                  {"rank_lower", rep.rank_lower}}
                                 .dump()
                          << "\n";
                break;
            case Format::csv:
                std::cout << to_string(t.a) << "," << to_string(t.b) << "," << to_string(t.c)
                          << "," << rep.rank_upper << "," << rep.rank_lower << "\n";
                break;
            case Format::human:
                std::cout << triple_str(t) << "  rank in [" << rep.rank_lower << ", "
                          << rep.rank_upper << "]"
                          << (rep.rank_upper == 0 ? "  rank 0 certified" : "") << "\n";
                break;
        }
    };
    auto certified = scan_rank_zero(leg_bound, opts);
    if (fmt == Format::human) {
        std::cout << "certified rank 0 for " << certified.size() << " curve(s)";
        if (!opts.skip.empty()) std::cout << " (skipped " << opts.skip.size() << " cached)";
        std::cout << "\n";
    }
    return 0;
}

int cmd_param_r1r2(const std::string& us, const std::string& vs, const std::string& ws,
                   Format fmt) {
    RatioTriple r = r1r2_from_uvw(parse_int(us), parse_int(vs), parse_rat(ws));
    switch (fmt) {
        case Format::json:
            std::cout << json{{"r1", to_string(r.r1)}, {"r2", to_string(r.r2)}}.dump() << "\n";
            break;
        case Format::csv:
            std::cout << to_string(r.r1) << "," << to_string(r.r2) << "\n";
            break;
        case Format::human:
            std::cout << to_string(r.r1) << " " << to_string(r.r2) << "\n";
            break;
    }
    return 0;
}

int cmd_param_pair(const std::string& nbs, const std::string& ts, long m, Format fmt) {
    BigRat nb = parse_rat(nbs), t = parse_rat(ts);
    HPoint h = m == 0 ? curve_l_point(nb, t) : h_point_from_multiple(nb, t, BigInt(m));
    HPair pr = pair_from_h(h);
    auto tri = [&](const RationalTriangle& r) {
        return json{{"p", to_string(r.p)}, {"q", to_string(r.q)}, {"h", to_string(r.h)}};
    };
    switch (fmt) {
        case Format::json:
            std::cout << json{{"first", tri(pr.first)},
                              {"second", tri(pr.second)},
                              {"s", to_string(pr.s)}}
                             .dump()
                      << "\n";
            break;
        case Format::csv:
            std::cout << to_string(pr.first.p) << "," << to_string(pr.first.q) << ","
                      << to_string(pr.first.h) << "," << to_string(pr.second.p) << ","
                      << to_string(pr.second.q) << "," << to_string(pr.second.h) << ","
                      << to_string(pr.s) << "\n";
            break;
        case Format::human:
            std::cout << "(" << to_string(pr.first.p) << ", " << to_string(pr.first.q) << ", "
                      << to_string(pr.first.h) << ") and (" << to_string(pr.second.p) << ", "
                      << to_string(pr.second.q) << ", " << to_string(pr.second.h)
                      << ")  with s = " << to_string(pr.s) << "\n";
            break;
    }
    return 0;
}

int cmd_density(const std::string& los, const std::string& his, const std::string& ts,
                Format fmt) {
    DensitySample s = find_nu_in_interval(parse_rat(los), parse_rat(his), parse_rat(ts));
    switch (fmt) {
        case Format::json:
            std::cout << json{{"nu", to_string(s.nu)},
                              {"t", to_string(s.t)},
                              {"u", to_string(s.u)},
                              {"point", point_json(s.point)}}
                             .dump()
                      << "\n";
            break;
        case Format::csv:
            std::cout << to_string(s.nu) << "," << to_string(s.t) << "," << to_string(s.u) << ","
                      << to_string(s.point.x()) << "," << to_string(s.point.y()) << "\n";
            break;
        case Format::human:
            std::cout << "nu = " << to_string(s.nu) << "  (t = " << to_string(s.t)
                      << ", u = " << to_string(s.u) << ")\n";
            std::cout << "infinite-order point " << point_str(s.point) << " on E_nu\n";
            break;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pairs of Pythagorean triangles with prescribed catheti ratios"};
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "output format: json, csv or human")
        ->capture_default_str();

    DeriveArgs dargs;
    auto* derive = app.add_subcommand("derive", "derive new pairs from two triples");
    derive->add_option("sides", dargs.sides, "a b c A B C")->expected(6)->required();
    derive->add_option("--count", dargs.count, "number of essentially different pairs");

    unsigned n_from = 2, n_to = 2;
    auto* skew = app.add_subcommand("skew", "the skew-similar family E_{a_n, b_n}");
    skew->add_option("from", n_from, "first index n")->required();
    skew->add_option("to", n_to, "last index n")->required();

    std::string rank_a, rank_b, rank_height = "10000";
    auto* rank = app.add_subcommand("rank", "2-descent rank bounds for E_{a,b}");
    rank->add_option("a", rank_a, "first leg")->required();
    rank->add_option("b", rank_b, "second leg")->required();
    rank->add_option("--search-height", rank_height, "height bound for the point search");

    std::string scan_bound, scan_cache, scan_height = "256";
    unsigned scan_jobs = 1;
    const char* env_cache = std::getenv("TRIPAIRS_CACHE");
    if (env_cache) scan_cache = env_cache;
    auto* scan = app.add_subcommand("scan", "descend on all E_{a,b} with legs below a bound");
    scan->add_option("bound", scan_bound, "leg bound")->required();
    scan->add_option("--jobs", scan_jobs, "parallel workers");
    scan->add_option("--cache", scan_cache, "append-only JSON-lines cache (default $TRIPAIRS_CACHE)");
    scan->add_option("--search-height", scan_height, "height bound for the point search");

    auto* param = app.add_subcommand("param", "catheti-ratio parametrizations");
    param->require_subcommand(1);
    std::string p_u, p_v, p_w;
    auto* r1r2 = param->add_subcommand("r1r2", "(r1, r2) from (u, v, w)");
    r1r2->add_option("u", p_u)->required();
    r1r2->add_option("v", p_v)->required();
    r1r2->add_option("w", p_w)->required();
    std::string p_nb, p_t;
    long p_m = 0;
    auto* ppair = param->add_subcommand("pair", "triangle pair from the surface H at (nu_bar, t)");
    ppair->add_option("nu_bar", p_nb)->required();
    ppair->add_option("t", p_t)->required();
    ppair->add_option("--multiple", p_m, "use the m-th multiple of the fibration point");

    std::string d_lo, d_hi, d_t = "2";
    auto* density = app.add_subcommand("density", "find nu in an interval with E_nu of positive rank");
    density->add_option("lo", d_lo)->required();
    density->add_option("hi", d_hi)->required();
    density->add_option("--t", d_t, "fiber parameter t > 1");

    CLI11_PARSE(app, argc, argv);

    try {
        Format fmt = parse_format(format);
        if (derive->parsed()) return cmd_derive(dargs, fmt);
        if (skew->parsed()) return cmd_skew(n_from, n_to, fmt);
        if (rank->parsed()) return cmd_rank(rank_a, rank_b, rank_height, fmt);
        if (scan->parsed()) return cmd_scan(scan_bound, scan_jobs, scan_cache, scan_height, fmt);
        if (param->parsed()) {
            if (r1r2->parsed()) return cmd_param_r1r2(p_u, p_v, p_w, fmt);
            if (ppair->parsed()) return cmd_param_pair(p_nb, p_t, p_m, fmt);
        }
        if (density->parsed()) return cmd_density(d_lo, d_hi, d_t, fmt);
    } catch (const skew_similar_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
