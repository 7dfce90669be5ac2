#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tripairs/errors.hpp"
#include "tripairs/pairgen.hpp"

using namespace tripairs;

namespace {

const PythTriple k345 = make_triple(BigInt(3), BigInt(4), BigInt(5));
const PythTriple k51213 = make_triple(BigInt(5), BigInt(12), BigInt(13));

} // namespace

TEST_CASE("is_skew_similar") {
    CHECK(is_skew_similar(k345, make_triple(BigInt(4), BigInt(3), BigInt(5))));
    CHECK(is_skew_similar(k345, make_triple(BigInt(8), BigInt(6), BigInt(10))));
    CHECK_FALSE(is_skew_similar(k345, k51213));
    CHECK_FALSE(is_skew_similar(k345, k345));
}

TEST_CASE("build_pair_curve") {
    PairCurve pc = build_pair_curve(k345, k51213);
    CHECK(pc.curve.e1() == 0);
    CHECK(pc.curve.e2() == -400);  // -A^2 b^2
    CHECK(pc.curve.e3() == -1296); // -a^2 B^2
    CHECK(pc.base.x() == 225);
    CHECK(pc.base.y() == 14625);
    CHECK(on_curve(pc.curve, pc.base));
    CHECK_FALSE(torsion_order(pc.base).has_value());
}

TEST_CASE("skew-similar base point is torsion") {
    PythTriple t2 = make_triple(BigInt(4), BigInt(3), BigInt(5));
    PairCurve pc = build_pair_curve(k345, t2);
    CHECK(torsion_order(pc.base) == 4);
    CHECK_THROWS_AS(derive_pair(k345, t2, 1), skew_similar_error);
}

TEST_CASE("duplication formula") {
    PairCurve pc = build_pair_curve(k345, k51213);
    CurvePoint dbl = mul(BigInt(2), pc.base);
    CHECK(dbl.x() == make_rat(BigInt(2079) * 2079, 16900));

    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 100) {
        BigInt u1((long)(rng() % 9) + 2), v1((long)(rng() % 9) + 1);
        BigInt u2((long)(rng() % 9) + 2), v2((long)(rng() % 9) + 1);
        PythTriple t1, t2;
        try {
            t1 = triple_from_uv({u1, v1});
            t2 = triple_from_uv({u2, v2});
        } catch (const degenerate_error&) {
            continue;
        }
        if (t1.a > 200 || t1.b > 200 || t2.a > 200 || t2.b > 200) continue;
        if (is_skew_similar(t1, t2)) continue;
        if (t2.a * t1.b == t1.a * t2.b) continue; // similar: singular curve
        PairCurve cur = build_pair_curve(t1, t2);
        BigRat num = BigRat(t1.a * t1.a * t2.a * t2.a - t2.b * t2.b * t1.b * t1.b);
        BigRat want = num * num / BigRat(4 * t1.c * t1.c * t2.c * t2.c);
        CHECK(mul(BigInt(2), cur.base).x() == want);
        ++done;
    }
}

TEST_CASE("derive_pair worked example") {
    TriplePair p = derive_pair(k345, k51213, 1);
    CHECK(p.first.a == 2079);
    CHECK(p.first.b == 2600);
    CHECK(p.first.c == 3329);
    CHECK(p.second.a == 3465);
    CHECK(p.second.b == 7800);
    CHECK(p.second.c == 8535);
    CHECK(p.mu == make_rat(5, 3));
    CHECK(p.nu == 3);
    // both are genuine integer triangles with the prescribed catheti ratios
    CHECK(p.second.a * 3 == p.first.a * 5);
    CHECK(p.second.b == p.first.b * 3);
}

TEST_CASE("derive_pair k=0 returns the input pair") {
    TriplePair p = derive_pair(k345, k51213, 0);
    CHECK(p.first.a == 3);
    CHECK(p.first.b == 4);
    CHECK(p.first.c == 5);
    CHECK(p.second.a == 5);
    CHECK(p.second.b == 12);
    CHECK(p.second.c == 13);
}

TEST_CASE("enumerate_pairs yields pairwise non-similar pairs") {
    auto v = enumerate_pairs(k345, k51213, 3);
    REQUIRE(v.size() == 3);
    TriplePair original = derive_pair(k345, k51213, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].mu == make_rat(5, 3));
        CHECK(v[i].nu == 3);
        CHECK_FALSE(pairs_similar(v[i], original));
        for (std::size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(pairs_similar(v[i], v[j]));
    }
    CHECK(pairs_similar(v[0], derive_pair(k345, k51213, 1)));
}

TEST_CASE("pairs_similar is scale blind") {
    TriplePair p = derive_pair(k345, k51213, 1);
    TriplePair q = p;
    q.first = make_triple(p.first.a * 7, p.first.b * 7, p.first.c * 7);
    q.second = make_triple(p.second.a * 7, p.second.b * 7, p.second.c * 7);
    CHECK(pairs_similar(p, q));
}
