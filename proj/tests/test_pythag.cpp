#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "tripairs/errors.hpp"
#include "tripairs/pythag.hpp"

using namespace tripairs;

TEST_CASE("make_triple") {
    PythTriple t = make_triple(BigInt(3), BigInt(4), BigInt(5));
    CHECK(t.primitive);
    PythTriple s = make_triple(BigInt(6), BigInt(8), BigInt(10));
    CHECK_FALSE(s.primitive);
    CHECK_THROWS_AS(make_triple(BigInt(3), BigInt(4), BigInt(6)), std::invalid_argument);
    CHECK_THROWS_AS(make_triple(BigInt(0), BigInt(4), BigInt(4)), std::invalid_argument);
    PythTriple n = primitive_normalization(s);
    CHECK(n.a == 3);
    CHECK(n.b == 4);
    CHECK(n.c == 5);
    CHECK(n.primitive);
}

TEST_CASE("triple_from_uv") {
    PythTriple t = triple_from_uv({BigInt(2), BigInt(1)});
    CHECK(t.a == 4);
    CHECK(t.b == 3);
    CHECK(t.c == 5);
    CHECK(t.primitive);
    // signed parameters give the same unsigned triple
    PythTriple tm = triple_from_uv({BigInt(-2), BigInt(1)});
    CHECK(tm.a == t.a);
    CHECK(tm.b == t.b);
    CHECK(tm.c == t.c);
    // u, v both odd: non-primitive
    CHECK_FALSE(triple_from_uv({BigInt(3), BigInt(1)}).primitive);
    CHECK_THROWS_AS(triple_from_uv({BigInt(1), BigInt(1)}), degenerate_error);
    CHECK_THROWS_AS(triple_from_uv({BigInt(0), BigInt(5)}), degenerate_error);
}

TEST_CASE("scale_to_integer") {
    RationalTriangle r = make_rational_triangle(make_rat(3, 2), BigRat(2), make_rat(5, 2));
    PythTriple t = scale_to_integer(r);
    CHECK(t.a == 3);
    CHECK(t.b == 4);
    CHECK(t.c == 5);
    RationalTriangle big = make_rational_triangle(BigRat(30), BigRat(40), BigRat(50));
    CHECK(scale_to_integer(big).a == 30);
    CHECK(scale_to_integer(big, true).a == 3);
    CHECK_THROWS_AS(make_rational_triangle(BigRat(1), BigRat(1), BigRat(2)), std::invalid_argument);
}

TEST_CASE("enumerate_primitive small bound") {
    auto v = enumerate_primitive(BigInt(13));
    // max leg < 13: (3,4,5), (5,12,13) excluded? no: 12 < 13 so included
    REQUIRE(v.size() == 2);
    CHECK(v[0].a == 3);
    CHECK(v[0].b == 4);
    CHECK(v[1].a == 5);
    CHECK(v[1].b == 12);
    for (const auto& t : v) CHECK(t.primitive);
}

TEST_CASE("enumerate_primitive agrees with brute force") {
    const long N = 300;
    std::set<std::array<long, 3>> brute;
    for (long a = 1; a < N; ++a)
        for (long b = a + 1; b < N; ++b) {
            long c2 = a * a + b * b;
            long c = (long)std::sqrt((double)c2);
            while (c * c < c2) ++c;
            if (c * c != c2) continue;
            if (std::gcd(a, b) != 1) continue;
            brute.insert({a, b, c});
        }
    auto v = enumerate_primitive(BigInt(N));
    REQUIRE(v.size() == brute.size());
    std::set<std::array<long, 3>> got;
    for (const auto& t : v) got.insert({t.a.get_si(), t.b.get_si(), t.c.get_si()});
    CHECK(got == brute);
    // ordering: by (max leg, min leg)
    for (std::size_t i = 1; i < v.size(); ++i) {
        CHECK((v[i - 1].b < v[i].b || (v[i - 1].b == v[i].b && v[i - 1].a < v[i].a)));
    }
}

TEST_CASE("counts at the two readings") {
    CHECK(count_primitive_legs_below(BigInt(100)) == 18);
    CHECK(count_primitive_hypotenuse_below(BigInt(100)) == 16);
    // hypotenuse count ~ N / (2 pi)
    long h = count_primitive_hypotenuse_below(BigInt(10000));
    CHECK(h == 1593);
    long l = count_primitive_legs_below(BigInt(10000));
    CHECK(l == 1788);
}

TEST_CASE("for_each_primitive matches enumerate_primitive") {
    std::vector<PythTriple> fe;
    for_each_primitive(BigInt(200), [&](const PythTriple& t) { fe.push_back(t); });
    auto v = enumerate_primitive(BigInt(200));
    REQUIRE(fe.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(fe[i].a == v[i].a);
        CHECK(fe[i].b == v[i].b);
        CHECK(fe[i].c == v[i].c);
    }
}
