#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tripairs/errors.hpp"
#include "tripairs/skewfam.hpp"

using namespace tripairs;

TEST_CASE("E' and its generator") {
    const Curve222& e = eprime();
    CHECK(e.e1() == 24);
    CHECK(e.e2() == 6);
    CHECK(e.e3() == -30);
    CurvePoint p = eprime_generator();
    CHECK(p.x() == 42);
    CHECK(p.y() == -216);
    CHECK(on_curve(e, p));
    CHECK_FALSE(torsion_order(p).has_value());
}

TEST_CASE("quartic_value") {
    CHECK(quartic_value(BigRat(0)) == 1);
    CHECK(quartic_value(BigRat(1)) == 4);
    CHECK(quartic_value(make_rat(1, 4)) == make_rat(169, 256));
    CHECK(quartic_value(make_rat(69, 35)) == make_rat(BigInt(7274) * 7274, BigInt(35) * 35 * 35 * 35));
}

TEST_CASE("phi and phi_inv") {
    CurvePoint q = phi(BigRat(0), BigRat(1));
    CHECK(q.x() == -12);
    CHECK(q.y() == -108);
    auto [u0, w0] = phi_inv(q);
    CHECK(u0 == 0);
    CHECK(w0 == 1);

    // round trip through the multiples of P
    CurvePoint np = eprime_generator();
    for (int n = 2; n <= 6; ++n) {
        np = add(np, eprime_generator());
        auto [U, W] = phi_inv(np);
        CHECK(quartic_value(U) == W * W);
        CHECK(phi(U, W) == np);
    }

    CHECK_THROWS_AS(phi(BigRat(1), BigRat(1)), std::invalid_argument);
}

TEST_CASE("family_member(2)") {
    FamilyMember m = family_member(2);
    CHECK(m.U == make_rat(1, 4));
    CHECK(m.W == make_rat(-13, 16));
    CHECK(m.u == 1);
    CHECK(m.v == 4);
    CHECK(m.w == -13);
    CHECK(m.triple.a == 8);
    CHECK(m.triple.b == 15);
    CHECK(m.triple.c == 17);
    CHECK(m.witness.x() == 7680);
    CHECK(m.witness.y() == 2296320);
    CHECK(on_curve(m.curve, m.witness));
    CHECK_FALSE(torsion_order(m.witness).has_value());
}

TEST_CASE("family_member(3)") {
    FamilyMember m = family_member(3);
    CHECK(m.U == make_rat(69, 35));
    CHECK(m.W == make_rat(-7274, 1225));
    CHECK(m.u == 69);
    CHECK(m.v == 35);
    CHECK(m.w == -7274);
    CHECK(m.triple.a == 4830);
    CHECK(m.triple.b == 3536);
    CHECK(m.triple.c == 5986);
    CHECK(m.witness.x() == parse_int("-398431483632000"));
    CHECK(m.witness.y() == parse_int("3750258651849283392000"));
    CHECK_FALSE(torsion_order(m.witness).has_value());
}

TEST_CASE("family invariants for n up to 8") {
    auto ms = family_members(2, 8);
    REQUIRE(ms.size() == 7);
    for (const auto& m : ms) {
        // each triangle is skew-similar to its own transpose, and the witness
        // sits on E_{a,b} away from torsion
        CHECK(m.triple.a * m.triple.a + m.triple.b * m.triple.b == m.triple.c * m.triple.c);
        CHECK(quartic_value(m.U) == m.W * m.W);
        CHECK(m.witness.x() == -BigRat(8 * m.u * m.u * m.u * m.v * m.v * m.v * (m.u * m.u - m.v * m.v)));
        CHECK(on_curve(m.curve, m.witness));
        CHECK_FALSE(torsion_order(m.witness).has_value());
        CHECK(crucial_identity_check(m.u, m.v));
    }
    CHECK(distinctness_guard(ms).empty());
}

TEST_CASE("crucial identity at random parameters") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        BigInt u((long)(rng() % 2000) - 1000), v((long)(rng() % 2000) - 1000);
        if (u == 0 || v == 0 || u == v || u == -v) continue;
        CHECK(crucial_identity_check(u, v));
    }
}

TEST_CASE("n = 1 is degenerate") { CHECK_THROWS_AS(family_member(1), degenerate_error); }
