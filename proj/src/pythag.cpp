#include "tripairs/pythag.hpp"

#include <algorithm>
#include <stdexcept>

#include "tripairs/errors.hpp"

namespace tripairs {

PythTriple make_triple(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::invalid_argument("make_triple: entries must be positive");
    if (a * a + b * b != c * c)
        throw std::invalid_argument("make_triple: a^2 + b^2 != c^2");
    return PythTriple{a, b, c, gcd(a, b) == 1};
}

PythTriple primitive_normalization(const PythTriple& t) {
    BigInt g = gcd(gcd(t.a, t.b), t.c);
    return PythTriple{t.a / g, t.b / g, t.c / g, true};
}

RationalTriangle make_rational_triangle(const BigRat& p, const BigRat& q, const BigRat& h) {
    if (p <= 0 || q <= 0 || h <= 0)
        throw std::invalid_argument("make_rational_triangle: sides must be positive");
    if (p * p + q * q != h * h)
        throw std::invalid_argument("make_rational_triangle: p^2 + q^2 != h^2");
    return RationalTriangle{p, q, h};
}

PythTriple triple_from_uv(const UVParam& p) {
    const BigInt &u = p.u, &v = p.v;
    if (u == 0 || v == 0) throw degenerate_error("triple_from_uv: uv = 0");
    if (u * u == v * v) throw degenerate_error("triple_from_uv: u^2 = v^2, degenerate triple");
    BigInt a = abs(2 * u * v);
    BigInt b = abs(u * u - v * v);
    BigInt c = u * u + v * v;
    bool prim = gcd(u, v) == 1 && mpz_odd_p(BigInt(u + v).get_mpz_t());
    return PythTriple{a, b, c, prim};
}

PythTriple scale_to_integer(const RationalTriangle& t, bool normalize) {
    BigInt d = lcm(lcm(t.p.get_den(), t.q.get_den()), t.h.get_den());
    BigRat dr(d);
    PythTriple out{BigRat(t.p * dr).get_num(), BigRat(t.q * dr).get_num(),
                   BigRat(t.h * dr).get_num(), false};
    if (normalize) return primitive_normalization(out);
    out.primitive = gcd(out.a, out.b) == 1;
    return out;
}

void for_each_primitive(const BigInt& leg_bound, const std::function<void(const PythTriple&)>& fn) {
    for (const auto& t : enumerate_primitive(leg_bound)) fn(t);
}

std::vector<PythTriple> enumerate_primitive(const BigInt& leg_bound) {
    if (leg_bound < 5) throw std::invalid_argument("enumerate_primitive: leg_bound must be >= 5");
    std::vector<PythTriple> out;
    // Both legs below N forces u^2 < N(1 + sqrt 2)/2, comfortably u^2 < 1.21 N.
    BigInt ulimit_sq = leg_bound * 13 / 10 + 2;
    for (BigInt u = 2; u * u <= ulimit_sq; ++u) {
        for (BigInt v = 1; v < u; ++v) {
            if (gcd(u, v) != 1 || mpz_even_p(BigInt(u + v).get_mpz_t())) continue;
            BigInt even_leg = 2 * u * v;
            BigInt odd_leg = u * u - v * v;
            if (std::max(even_leg, odd_leg) >= leg_bound) continue;
            out.push_back(PythTriple{std::min(even_leg, odd_leg), std::max(even_leg, odd_leg),
                                     u * u + v * v, true});
        }
    }
    std::sort(out.begin(), out.end(), [](const PythTriple& s, const PythTriple& t) {
        if (s.b != t.b) return s.b < t.b;
        return s.a < t.a;
    });
    return out;
}

long count_primitive_legs_below(const BigInt& bound) {
    return static_cast<long>(enumerate_primitive(bound).size());
}

long count_primitive_hypotenuse_below(const BigInt& bound) {
    long count = 0;
    for (BigInt u = 2; u * u + 1 < bound; ++u) {
        for (BigInt v = 1; v < u; ++v) {
            if (gcd(u, v) != 1 || mpz_even_p(BigInt(u + v).get_mpz_t())) continue;
            if (u * u + v * v < bound) ++count;
        }
    }
    return count;
}

} // namespace tripairs
