#include "tripairs/skewfam.hpp"

#include <stdexcept>

#include "tripairs/errors.hpp"

namespace tripairs {

const Curve222& eprime() {
    static const Curve222 c = [] {
        Curve222 e(BigRat(24), BigRat(6), BigRat(-30));
        CurvePoint p = e.point(BigRat(42), BigRat(-216));
        if (torsion_order(p))
            throw invariant_violation("eprime: generator is torsion");
        return e;
    }();
    return c;
}

CurvePoint eprime_generator() { return eprime().point(BigRat(42), BigRat(-216)); }

BigRat quartic_value(const BigRat& U) {
    return U * U * U * U + 2 * U * U * U + 2 * U * U - 2 * U + 1;
}

CurvePoint phi(const BigRat& U, const BigRat& W) {
    if (W * W != quartic_value(U))
        throw std::invalid_argument("phi: (U, W) is not on the quartic");
    BigRat X = 6 * (3 * U * U + 3 * U + 1 - 3 * W);
    BigRat Y = 54 * (2 * U * U * U + 3 * U * U + 2 * U - 1 - (1 + 2 * U) * W);
    return eprime().point(X, Y);
}

std::pair<BigRat, BigRat> phi_inv(const CurvePoint& q) {
    if (q.is_infinity() || !(q.curve() == eprime()))
        throw std::invalid_argument("phi_inv: expected an affine point of E'");
    const BigRat &X = q.x(), &Y = q.y();
    if (X == -3) throw degenerate_error("phi_inv: pole at X = -3");
    BigRat U = (72 + Y - 3 * X) / (6 * (X + 3));
    BigRat W = (Y * Y + 162 * Y + 6588 - 2 * X * X * X - 9 * X * X) / (36 * (X + 3) * (X + 3));
    if (W * W != quartic_value(U))
        throw invariant_violation("phi_inv: image missed the quartic");
    return {U, W};
}

namespace {

FamilyMember member_from_np(unsigned n, const CurvePoint& np) {
    if (n < 2) throw degenerate_error("family_member: n = 1 gives U = -1, a degenerate triple");
    auto [U, W] = phi_inv(np);
    BigInt u = U.get_num(), v = U.get_den();
    // W = w / v^2 exactly, by gcd(u_n w_n, v_n) = 1
    BigRat wq = W * BigRat(v * v);
    if (wq.get_den() != 1)
        throw invariant_violation("family_member: W denominator is not v^2");
    BigInt w = wq.get_num();
    if (gcd(BigInt(u * w), v) != 1)
        throw invariant_violation("family_member: gcd(uw, v) != 1");
    BigInt beta = u * u - v * v; // signed
    if (beta == 0) throw degenerate_error("family_member: u^2 = v^2");
    PythTriple triple = triple_from_uv(UVParam{u, v});
    Curve222 curve = curve_eab(triple.a, triple.b);
    // witness abscissa -a^3 beta with the sign carried by beta; the ordinate
    // is the nonnegative root of the curve cubic there
    BigInt aa = 2 * u * v;
    BigRat x(-aa * aa * aa * beta);
    auto y = rational_sqrt(curve.rhs(x));
    if (!y)
        throw invariant_violation("family_member: witness ordinate is not rational");
    CurvePoint witness = curve.point(x, *y);
    if (torsion_order(witness))
        throw invariant_violation("family_member: witness has finite order");
    return FamilyMember{n, np, U, W, u, v, w, triple, curve, witness};
}

} // namespace

FamilyMember family_member(unsigned n) {
    if (n < 2) throw degenerate_error("family_member: n must be >= 2");
    CurvePoint p = eprime_generator();
    return member_from_np(n, mul(BigInt(n), p));
}

std::vector<FamilyMember> family_members(unsigned from, unsigned to) {
    if (from < 2) throw degenerate_error("family_members: n must be >= 2");
    std::vector<FamilyMember> out;
    CurvePoint p = eprime_generator();
    CurvePoint np = mul(BigInt(from), p);
    for (unsigned n = from; n <= to; ++n) {
        out.push_back(member_from_np(n, np));
        np = add(np, p);
    }
    return out;
}

bool crucial_identity_check(const BigInt& u, const BigInt& v) {
    if (u == 0 || v == 0) throw degenerate_error("crucial_identity_check: uv = 0");
    if (u * u == v * v) throw degenerate_error("crucial_identity_check: u^2 = v^2");
    BigInt a = 2 * u * v;
    BigInt b = u * u - v * v;
    BigInt a4 = a * a * a * a, b4 = b * b * b * b;
    BigInt x = -a * a * a * b;
    BigInt lhs = x * (x + a4) * (x + b4);
    BigInt base = a * a * a * b * (b - a);
    BigInt quart = u * u * u * u + 2 * u * u * u * v + 2 * u * u * v * v - 2 * u * v * v * v +
                   v * v * v * v;
    return lhs == base * base * quart;
}

std::vector<std::pair<std::size_t, std::size_t>> distinctness_guard(
    const std::vector<FamilyMember>& members) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (iso_quadruple(members[i].triple.a, members[i].triple.b, members[j].triple.a,
                              members[j].triple.b))
                out.emplace_back(i, j);
    return out;
}

} // namespace tripairs
