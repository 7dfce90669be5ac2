#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tripairs/ecq.hpp"
#include "tripairs/pythag.hpp"

namespace tripairs {

// The skew-similar case Aa = Bb: the quartic W^2 = U^4 + 2U^3 + 2U^2 - 2U + 1,
// the curve E': Y^2 = (X - 24)(X - 6)(X + 30) with generator P = (42, -216),
// and the family of curves E_{a_n, b_n} with a point of infinite order.

const Curve222& eprime();
CurvePoint eprime_generator();

BigRat quartic_value(const BigRat& U);

// Birational maps between the quartic and E'. phi throws on off-quartic
// input; phi_inv has a pole at X = -3.
CurvePoint phi(const BigRat& U, const BigRat& W);
std::pair<BigRat, BigRat> phi_inv(const CurvePoint& q);

struct FamilyMember {
    unsigned n;
    CurvePoint np;   // nP on E'
    BigRat U, W;     // phi_inv(nP)
    BigInt u, v, w;  // U = u/v, W = w/v^2, gcd(uw, v) = 1, v > 0
    PythTriple triple;
    Curve222 curve;     // E_{a,b}
    CurvePoint witness; // infinite-order point on E_{a,b}
};

// Throws degenerate_error for n = 1 (U = -1 gives u^2 = v^2).
FamilyMember family_member(unsigned n);

// Members for n in [from, to]; the nP chain is shared.
std::vector<FamilyMember> family_members(unsigned from, unsigned to);

// f(-a^3 b) = (a^3 b (b - a))^2 (u^4 + 2u^3 v + 2u^2 v^2 - 2u v^3 + v^4),
// with a = 2uv, b = u^2 - v^2 signed. Must hold identically.
bool crucial_identity_check(const BigInt& u, const BigInt& v);

// Index pairs whose curves are isomorphic (expected empty for small n).
std::vector<std::pair<std::size_t, std::size_t>> distinctness_guard(
    const std::vector<FamilyMember>& members);

} // namespace tripairs
