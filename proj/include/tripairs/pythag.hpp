#pragma once

#include <functional>
#include <vector>

#include "tripairs/exactmath.hpp"

namespace tripairs {

struct PythTriple {
    BigInt a, b, c;
    bool primitive = false;
};

// Validates a^2 + b^2 = c^2 with positive entries; computes the primitivity flag.
PythTriple make_triple(const BigInt& a, const BigInt& b, const BigInt& c);

// Divides out gcd(a, b, c).
PythTriple primitive_normalization(const PythTriple& t);

// Signed (u, v) parametrization: legs 2uv and u^2 - v^2.
struct UVParam {
    BigInt u, v;
};

struct RationalTriangle {
    BigRat p, q, h; // legs and hypotenuse, p^2 + q^2 = h^2
};

RationalTriangle make_rational_triangle(const BigRat& p, const BigRat& q, const BigRat& h);

// (|2uv|, |u^2 - v^2|, u^2 + v^2). Throws degenerate_error when u^2 = v^2
// or uv = 0.
PythTriple triple_from_uv(const UVParam& p);

// Clears denominators by the least common denominator of all three sides.
PythTriple scale_to_integer(const RationalTriangle& t, bool normalize = false);

// All primitive triples with max leg < leg_bound, each once, ordered by
// (max leg, min leg); emitted as (smaller leg, larger leg, hypotenuse).
std::vector<PythTriple> enumerate_primitive(const BigInt& leg_bound);
void for_each_primitive(const BigInt& leg_bound, const std::function<void(const PythTriple&)>& fn);

// Counting under the two readings of "a < b < N".
long count_primitive_legs_below(const BigInt& bound);
long count_primitive_hypotenuse_below(const BigInt& bound);

} // namespace tripairs
