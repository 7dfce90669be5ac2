#pragma once

#include <vector>

#include "tripairs/ecq.hpp"
#include "tripairs/pythag.hpp"

namespace tripairs {

struct TriplePair {
    PythTriple first;  // (a', b', c')
    PythTriple second; // (A', B', C')
    BigRat mu, nu;     // A'/a', B'/b'
};

struct PairCurve {
    Curve222 curve;  // roots (0, -A^2 b^2, -a^2 B^2)
    CurvePoint base; // Q* = (a^2 A^2, a^2 A^2 c C)
};

// True iff A*a = B*b.
bool is_skew_similar(const PythTriple& t1, const PythTriple& t2);

// Throws degenerate_error when the curve would be singular (similar triangles).
PairCurve build_pair_curve(const PythTriple& t1, const PythTriple& t2);

// The pair obtained from 2k Q* (k = 0 returns the input pair itself).
// Throws skew_similar_error when Aa = Bb.
TriplePair derive_pair(const PythTriple& t1, const PythTriple& t2, unsigned k);

// First `count` derived pairs, deduplicated up to simultaneous similarity and
// distinct from the input pair.
std::vector<TriplePair> enumerate_pairs(const PythTriple& t1, const PythTriple& t2, unsigned count);

// Similarity of pairs: both primitive normalizations coincide.
bool pairs_similar(const TriplePair& p, const TriplePair& q);

} // namespace tripairs
