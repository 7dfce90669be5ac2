#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tripairs/ecq.hpp"
#include "tripairs/pythag.hpp"

namespace tripairs {

// Complete 2-descent for curves with integral roots. Candidate classes
// (b1, b2) of squarefree integers are sieved by membership in the local
// image of E(Qv)/2E(Qv) inside (Qv*/Qv*^2)^2 at every bad place; the
// survivors form the 2-Selmer group and log2 |Sel| - 2 bounds the rank.

struct SelmerReport {
    Curve222 curve;
    std::vector<BigInt> bad_primes;
    std::vector<std::pair<BigInt, BigInt>> accepted_pairs;
    int rank_upper = 0;
    int rank_lower = 0;
    std::vector<CurvePoint> witnesses;
};

// 2 together with all primes dividing (e1-e2)(e1-e3)(e2-e3). Throws on a
// non-integral model.
std::vector<BigInt> bad_primes(const Curve222& c);

std::vector<std::pair<BigInt, BigInt>> selmer_pairs(const Curve222& c);

// rank_upper from the Selmer sieve; rank_lower = 1 when a non-torsion point
// turns up in the bounded search (x = m/d^2, |m| <= h, d^2 <= h) or among
// the injected points.
SelmerReport rank_bounds(const Curve222& c, const BigInt& search_height,
                         const std::vector<CurvePoint>& injected = {});

struct ScanOptions {
    BigInt search_height = 256;
    unsigned jobs = 1;
    // invoked for every scanned triple, rank-0 or not (cache/summary hook);
    // called under a lock, in no particular order
    std::function<void(const PythTriple&, const SelmerReport&, long elapsed_ms)> on_result;
    // keys (a, b) to skip (already cached)
    std::set<std::pair<BigInt, BigInt>> skip;
};

// Runs the descent on E_{a,b} for every primitive triple with both legs
// below leg_bound; returns the certified rank-0 cases.
std::vector<std::pair<PythTriple, SelmerReport>> scan_rank_zero(const BigInt& leg_bound,
                                                                const ScanOptions& opts = {});

namespace descent_detail {

// A square class of Qv* packed into bits: bit 0 = odd valuation,
// bit 1 = unit part is a non-residue (odd p) / unit = 3 mod 4 (p = 2),
// bit 2 = unit in {5, 7} mod 8 (p = 2 only). At the real place bit 0 = sign.
using ClassBits = std::uint8_t;

ClassBits class_at_p(const BigRat& q, const BigInt& p);
ClassBits class_at_r(const BigRat& q);

// Local image of E(Qp)/2E(Qp) as the set of packed pair-classes
// (slot 2 shifted left by the per-place bit width). Exposed for tests.
std::set<std::uint16_t> local_image(const std::array<BigInt, 3>& roots, const BigInt& p);
std::set<std::uint16_t> local_image_r(const std::array<BigInt, 3>& roots);

unsigned class_width(const BigInt& p);

} // namespace descent_detail

} // namespace tripairs
