#include "tripairs/pairgen.hpp"

#include "tripairs/errors.hpp"

namespace tripairs {

bool is_skew_similar(const PythTriple& t1, const PythTriple& t2) {
    return t2.a * t1.a == t2.b * t1.b;
}

PairCurve build_pair_curve(const PythTriple& t1, const PythTriple& t2) {
    const BigInt &a = t1.a, &b = t1.b, &A = t2.a, &B = t2.b;
    Curve222 curve(BigRat(0), BigRat(-A * A * b * b), BigRat(-a * a * B * B));
    BigRat qx(a * a * A * A);
    BigRat qy(a * a * A * A * t1.c * t2.c);
    return PairCurve{curve, curve.point(qx, qy)};
}

TriplePair derive_pair(const PythTriple& t1, const PythTriple& t2, unsigned k) {
    if (is_skew_similar(t1, t2))
        throw skew_similar_error(
            "derive_pair: Aa = Bb, Q* is torsion; use the skew-similar family instead");
    PairCurve pc = build_pair_curve(t1, t2);
    CurvePoint r = k == 0 ? pc.base : mul(BigInt(2 * k), pc.base);
    const BigInt &a = t1.a, &b = t1.b, &A = t2.a, &B = t2.b;
    BigRat u = r.x() / BigRat(a * a * A * A);
    auto s = rational_sqrt(u);
    auto t = rational_sqrt(BigRat(a * a) * u + BigRat(b * b));
    auto rr = rational_sqrt(BigRat(A * A) * u + BigRat(B * B));
    if (!s || !t || !rr)
        throw invariant_violation("derive_pair: 2E(Q) point failed square extraction");
    RationalTriangle first = make_rational_triangle(BigRat(a) * *s, BigRat(b), *t);
    RationalTriangle second = make_rational_triangle(BigRat(A) * *s, BigRat(B), *rr);
    // scale both triangles by one common factor so the cross ratios survive
    BigInt d = lcm(lcm(first.p.get_den(), first.h.get_den()),
                   lcm(second.p.get_den(), second.h.get_den()));
    BigRat dr(d);
    PythTriple f = make_triple(BigRat(first.p * dr).get_num(), BigRat(first.q * dr).get_num(),
                               BigRat(first.h * dr).get_num());
    PythTriple g = make_triple(BigRat(second.p * dr).get_num(), BigRat(second.q * dr).get_num(),
                               BigRat(second.h * dr).get_num());
    TriplePair out{f, g, make_rat(A, a), make_rat(B, b)};
    if (make_rat(g.a, f.a) != out.mu || make_rat(g.b, f.b) != out.nu)
        throw invariant_violation("derive_pair: ratio verification failed");
    return out;
}

bool pairs_similar(const TriplePair& p, const TriplePair& q) {
    PythTriple p1 = primitive_normalization(p.first), p2 = primitive_normalization(p.second);
    PythTriple q1 = primitive_normalization(q.first), q2 = primitive_normalization(q.second);
    return p1.a == q1.a && p1.b == q1.b && p1.c == q1.c && p2.a == q2.a && p2.b == q2.b &&
           p2.c == q2.c;
}

std::vector<TriplePair> enumerate_pairs(const PythTriple& t1, const PythTriple& t2,
                                        unsigned count) {
    std::vector<TriplePair> out;
    TriplePair original = derive_pair(t1, t2, 0);
    for (unsigned k = 1; out.size() < count; ++k) {
        TriplePair cand = derive_pair(t1, t2, k);
        bool fresh = !pairs_similar(cand, original);
        for (const auto& seen : out)
            if (pairs_similar(cand, seen)) fresh = false;
        if (fresh) out.push_back(std::move(cand));
    }
    return out;
}

} // namespace tripairs
