#include "tripairs/descent2.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tripairs/errors.hpp"

namespace tripairs {

namespace descent_detail {

unsigned class_width(const BigInt& p) { return p == 2 ? 3u : 2u; }

ClassBits class_at_p(const BigRat& q, const BigInt& p) {
    if (q == 0) throw std::invalid_argument("class_at_p: zero has no square class");
    BigInt num = q.get_num(), den = q.get_den();
    BigInt un, ud;
    unsigned long vn = mpz_remove(un.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    unsigned long vd = mpz_remove(ud.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    ClassBits bits = static_cast<ClassBits>((vn + vd) & 1);
    if (p == 2) {
        BigInt m8, inv, u;
        BigInt eight(8);
        mpz_mod(m8.get_mpz_t(), un.get_mpz_t(), eight.get_mpz_t());
        mpz_invert(inv.get_mpz_t(), ud.get_mpz_t(), eight.get_mpz_t());
        u = m8 * inv % 8;
        long r = u.get_si();
        if (r % 4 == 3) bits |= 2;
        if (r == 5 || r == 7) bits |= 4;
    } else {
        BigInt u = un * ud % p; // jacobi(ud^2 * x) = jacobi(x), so ud works as ud^{-1}
        if (mpz_jacobi(u.get_mpz_t(), p.get_mpz_t()) == -1) bits |= 2;
    }
    return bits;
}

ClassBits class_at_r(const BigRat& q) {
    if (q == 0) throw std::invalid_argument("class_at_r: zero has no square class");
    return q < 0 ? 1 : 0;
}

namespace {

bool is_square_qp(const BigRat& q, const BigInt& p) { return class_at_p(q, p) == 0; }

// grow the xor-closed subgroup by g
void close_with(std::set<std::uint16_t>& group, std::uint16_t g) {
    if (group.count(g)) return;
    std::vector<std::uint16_t> old(group.begin(), group.end());
    for (auto e : old) group.insert(static_cast<std::uint16_t>(e ^ g));
    group.insert(g);
}

} // namespace

std::set<std::uint16_t> local_image(const std::array<BigInt, 3>& roots, const BigInt& p) {
    const BigRat e1(roots[0]), e2(roots[1]), e3(roots[2]);
    const unsigned w = class_width(p);
    const std::size_t target = p == 2 ? 8 : 4; // |E(Qp)/2E(Qp)| with full 2-torsion
    auto pack = [&](const BigRat& t1, const BigRat& t2) {
        return static_cast<std::uint16_t>(class_at_p(t1, p) | (class_at_p(t2, p) << w));
    };
    std::set<std::uint16_t> group{0};
    close_with(group, pack((e1 - e2) * (e1 - e3), e1 - e2));
    close_with(group, pack(e2 - e1, (e2 - e1) * (e2 - e3)));
    close_with(group, pack(e3 - e1, e3 - e2));
    if (group.size() >= target) return group;

    // Sample rational x-coordinates of E(Qp) points; the class pair of any
    // point lies in the image, and rational x are dense in Qp.
    BigRat diffs = (e1 - e2) * (e1 - e3) * (e2 - e3);
    long vdisc = static_cast<long>(mpz_remove(BigInt().get_mpz_t(),
                                              BigInt(diffs.get_num()).get_mpz_t(),
                                              p.get_mpz_t()));
    long jlo = p == 2 ? -6 : -4;
    long jhi = vdisc + (p == 2 ? 6 : 3);
    auto try_x = [&](const BigRat& x) {
        if (x == e1 || x == e2 || x == e3) return;
        BigRat t1 = x - e1, t2 = x - e2, t3 = x - e3;
        if (is_square_qp(t1 * t2 * t3, p)) close_with(group, pack(t1, t2));
    };
    const long dens[] = {1, 2, 3, 5, 7, 9, 11};
    for (long radius : {8L, 48L, 240L, 1200L}) {
        for (const BigRat& e : {e1, e2, e3}) {
            for (long j = jlo; j <= jhi && group.size() < target; ++j) {
                BigRat pj;
                if (j >= 0) {
                    BigInt pw;
                    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(j));
                    pj = BigRat(pw);
                } else {
                    BigInt pw;
                    mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(-j));
                    pj = make_rat(1, pw);
                }
                for (long num = 1; num <= radius && group.size() < target; ++num) {
                    if (BigInt(num) % p == 0) continue;
                    for (long den : dens) {
                        if (BigInt(den) % p == 0) continue;
                        BigRat off = make_rat(num, den) * pj;
                        try_x(e + off);
                        try_x(e - off);
                        if (group.size() >= target) break;
                    }
                }
            }
            if (group.size() >= target) break;
        }
        if (group.size() >= target) break;
    }
    if (group.size() != target)
        throw invariant_violation("local_image: sampling did not fill E(Qp)/2E(Qp) at p = " +
                                  to_string(p));
    return group;
}

std::set<std::uint16_t> local_image_r(const std::array<BigInt, 3>& roots) {
    std::array<BigInt, 3> s = roots;
    std::sort(s.begin(), s.end());
    BigRat e1(roots[0]), e2(roots[1]);
    // x beyond the largest root and x in the lower gap carry the two classes
    BigRat x0 = BigRat(s[2]) + 1;
    BigRat x1 = make_rat(s[0] + s[1], 2);
    std::set<std::uint16_t> group;
    for (const BigRat& x : {x0, x1})
        group.insert(static_cast<std::uint16_t>(class_at_r(x - e1) | (class_at_r(x - e2) << 1)));
    return group;
}

} // namespace descent_detail

namespace {

using descent_detail::class_at_p;
using descent_detail::class_at_r;
using descent_detail::class_width;

std::array<BigInt, 3> integral_roots_or_throw(const Curve222& c) {
    if (!c.is_integral())
        throw std::invalid_argument("descent: curve model must have integral roots");
    return c.integral_roots();
}

std::vector<BigInt> prime_union(const BigInt& m, const BigInt& n) {
    std::set<BigInt> ps;
    for (const auto& [p, e] : factorize(m).factors) ps.insert(p);
    for (const auto& [p, e] : factorize(n).factors) ps.insert(p);
    return {ps.begin(), ps.end()};
}

struct SelmerLattice {
    std::vector<BigInt> gens1, gens2; // first entry of each is -1
    std::vector<std::pair<BigInt, BigInt>> pairs;
    int nullity = 0;
};

// Kernel of the stacked local parity checks, as explicit (b1, b2) pairs.
SelmerLattice selmer_lattice(const std::array<BigInt, 3>& roots,
                             const std::vector<BigInt>& bad) {
    const BigInt &e1 = roots[0], &e2 = roots[1], &e3 = roots[2];
    SelmerLattice out;
    out.gens1.push_back(-1);
    for (const auto& p : prime_union(e1 - e2, e1 - e3)) out.gens1.push_back(p);
    out.gens2.push_back(-1);
    for (const auto& p : prime_union(e2 - e1, e2 - e3)) out.gens2.push_back(p);
    const std::size_t n1 = out.gens1.size(), ncols = n1 + out.gens2.size();
    if (ncols > 62) throw invariant_violation("selmer_lattice: too many bad primes");

    std::vector<std::uint64_t> rows;
    auto add_place = [&](unsigned w, const std::set<std::uint16_t>& image,
                         const std::function<descent_detail::ClassBits(const BigRat&)>& cls) {
        const unsigned d = 2 * w;
        // parity checks = orthogonal complement of the image subgroup
        for (std::uint16_t h = 1; h < (1u << d); ++h) {
            bool ok = true;
            for (auto g : image)
                if (__builtin_parity(static_cast<unsigned>(h & g))) { ok = false; break; }
            if (!ok) continue;
            std::uint64_t row = 0;
            for (std::size_t j = 0; j < ncols; ++j) {
                const bool slot2 = j >= n1;
                const BigInt& g = slot2 ? out.gens2[j - n1] : out.gens1[j];
                std::uint16_t code = cls(BigRat(g));
                if (slot2) code = static_cast<std::uint16_t>(code << w);
                if (__builtin_parity(static_cast<unsigned>(h & code))) row |= 1ull << j;
            }
            rows.push_back(row);
        }
    };
    for (const auto& p : bad) {
        auto image = descent_detail::local_image(roots, p);
        add_place(class_width(p), image, [&](const BigRat& q) { return class_at_p(q, p); });
    }
    add_place(1, descent_detail::local_image_r(roots),
              [&](const BigRat& q) { return class_at_r(q); });

    // RREF over F2
    std::vector<std::uint64_t> red;
    std::vector<unsigned> pivots;
    for (auto r : rows) {
        for (std::size_t i = 0; i < red.size(); ++i)
            if (r >> pivots[i] & 1) r ^= red[i];
        if (!r) continue;
        unsigned pv = static_cast<unsigned>(__builtin_ctzll(r));
        for (std::size_t i = 0; i < red.size(); ++i)
            if (red[i] >> pv & 1) red[i] ^= r;
        red.push_back(r);
        pivots.push_back(pv);
    }
    // nullspace basis
    std::vector<std::uint64_t> basis;
    for (unsigned c = 0; c < ncols; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::uint64_t v = 1ull << c;
        for (std::size_t i = 0; i < red.size(); ++i)
            if (red[i] >> c & 1) v |= 1ull << pivots[i];
        basis.push_back(v);
    }
    out.nullity = static_cast<int>(basis.size());
    if (out.nullity < 2 || out.nullity > 20)
        throw invariant_violation("selmer_lattice: implausible Selmer dimension");
    for (std::uint64_t mask = 0; mask < (1ull << basis.size()); ++mask) {
        std::uint64_t sel = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1) sel ^= basis[i];
        BigInt b1 = 1, b2 = 1;
        for (std::size_t j = 0; j < n1; ++j)
            if (sel >> j & 1) b1 *= out.gens1[j];
        for (std::size_t j = n1; j < ncols; ++j)
            if (sel >> j & 1) b2 *= out.gens2[j - n1];
        out.pairs.emplace_back(b1, b2);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

} // namespace

std::vector<BigInt> bad_primes(const Curve222& c) {
    auto roots = integral_roots_or_throw(c);
    std::set<BigInt> ps{BigInt(2)};
    BigInt prod = (roots[0] - roots[1]) * (roots[0] - roots[2]) * (roots[1] - roots[2]);
    for (const auto& p : prime_union(prod, BigInt(1))) ps.insert(p);
    return {ps.begin(), ps.end()};
}

std::vector<std::pair<BigInt, BigInt>> selmer_pairs(const Curve222& c) {
    auto roots = integral_roots_or_throw(c);
    return selmer_lattice(roots, bad_primes(c)).pairs;
}

namespace {

std::optional<CurvePoint> search_point(const Curve222& c, const BigInt& h) {
    const auto& f = c.integral_roots();
    for (BigInt d = 1; d * d <= h; ++d) {
        BigInt dd = d * d;
        for (BigInt m = -h; m <= h; ++m) {
            if (gcd(m, d) != 1) continue;
            BigInt n = (m - f[0] * dd) * (m - f[1] * dd) * (m - f[2] * dd);
            if (n <= 0) continue;
            auto y = exact_sqrt(n);
            if (!y) continue;
            CurvePoint pt = c.point(make_rat(m, dd), make_rat(*y, dd * d));
            if (!torsion_order(pt)) return pt;
        }
    }
    return std::nullopt;
}

} // namespace

SelmerReport rank_bounds(const Curve222& c, const BigInt& search_height,
                         const std::vector<CurvePoint>& injected) {
    auto roots = integral_roots_or_throw(c);
    SelmerReport rep{c, bad_primes(c), {}, 0, 0, {}};
    auto lat = selmer_lattice(roots, rep.bad_primes);
    rep.accepted_pairs = lat.pairs;
    rep.rank_upper = lat.nullity - 2;
    for (const auto& pt : injected) {
        if (!on_curve(c, pt))
            throw std::invalid_argument("rank_bounds: injected point is not on the curve");
        if (!torsion_order(pt)) {
            rep.rank_lower = 1;
            rep.witnesses.push_back(pt);
        }
    }
    if (rep.rank_lower == 0 && rep.rank_upper > 0 && search_height > 0) {
        if (auto pt = search_point(c, search_height)) {
            rep.rank_lower = 1;
            rep.witnesses.push_back(*pt);
        }
    }
    if (rep.rank_lower > rep.rank_upper)
        throw invariant_violation("rank_bounds: witness contradicts the Selmer bound");
    return rep;
}

std::vector<std::pair<PythTriple, SelmerReport>> scan_rank_zero(const BigInt& leg_bound,
                                                                const ScanOptions& opts) {
    auto triples = enumerate_primitive(leg_bound);
    std::vector<std::pair<PythTriple, SelmerReport>> certified;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    unsigned jobs = std::max(1u, opts.jobs);
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= triples.size()) return;
            const PythTriple& t = triples[i];
            if (opts.skip.count({t.a, t.b})) continue;
            auto t0 = std::chrono::steady_clock::now();
            Curve222 curve = curve_eab(t.a, t.b);
            // the skew-similar witness abscissa, when it is a point, gives a
            // free rank lower bound
            std::vector<CurvePoint> inject;
            BigInt a3b = t.a * t.a * t.a * t.b, b3a = t.b * t.b * t.b * t.a;
            for (const BigInt& x0 : {a3b, BigInt(-a3b), b3a, BigInt(-b3a)}) {
                BigRat x(x0);
                auto y = rational_sqrt(curve.rhs(x));
                if (y && *y != 0) inject.push_back(curve.point(x, *y));
            }
            SelmerReport rep = rank_bounds(curve, opts.search_height, inject);
            long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - t0)
                                            .count());
            std::lock_guard<std::mutex> lk(mu);
            if (opts.on_result) opts.on_result(t, rep, ms);
            if (rep.rank_upper == 0) certified.emplace_back(t, rep);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(certified.begin(), certified.end(), [](const auto& l, const auto& r) {
        if (l.first.b != r.first.b) return l.first.b < r.first.b;
        return l.first.a < r.first.a;
    });
    return certified;
}

} // namespace tripairs
