#include "tripairs/ecq.hpp"

#include <algorithm>
#include <stdexcept>

#include "tripairs/errors.hpp"

namespace tripairs {

Curve222::Curve222(BigRat e1, BigRat e2, BigRat e3)
    : e1_(std::move(e1)), e2_(std::move(e2)), e3_(std::move(e3)) {
    if (e1_ == e2_ || e1_ == e3_ || e2_ == e3_)
        throw degenerate_error("Curve222: repeated root, curve is singular");
    a2_ = -(e1_ + e2_ + e3_);
    a4_ = e1_ * e2_ + e1_ * e3_ + e2_ * e3_;
    a6_ = -(e1_ * e2_ * e3_);
    scale_ = lcm(lcm(e1_.get_den(), e2_.get_den()), e3_.get_den());
    BigRat s2(scale_ * scale_);
    int_roots_ = {BigInt(BigRat(e1_ * s2).get_num()), BigInt(BigRat(e2_ * s2).get_num()),
                  BigInt(BigRat(e3_ * s2).get_num())};
}

bool Curve222::is_integral() const { return scale_ == 1; }

BigRat Curve222::rhs(const BigRat& x) const { return (x - e1_) * (x - e2_) * (x - e3_); }

CurvePoint Curve222::infinity() const {
    return CurvePoint(std::make_shared<const Curve222>(*this));
}

CurvePoint Curve222::point(const BigRat& x, const BigRat& y) const {
    if (!on_curve(*this, x, y))
        throw std::invalid_argument("Curve222::point: (x, y) is not on the curve");
    return CurvePoint(std::make_shared<const Curve222>(*this), x, y);
}

bool Curve222::operator==(const Curve222& other) const {
    return e1_ == other.e1_ && e2_ == other.e2_ && e3_ == other.e3_;
}

const BigRat& CurvePoint::x() const {
    if (infinity_) throw std::logic_error("CurvePoint::x: point at infinity");
    return x_;
}

const BigRat& CurvePoint::y() const {
    if (infinity_) throw std::logic_error("CurvePoint::y: point at infinity");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& other) const {
    if (!(*curve_ == *other.curve_)) return false;
    if (infinity_ || other.infinity_) return infinity_ == other.infinity_;
    return x_ == other.x_ && y_ == other.y_;
}

bool on_curve(const Curve222& c, const BigRat& x, const BigRat& y) {
    return y * y == c.rhs(x);
}

bool on_curve(const Curve222& c, const CurvePoint& p) {
    if (!(c == p.curve())) return false;
    if (p.is_infinity()) return true;
    return on_curve(c, p.x(), p.y());
}

namespace {

void require_same_curve(const CurvePoint& p, const CurvePoint& q) {
    if (!(p.curve() == q.curve()))
        throw std::invalid_argument("points lie on different curves");
}

} // namespace

CurvePoint neg(const CurvePoint& p) {
    if (p.is_infinity()) return p;
    return p.curve().point(p.x(), -p.y());
}

CurvePoint add(const CurvePoint& p, const CurvePoint& q) {
    require_same_curve(p, q);
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Curve222& c = p.curve();
    const BigRat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    if (x1 == x2 && y1 == -y2) return c.infinity();
    BigRat lam;
    if (x1 == x2)
        lam = (3 * x1 * x1 + 2 * c.a2() * x1 + c.a4()) / (2 * y1);
    else
        lam = (y2 - y1) / (x2 - x1);
    BigRat x3 = lam * lam - c.a2() - x1 - x2;
    BigRat y3 = lam * (x1 - x3) - y1;
    return c.point(x3, y3);
}

CurvePoint mul(const BigInt& n, const CurvePoint& p) {
    if (n < 0) return mul(-n, neg(p));
    CurvePoint acc = p.curve().infinity();
    CurvePoint base = p;
    BigInt k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
        k >>= 1;
        if (k > 0) base = add(base, base);
    }
    return acc;
}

std::optional<unsigned> torsion_order(const CurvePoint& p) {
    if (p.is_infinity()) return 1;
    const Curve222& c = p.curve();
    // Nagell-Lutz on the integral model: torsion points have integer
    // coordinates there, so a fractional coordinate certifies infinite order.
    const BigInt& lam = c.integral_scale();
    auto integral_coords = [&](const CurvePoint& q) {
        BigRat xi = q.x() * lam * lam;
        BigRat yi = q.y() * lam * lam * lam;
        return xi.get_den() == 1 && yi.get_den() == 1;
    };
    if (!integral_coords(p)) return std::nullopt;
    CurvePoint acc = p;
    for (unsigned m = 1; m <= 16; ++m) {
        if (acc.is_infinity()) return m;
        if (m < 16) {
            if (!integral_coords(acc)) return std::nullopt;
            acc = add(acc, p);
        }
    }
    return std::nullopt;
}

BigRat j_invariant(const Curve222& c) {
    const BigRat &e1 = c.e1(), &e2 = c.e2(), &e3 = c.e3();
    BigRat c4 = 16 * (e1 * e1 + e2 * e2 + e3 * e3 - e1 * e2 - e1 * e3 - e2 * e3);
    BigRat d12 = e1 - e2, d13 = e1 - e3, d23 = e2 - e3;
    BigRat disc = 16 * d12 * d12 * d13 * d13 * d23 * d23;
    return c4 * c4 * c4 / disc;
}

bool curves_isomorphic(const Curve222& c1, const Curve222& c2) {
    // x -> u^2 x + r maps roots to roots; try every root matching and check
    // that the scaling factor is the square of a rational.
    std::array<BigRat, 3> e = {c1.e1(), c1.e2(), c1.e3()};
    std::array<BigRat, 3> f = {c2.e1(), c2.e2(), c2.e3()};
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        const BigRat &f1 = f[idx[0]], &f2 = f[idx[1]], &f3 = f[idx[2]];
        BigRat s = (f2 - f1) / (e[1] - e[0]);
        if (s <= 0) continue;
        if (f3 - f1 != s * (e[2] - e[0])) continue;
        if (rational_sqrt(s)) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

Curve222 curve_eab(const BigInt& a, const BigInt& b) {
    BigInt a4 = a * a * a * a, b4 = b * b * b * b;
    return Curve222(BigRat(0), BigRat(-a4), BigRat(-b4));
}

bool iso_quadruple(const BigInt& a, const BigInt& b, const BigInt& A, const BigInt& B) {
    if (a <= 0 || b <= 0 || A <= 0 || B <= 0)
        throw std::invalid_argument("iso_quadruple: inputs must be positive");
    bool crit = (A * b - a * B) * (a * A - b * B) == 0;
#ifndef NDEBUG
    if (crit != curves_isomorphic(curve_eab(a, b), curve_eab(A, B)))
        throw invariant_violation("iso_quadruple: criterion disagrees with the isomorphism oracle");
#endif
    return crit;
}

} // namespace tripairs
