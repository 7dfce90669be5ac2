#pragma once

#include <array>
#include <memory>
#include <optional>

#include "tripairs/exactmath.hpp"

namespace tripairs {

class CurvePoint;

// Elliptic curve y^2 = (x - e1)(x - e2)(x - e3) with three distinct rational
// roots. Every curve in this project arrives in this fully split shape.
class Curve222 {
public:
    Curve222(BigRat e1, BigRat e2, BigRat e3);

    const BigRat& e1() const { return e1_; }
    const BigRat& e2() const { return e2_; }
    const BigRat& e3() const { return e3_; }

    // Coefficients of y^2 = x^3 + a2 x^2 + a4 x + a6.
    const BigRat& a2() const { return a2_; }
    const BigRat& a4() const { return a4_; }
    const BigRat& a6() const { return a6_; }

    // Canonical integral model: x -> scale^2 x, y -> scale^3 y sends this
    // curve to one with the returned integer roots.
    const std::array<BigInt, 3>& integral_roots() const { return int_roots_; }
    const BigInt& integral_scale() const { return scale_; }
    bool is_integral() const;

    // Right-hand side (x - e1)(x - e2)(x - e3).
    BigRat rhs(const BigRat& x) const;

    CurvePoint infinity() const;
    CurvePoint point(const BigRat& x, const BigRat& y) const; // throws if off curve

    bool operator==(const Curve222& other) const;

private:
    BigRat e1_, e2_, e3_;
    BigRat a2_, a4_, a6_;
    std::array<BigInt, 3> int_roots_;
    BigInt scale_;
};

class CurvePoint {
public:
    bool is_infinity() const { return infinity_; }
    const BigRat& x() const;
    const BigRat& y() const;
    const Curve222& curve() const { return *curve_; }

    bool operator==(const CurvePoint& other) const;

private:
    friend class Curve222;
    explicit CurvePoint(std::shared_ptr<const Curve222> c) : curve_(std::move(c)), infinity_(true) {}
    CurvePoint(std::shared_ptr<const Curve222> c, BigRat x, BigRat y)
        : curve_(std::move(c)), infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    std::shared_ptr<const Curve222> curve_;
    bool infinity_;
    BigRat x_, y_;
};

bool on_curve(const Curve222& c, const CurvePoint& p);
bool on_curve(const Curve222& c, const BigRat& x, const BigRat& y);

// Chord-tangent group law; throws std::invalid_argument on mismatched curves.
CurvePoint add(const CurvePoint& p, const CurvePoint& q);
CurvePoint neg(const CurvePoint& p);
CurvePoint mul(const BigInt& n, const CurvePoint& p);

// Exact order if p is torsion, nullopt for infinite order. Torsion on these
// curves is Z2 x Z2n with n <= 4, so multiples up to 16 decide.
std::optional<unsigned> torsion_order(const CurvePoint& p);

BigRat j_invariant(const Curve222& c);

// Exact Q-isomorphism test: some permutation of roots matches under
// x -> u^2 x + r with rational u. Used as the oracle for iso_quadruple.
bool curves_isomorphic(const Curve222& c1, const Curve222& c2);

// E_{a,b}: y^2 = x(x + a^4)(x + b^4).
Curve222 curve_eab(const BigInt& a, const BigInt& b);

// Closed-form criterion for E_{a,b} = E_{A,B} with positive inputs:
// (Ab - aB)(aA - bB) = 0. Cross-checked against curves_isomorphic.
bool iso_quadruple(const BigInt& a, const BigInt& b, const BigInt& A, const BigInt& B);

} // namespace tripairs
