#pragma once

#include <utility>

#include "tripairs/ecq.hpp"
#include "tripairs/pythag.hpp"

namespace tripairs {

// The catheti-ratio parametrization (r1, r2), the surface
// H: nu_bar x y S^2 = (x^2 - 1)(y^2 - 1) with its rational curve L and
// elliptic fibration, and the density construction for
// E_nu: y^2 = x(x + 1)(x + nu^2).

struct RatioTriple {
    BigRat r1, r2;
    BigInt u, v;
    BigRat w;
};

struct HPoint {
    BigRat nu_bar;
    BigRat x, y, S;
};

struct DensitySample {
    BigRat t, u;
    BigRat nu;
    CurvePoint point; // (t^2 - 1, y(u)) on E_nu
};

// Positive (r1, r2) with a^2 + r1^2 b^2 = r2^2 c^2 for (a,b,c) = (2uv,
// u^2 - v^2, u^2 + v^2). Requires u > v >= 1 and 0 < w < 2uv/(u^4 - v^4).
RatioTriple r1r2_from_uvw(const BigInt& u, const BigInt& v, const BigRat& w);

// The point of the rational curve L at parameter t; lies on H.
HPoint curve_l_point(const BigRat& nu_bar, const BigRat& t);

// The fiber curve Y^2 = X(X - d)(X + d) with d = nu_bar (f(t)^3 - f(t)).
Curve222 fiber_curve(const BigRat& nu_bar, const BigRat& t);

// The distinguished point of the fiber coming from L.
CurvePoint fibration_point(const BigRat& nu_bar, const BigRat& t);

// The fiber map H -> fiber and its inverse (x = f(t) fixed throughout).
CurvePoint psi(const HPoint& h, const BigRat& t);
HPoint psi_inv(const BigRat& nu_bar, const BigRat& t, const CurvePoint& q);

// A new H-point from the multiple m P of the fibration point.
HPoint h_point_from_multiple(const BigRat& nu_bar, const BigRat& t, const BigInt& m);

// Two rational right triangles with A = a and B/b = nu_bar s^2.
struct HPair {
    RationalTriangle first, second;
    BigRat s;
};
HPair pair_from_h(const HPoint& h);

// nu(t, u) > 0 with non-torsion point (t^2 - 1, y(u)) on E_nu. Requires
// t > 1 and 0 < u with u^2 < t^2(t^2 - 1).
DensitySample nu_from_tu(const BigRat& t, const BigRat& u);

// Some sample with lo < nu < hi, by binary search over u at fixed t.
DensitySample find_nu_in_interval(const BigRat& lo, const BigRat& hi, const BigRat& t = BigRat(2));

} // namespace tripairs
