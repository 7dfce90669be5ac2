#include "tripairs/paramfam.hpp"

#include <stdexcept>

#include "tripairs/errors.hpp"

namespace tripairs {

RatioTriple r1r2_from_uvw(const BigInt& u, const BigInt& v, const BigRat& w) {
    if (u <= v || v < 1) throw std::invalid_argument("r1r2_from_uvw: need u > v >= 1");
    BigRat u2(u * u), v2(v * v);
    BigRat q4 = BigRat(u * u * u * u - v * v * v * v); // u^4 - v^4 > 0
    BigRat two_uv(2 * u * v);
    if (!(w > 0 && w * q4 < two_uv))
        throw std::invalid_argument("r1r2_from_uvw: w outside (0, 2uv/(u^4 - v^4))");
    BigRat b(u2 - v2), c(u2 + v2);
    BigRat r1 = (q4 * w + two_uv) * (-q4 * w + two_uv) / (2 * b * b * c * w);
    BigRat r2 = (q4 * q4 * w * w + two_uv * two_uv) / (2 * b * c * c * w);
    if (r1 <= 0 || r2 <= 0)
        throw invariant_violation("r1r2_from_uvw: positivity failed inside the admissible interval");
    BigRat a = two_uv;
    if (a * a + r1 * r1 * b * b != r2 * r2 * c * c)
        throw invariant_violation("r1r2_from_uvw: defining quadratic failed");
    return RatioTriple{r1, r2, u, v, w};
}

namespace {

BigRat f_of_t(const BigRat& nu_bar, const BigRat& t) {
    return (nu_bar * t * t - 8) / (3 * nu_bar * t * t);
}

void check_h(const HPoint& h) {
    if (h.nu_bar * h.x * h.y * h.S * h.S != (h.x * h.x - 1) * (h.y * h.y - 1))
        throw invariant_violation("HPoint off the surface H");
}

} // namespace

HPoint curve_l_point(const BigRat& nu_bar, const BigRat& t) {
    if (nu_bar == 0 || t == 0) throw std::invalid_argument("curve_l_point: nu_bar, t must be nonzero");
    HPoint h{nu_bar, f_of_t(nu_bar, t), (2 - nu_bar * t * t) / 6,
             -2 * (t * t * nu_bar + 4) / (3 * t * nu_bar)};
    check_h(h);
    return h;
}

Curve222 fiber_curve(const BigRat& nu_bar, const BigRat& t) {
    if (nu_bar == 0 || t == 0) throw std::invalid_argument("fiber_curve: nu_bar, t must be nonzero");
    BigRat f = f_of_t(nu_bar, t);
    if (f == 0 || f == 1 || f == -1)
        throw degenerate_error("fiber_curve: singular fiber (f(t) in {0, 1, -1})");
    BigRat d = nu_bar * (f * f * f - f);
    return Curve222(BigRat(0), d, -d);
}

CurvePoint fibration_point(const BigRat& nu_bar, const BigRat& t) {
    Curve222 fiber = fiber_curve(nu_bar, t);
    BigRat nt = nu_bar * t * t;
    BigRat X = 4 * (nt - 8) * (nt - 2) * (nt - 2) * (nt + 4) / (81 * nu_bar * nu_bar * t * t * t * t * t * t);
    BigRat Y = -8 * (nt - 8) * (nt - 8) * (nt - 2) * (nt - 2) * (nt + 4) * (nt + 4) /
               (729 * nu_bar * nu_bar * nu_bar * t * t * t * t * t * t * t * t * t);
    return fiber.point(X, Y);
}

CurvePoint psi(const HPoint& h, const BigRat& t) {
    Curve222 fiber = fiber_curve(h.nu_bar, t);
    BigRat f = f_of_t(h.nu_bar, t);
    if (h.x != f) throw std::invalid_argument("psi: H-point is not on the fiber x = f(t)");
    BigRat X = h.nu_bar * f * (f * f - 1) * h.y;
    BigRat Y = h.S * h.nu_bar * h.nu_bar * f * f * (f * f - 1) * h.y;
    return fiber.point(X, Y);
}

HPoint psi_inv(const BigRat& nu_bar, const BigRat& t, const CurvePoint& q) {
    Curve222 fiber = fiber_curve(nu_bar, t);
    if (q.is_infinity() || !(q.curve() == fiber))
        throw std::invalid_argument("psi_inv: expected an affine point of the fiber");
    BigRat f = f_of_t(nu_bar, t);
    if (q.x() == 0) throw degenerate_error("psi_inv: X = 0 has no affine preimage");
    BigRat y = q.x() / (nu_bar * f * (f * f - 1));
    BigRat S = q.y() / (nu_bar * f * q.x());
    HPoint h{nu_bar, f, y, S};
    check_h(h);
    return h;
}

HPoint h_point_from_multiple(const BigRat& nu_bar, const BigRat& t, const BigInt& m) {
    CurvePoint p = fibration_point(nu_bar, t);
    return psi_inv(nu_bar, t, mul(m, p));
}

HPair pair_from_h(const HPoint& h) {
    const BigRat &x = h.x, &y = h.y;
    if (x == 0 || x == 1 || x == -1)
        throw degenerate_error("pair_from_h: x in {0, 1, -1} degenerates the first triangle");
    if (y == 0 || y == 1 || y == -1)
        throw degenerate_error("pair_from_h: y in {0, 1, -1} degenerates the second triangle");
    BigRat a = 2 * x, b = x * x - 1, c = x * x + 1;
    BigRat A = 2 * x, B = (y * y - 1) * x / y, C = (y * y + 1) * x / y;
    RationalTriangle first = make_rational_triangle(abs(a), abs(b), abs(c));
    RationalTriangle second = make_rational_triangle(abs(A), abs(B), abs(C));
    BigRat s = h.S * x / (x * x - 1);
    if (B / b != h.nu_bar * s * s)
        throw invariant_violation("pair_from_h: B/b != nu_bar s^2");
    return HPair{first, second, s};
}

DensitySample nu_from_tu(const BigRat& t, const BigRat& u) {
    if (t <= 1) throw std::invalid_argument("nu_from_tu: need t > 1");
    BigRat cap = t * t * (t * t - 1); // u0^2
    if (u <= 0 || u * u >= cap)
        throw std::invalid_argument("nu_from_tu: need 0 < u < sqrt(t^2(t^2 - 1))");
    BigRat den = cap - u * u;
    BigRat nu = 2 * t * (t * t - 1) * u / den;
    BigRat y = t * (t * t - 1) * (cap + u * u) / den;
    Curve222 e_nu(BigRat(0), BigRat(-1), -nu * nu);
    CurvePoint p = e_nu.point(t * t - 1, y);
    if (torsion_order(p))
        throw degenerate_error("nu_from_tu: specialized point is torsion");
    return DensitySample{t, u, nu, p};
}

DensitySample find_nu_in_interval(const BigRat& lo, const BigRat& hi, const BigRat& t) {
    if (!(0 < lo && lo < hi)) throw std::invalid_argument("find_nu_in_interval: need 0 < lo < hi");
    if (t <= 1) throw std::invalid_argument("find_nu_in_interval: need t > 1");
    BigRat cap = t * t * (t * t - 1);
    // nu(u) increases from 0 to +inf on (0, u0); bisect on u
    BigRat ulo = 0, uhi = t * t; // (t^2)^2 > t^2(t^2 - 1), so uhi starts past u0
    for (int iter = 0; iter < 4096; ++iter) {
        BigRat mid = (ulo + uhi) / 2;
        if (mid * mid >= cap) {
            uhi = mid;
            continue;
        }
        BigRat nu = 2 * t * (t * t - 1) * mid / (cap - mid * mid);
        if (nu <= lo)
            ulo = mid;
        else if (nu >= hi)
            uhi = mid;
        else {
            // torsion specializations are isolated points; step past them
            BigRat step = (uhi - mid) / 4096;
            for (int k = 0; k < 64; ++k) {
                BigRat cand = mid + step * k;
                if (cand * cand >= cap) break;
                BigRat nc = 2 * t * (t * t - 1) * cand / (cap - cand * cand);
                if (nc <= lo || nc >= hi) break;
                try {
                    return nu_from_tu(t, cand);
                } catch (const degenerate_error&) {
                }
            }
            uhi = mid; // keep narrowing (unreachable in practice)
        }
    }
    throw invariant_violation("find_nu_in_interval: bisection failed to converge");
}

} // namespace tripairs
