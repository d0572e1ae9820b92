//-----------------------------------------------------------------------------
// Richmond constructions in closed form and the constructibility predicate.
//-----------------------------------------------------------------------------
#include "zirkel/modern.hpp"

namespace zirkel {

namespace {

VertexList step_from_p(int n, const Real &phi_rad) {
    VertexList out;
    out.n = n;
    out.exact_regular = true;
    Point p(Real(1), Real(0));
    Point o(Real(0), Real(0));
    for (int k = 0; k < n; ++k)
        out.vertices.push_back(rotate(p, k * phi_rad, o));
    return out;
}

} // namespace

VertexList richmond_pentagon() {
    // angle OAP at A = (0, 1/2) has tangent 2; half of it lands B at
    // tan(x)/2 = cos 72 degrees, the foot of vertex 2.
    Real x = atan(Real(2)) / 2;
    Real bx = tan(x) / 2;
    Point v2(bx, sqrt(1 - bx * bx));
    Real phi = atan2(v2.y, v2.x);
    return step_from_p(5, phi);
}

SeventeenGonPoints richmond_17gon_points() {
    // angle OAP at A = (0, 1/4) has tangent 4; its quarter is two exact
    // bisections.
    Real x = atan(Real(4)) / 4;
    Real bx = tan(x) / 4;
    Real cx = -tan(pi() / 4 - x) / 4;
    // circle on CP as diameter cuts the +y-axis at K; the circle about B
    // through K cuts the x-axis at the feet of vertices 4 and 6
    Real ky = sqrt(-cx);
    Real r = sqrt(bx * bx + ky * ky);
    SeventeenGonPoints p{Point(bx, Real(0)), Point(cx, Real(0)),
                         Point(Real(0), ky), bx + r, bx - r};
    return p;
}

VertexList richmond_17gon() {
    SeventeenGonPoints p = richmond_17gon_points();
    Real theta4 = acos(p.E);
    Real theta6 = acos(p.F);
    Real phi = (theta6 - theta4) / 2;  // 2*pi/17
    return step_from_p(17, phi);
}

Real gauss_cos_2pi_17() {
    Real s17 = sqrt(Real(17));
    Real t1 = sqrt(34 - 2 * s17);
    Real t2 = sqrt(34 + 2 * s17);
    return (-1 + s17 + t1 + 2 * sqrt(17 + 3 * s17 - t1 - 2 * t2)) / 16;
}

ConstructibilityVerdict is_constructible(long n) {
    if (n < 3)
        throw DomainError("is_constructible: n must be >= 3");
    ConstructibilityVerdict v;
    v.n = n;
    long m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++v.power_of_two;
    }
    static const long kFermat[] = {3, 5, 17, 257, 65537};
    for (long f : kFermat) {
        if (m % f == 0) {
            m /= f;
            v.fermat_factors.push_back(f);
            if (m % f == 0) {
                v.obstruction = f;  // repeated Fermat factor
                return v;
            }
        }
    }
    if (m > 1) {
        long p = 3;
        while (p * p <= m && m % p != 0)
            p += 2;
        v.obstruction = (m % p == 0) ? p : m;  // smallest odd prime factor
        return v;
    }
    v.constructible = true;
    return v;
}

} // namespace zirkel
