//-----------------------------------------------------------------------------
// The trisection chain, built on the geometry kernel (perpendicular + circle
// intersection), so the trace is a genuine construction run.
//-----------------------------------------------------------------------------
#include "zirkel/trisect.hpp"

namespace zirkel {

namespace {

Point on_circle_deg(const Real &deg) {
    Real a = deg_to_rad(deg);
    return Point(cos(a), sin(a));
}

// One-sided chain from `near` toward `far` on the unit circle about O.
struct Chain {
    Point D, H, K, X;
};

Chain run_chain(const Point &near, const Point &far) {
    Chain c;
    Real d1 = distance(near, far);
    Point u = (Real(1) / d1) * (far - near);
    c.D = near + (d1 / 3) * u;

    Line chord(near, far);
    Circle arc(Point(Real(0), Real(0)), Real(1));
    auto [h1, h2] = intersect_line_circle(perpendicular_at(c.D, chord), arc);
    c.H = distance(h2, c.D) < distance(h1, c.D) ? h2 : h1;

    Real bh = distance(near, c.H);
    c.K = near + bh * u;
    Real kd = bh - d1 / 3;  // |BH| > |BD|, so K lies beyond D
    c.X = c.K - (kd / 3) * u;
    return c;
}

void check_range(const Real &theta_deg) {
    if (theta_deg <= 0 || theta_deg >= 180)
        throw DomainError("trisect: theta must be in (0, 180) degrees");
}

} // namespace

TrisectionTrace trisect(const Real &theta_deg) {
    check_range(theta_deg);
    TrisectionTrace t;
    t.theta_in = theta_deg;
    t.O = Point(Real(0), Real(0));
    t.B = on_circle_deg(Real(20));
    t.A = on_circle_deg(20 + theta_deg);

    Chain c = run_chain(t.B, t.A);
    t.D = c.D;
    t.H = c.H;
    t.K = c.K;
    t.X = c.X;

    Real cosv = (t.B.x * t.X.x + t.B.y * t.X.y) /
                sqrt(t.X.x * t.X.x + t.X.y * t.X.y);
    t.theta_out = rad_to_deg(acos(cosv));
    t.error_arcsec = abs(theta_deg / 3 - t.theta_out) * 3600;
    return t;
}

std::pair<Point, Point> trisect_full(const Real &theta_deg) {
    check_range(theta_deg);
    Point b = on_circle_deg(Real(20));
    Point a = on_circle_deg(20 + theta_deg);

    Chain from_b = run_chain(b, a);
    Real arc_l = rad_to_deg(2 * asin(distance(b, from_b.X) / 2));
    Point l = on_circle_deg(20 + arc_l);

    Chain from_a = run_chain(a, b);
    Real arc_m = rad_to_deg(2 * asin(distance(a, from_a.X) / 2));
    Point m = on_circle_deg(20 + theta_deg - arc_m);
    return {l, m};
}

} // namespace zirkel
