//-----------------------------------------------------------------------------
// Approximate trisection tests: the full error table, trace invariants,
// monotone error growth, and the two-sided arc marks.
//-----------------------------------------------------------------------------
#include <doctest.h>

#include "expected_values.hpp"
#include "test_util.hpp"
#include "zirkel/trisect.hpp"

using namespace zirkel;
using zt::R;
using zt::check_close;
using zt::check_point;

namespace {

Point pt(const char *const (&xy)[2]) { return Point(R(xy[0]), R(xy[1])); }

Real angle_at_origin(const Point &p) {
    return rad_to_deg(atan2(p.y, p.x));
}

} // namespace

TEST_CASE("error table from 5 to 120 degrees") {
    for (const auto &row : expected::kTrisectTable) {
        CAPTURE(row[0]);
        TrisectionTrace t = trisect(R(row[0]));
        check_close(t.theta_out, R(row[1]), eps(10));
        check_close(t.error_arcsec, R(row[2]), eps(12));
    }
}

TEST_CASE("error grows monotonically with the angle") {
    Real prev = -1;
    for (const auto &row : expected::kTrisectTable) {
        TrisectionTrace t = trisect(R(row[0]));
        CHECK(t.error_arcsec > prev);
        prev = t.error_arcsec;
    }
}

TEST_CASE("published error bounds") {
    // small angles trisect almost exactly
    for (int theta : {5, 10, 20})
        CHECK(trisect(Real(theta)).error_arcsec < R("0.01"));
    CHECK(trisect(Real(60)).error_arcsec < R("1.5"));
    CHECK(trisect(Real(90)).error_arcsec < Real(20));
    CHECK(trisect(Real(100)).error_arcsec < Real(185));
}

TEST_CASE("trace invariants hold for every input") {
    for (int theta = 5; theta < 180; theta += 13) {
        CAPTURE(theta);
        TrisectionTrace t = trisect(Real(theta));
        Real d1 = distance(t.B, t.A);
        Point u = (Real(1) / d1) * (t.A - t.B);

        // D divides the chord at a third, nearer B
        check_point(t.D, t.B + (d1 / 3) * u, eps(8));
        CHECK(distance(t.D, t.B) < distance(t.D, t.A));

        // H is on the arc, foot of the perpendicular erected at D
        check_close(distance(t.H, t.O), Real(1), eps(8));
        Real along = u.x * (t.H.x - t.D.x) + u.y * (t.H.y - t.D.y);
        check_close(along, Real(0), eps(8));

        // the compass swing from B through H lands on the chord at K
        check_close(distance(t.B, t.K), distance(t.B, t.H), eps(8));

        // X walks a third of KD back toward B
        check_close(distance(t.K, t.X), distance(t.K, t.D) / 3, eps(8));

        // the reported angle is measured between OB and OX
        Real measured =
            abs(angle_at_origin(t.X) - angle_at_origin(t.B));
        check_close(measured, t.theta_out, eps(8));
        check_close(abs(Real(theta) / 3 - t.theta_out) * 3600, t.error_arcsec,
                    eps(10));
    }
}

TEST_CASE("frame: the base point sits at 20 degrees") {
    TrisectionTrace t = trisect(Real(100));
    check_point(t.B, Point(cos(deg_to_rad(Real(20))), sin(deg_to_rad(Real(20)))),
                eps(8));
    check_point(t.A,
                Point(cos(deg_to_rad(Real(120))), sin(deg_to_rad(Real(120)))),
                eps(8));
    check_point(t.O, Point(Real(0), Real(0)), Real(0));
}

TEST_CASE("60-degree trace against reference coordinates") {
    TrisectionTrace t = trisect(Real(60));
    check_point(t.D, pt(expected::kTrisect60D), eps(10));
    check_point(t.H, pt(expected::kTrisect60H), eps(10));
    check_point(t.K, pt(expected::kTrisect60K), eps(10));
    check_point(t.X, pt(expected::kTrisect60X), eps(10));
    CHECK(dms_string(t.theta_out) == "19° 59' 59.00005\"");
}

TEST_CASE("100-degree trace against reference coordinates") {
    TrisectionTrace t = trisect(Real(100));
    check_point(t.D, pt(expected::kTrisect100D), eps(10));
    check_point(t.H, pt(expected::kTrisect100H), eps(10));
    check_point(t.K, pt(expected::kTrisect100K), eps(10));
    check_point(t.X, pt(expected::kTrisect100X), eps(10));
    CHECK(dms_string(t.theta_out) == "33° 19' 15.72302\"");
}

TEST_CASE("both arc marks, mirror-symmetric about the bisector") {
    for (int theta : {60, 100, 45}) {
        CAPTURE(theta);
        auto [l, m] = trisect_full(Real(theta));
        check_close(distance(l, Point(Real(0), Real(0))), Real(1), eps(8));
        check_close(distance(m, Point(Real(0), Real(0))), Real(1), eps(8));
        // l is marked from the 20-degree end, m from the far end; together
        // they straddle the bisector symmetrically
        check_close(angle_at_origin(l) + angle_at_origin(m),
                    Real(40 + theta), eps(8));
        CHECK(angle_at_origin(l) < angle_at_origin(m));
    }
    auto [l60, m60] = trisect_full(Real(60));
    check_point(l60, pt(expected::kTrisect60L), eps(10));
    check_point(m60, pt(expected::kTrisect60M), eps(10));
    auto [l100, m100] = trisect_full(Real(100));
    check_point(l100, pt(expected::kTrisect100L), eps(10));
    check_point(m100, pt(expected::kTrisect100M), eps(10));
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(trisect(Real(0)), DomainError);
    CHECK_THROWS_AS(trisect(Real(180)), DomainError);
    CHECK_THROWS_AS(trisect(Real(-30)), DomainError);
    CHECK_THROWS_AS(trisect_full(Real(200)), DomainError);
}
