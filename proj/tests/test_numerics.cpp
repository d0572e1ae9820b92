//-----------------------------------------------------------------------------
// Numerics tests: precision control, DMS decomposition and display, chord
// helpers, and the decimal formatting/parsing round trip.
//-----------------------------------------------------------------------------
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zirkel/numerics.hpp"

using namespace zirkel;
using zt::R;
using zt::check_close;

TEST_CASE("precision control") {
    CHECK(precision() == 50);
    CHECK_THROWS_AS(set_precision(29), DomainError);
    CHECK(precision() == 50);
    set_precision(64);
    CHECK(precision() == 64);
    check_close(eps(8), R("1e-56"), R("1e-70"));
    set_precision(50);
    check_close(eps(10), R("1e-40"), R("1e-52"));
}

TEST_CASE("pi at working precision") {
    check_close(pi(), R("3.14159265358979323846264338327950288419716939937511"),
                eps(2));
    check_close(rad_to_deg(deg_to_rad(Real(123))), Real(123), eps(6));
    check_close(deg_to_rad(Real(180)), pi(), eps(4));
}

TEST_CASE("dms decomposition of exact values") {
    DmsAngle a = to_dms(Real(100) / 3);
    CHECK(a.degrees == 33);
    CHECK(a.minutes == 20);
    check_close(a.seconds, Real(0), eps(10));
    CHECK(dms_to_string(a) == "33° 20' 0\"");

    DmsAngle b = to_dms(R("32.669645561111111111111111111111"));
    CHECK(b.degrees == 32);
    CHECK(b.minutes == 40);

    CHECK(dms_to_string(to_dms(Real(90))) == "90° 0' 0\"");
    CHECK_THROWS_AS(to_dms(Real(-1)), DomainError);
}

TEST_CASE("dms display trims and carries") {
    // at most five fractional digits, trailing zeros trimmed
    DmsAngle a{12, 5, R("1.5")};
    CHECK(dms_to_string(a) == "12° 5' 1.5\"");
    DmsAngle b{12, 5, R("1.123456789")};
    CHECK(dms_to_string(b) == "12° 5' 1.12346\"");
    // display rounding carries through minutes and degrees
    DmsAngle c{12, 59, R("59.999997")};
    CHECK(dms_to_string(c) == "13° 0' 0\"");
    CHECK(dms_string(Real(60) - R("1e-9") / 3600) == "60° 0' 0\"");
}

TEST_CASE("dms round trip over random angles") {
    std::mt19937 rng(20260815);
    std::uniform_real_distribution<double> dist(0.0, 360.0);
    for (int i = 0; i < 1000; ++i) {
        Real deg = Real(dist(rng));
        DmsAngle a = to_dms(deg);
        CHECK(a.minutes >= 0);
        CHECK(a.minutes < 60);
        CHECK(a.seconds >= 0);
        CHECK(a.seconds < 60);
        check_close(dms_to_degrees(a), deg, eps(8));
    }
}

TEST_CASE("chord and central angle helpers") {
    // hexagon side equals the radius
    check_close(side_from_radius(Real(1), 6), Real(1), eps(8));
    check_close(side_from_radius(Real(2), 4), R("2") * sqrt(Real(2)), eps(8));
    check_close(chord_central_angle(Real(1), Real(1)), Real(60), eps(8));
    // inverse pair
    for (int n = 3; n <= 17; ++n) {
        Real s = side_from_radius(Real(1), n);
        check_close(chord_central_angle(s, Real(1)), Real(360) / n, eps(8));
    }
    CHECK_THROWS_AS(side_from_radius(Real(1), 2), DomainError);
    CHECK_THROWS_AS(side_from_radius(Real(-1), 5), DomainError);
    CHECK_THROWS_AS(chord_central_angle(Real(3), Real(1)), DomainError);
    CHECK_THROWS_AS(chord_central_angle(Real(0), Real(1)), DomainError);
}

TEST_CASE("format_real is fixed-width and deterministic") {
    CHECK(format_real(Real(0)) == "0");
    CHECK(format_real(Real(1), 5) == "1.0000");
    CHECK(format_real(Real(1), 5, true) == "1");
    CHECK(format_real(Real(-1) / 4, 6) == "-0.250000");
    CHECK(format_real(Real(-1) / 4, 6, true) == "-0.25");
    // 25 significant digits by default
    CHECK(format_real(sqrt(Real(2))) == "1.414213562373095048801689");
    CHECK(format_real(Real(1) / 3, 10) == "0.3333333333");
}

TEST_CASE("parse_real accepts decimals and exact rationals") {
    check_close(R("0.25"), Real(1) / 4, Real(0));
    check_close(R("-3.5e-2"), Real(-7) / 200, eps(5));
    check_close(R("23/48"), Real(23) / 48, Real(0));
    CHECK_THROWS_AS(parse_real("1/0"), DomainError);
    CHECK_THROWS_AS(parse_real("abc"), DomainError);
    CHECK_THROWS_AS(parse_real(""), DomainError);
}

TEST_CASE("format/parse round trip over random values") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> mag(-6.0, 6.0);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        Real x = Real(mant(rng)) * pow(Real(10), Real(mag(rng)));
        Real back = parse_real(format_real(x, 40));
        check_close(back, x, eps(14) * std::max(Real(1), abs(x)));
    }
}
