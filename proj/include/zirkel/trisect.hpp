//-----------------------------------------------------------------------------
// Durer's approximate angle trisection (1525): the one-sided minimal chain on
// the chord of the arc, with a full trace of the intermediate points and the
// error in arcseconds against the exact third.
//-----------------------------------------------------------------------------
#pragma once

#include <utility>

#include "zirkel/geometry.hpp"
#include "zirkel/numerics.hpp"

namespace zirkel {

// The chain runs near B, the low end of the arc at 20 degrees; A is the far
// end at 20 + theta. D trisects the chord nearer B; H is the perpendicular
// at D up to the arc; K lies on the chord with |BK| = |BH|; X = K moved
// |KD|/3 back toward D. theta_out is the angle X subtends at O against OB.
struct TrisectionTrace {
    Point A, B, O;
    Point D, H, K, X;
    Real theta_in;       // degrees
    Real theta_out;      // degrees
    Real error_arcsec;   // |theta_in/3 - theta_out| in arcseconds
};

// theta in (0, 180) degrees; larger angles have no chordable arc here.
TrisectionTrace trisect(const Real &theta_deg);

// Both symmetric arc trisection points: l is the compass projection of X
// onto the arc from B; m comes from running the same chain from the A end.
// They are mirror images across the angle bisector.
std::pair<Point, Point> trisect_full(const Real &theta_deg);

} // namespace zirkel
