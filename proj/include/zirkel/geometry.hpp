//-----------------------------------------------------------------------------
// Geometry kernel: points, lines (two defining points, directed), circles,
// the three intersection primitives with deterministic result ordering, and
// rigid transforms. Tangency and near-tangency are loud errors, never silent
// single-point results.
//-----------------------------------------------------------------------------
#pragma once

#include "zirkel/numerics.hpp"

#include <utility>

namespace zirkel {

struct Point {
    Real x;
    Real y;
    Point() : x(0), y(0) {}
    Point(Real px, Real py) : x(std::move(px)), y(std::move(py)) {}
};

Point operator+(const Point &a, const Point &b);
Point operator-(const Point &a, const Point &b);
Point operator*(const Real &s, const Point &p);

// Directed line through two distinct points p -> q.
struct Line {
    Point p;
    Point q;
    Line(Point a, Point b);
};

struct Circle {
    Point center;
    Real radius;
    Circle(Point c, Real r);
};

Real distance(const Point &a, const Point &b);
Point midpoint_of(const Point &a, const Point &b);

// Both intersection points of two circles. The first returned point lies to
// the left of the directed center line c1.center -> c2.center. Disjoint,
// nested, or (near-)tangent circles raise GeometryError.
std::pair<Point, Point> intersect_circle_circle(const Circle &c1,
                                                const Circle &c2);

// Both intersection points of a line and a circle, ordered by increasing
// parameter along the directed line. Misses and tangencies raise.
std::pair<Point, Point> intersect_line_circle(const Line &l, const Circle &c);

// Intersection point of two non-parallel lines.
Point intersect_line_line(const Line &l1, const Line &l2);

Point rotate(const Point &p, const Real &theta_radians, const Point &center);
Point reflect(const Point &p, const Line &l);

// Line through p perpendicular to l (p need not lie on l).
Line perpendicular_at(const Point &p, const Line &l);

} // namespace zirkel
