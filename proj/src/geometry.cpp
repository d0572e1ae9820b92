//-----------------------------------------------------------------------------
// Geometry kernel implementation. Circle-circle uses the center-line frame
// x = (d^2 - r^2 + R^2) / 2d, y = +-sqrt(R^2 - x^2); line-circle solves the
// quadratic along the direction vector. Margins are relative to object scale
// so the kernel behaves uniformly at any working precision.
//-----------------------------------------------------------------------------
#include "zirkel/geometry.hpp"

#include <algorithm>

namespace zirkel {

Point operator+(const Point &a, const Point &b) {
    return {a.x + b.x, a.y + b.y};
}

Point operator-(const Point &a, const Point &b) {
    return {a.x - b.x, a.y - b.y};
}

Point operator*(const Real &s, const Point &p) {
    return {s * p.x, s * p.y};
}

Line::Line(Point a, Point b) : p(std::move(a)), q(std::move(b)) {
    if (distance(p, q) <= eps(6)) {
        throw GeometryError("degenerate line: defining points coincide");
    }
}

Circle::Circle(Point c, Real r) : center(std::move(c)), radius(std::move(r)) {
    if (radius <= eps(6)) {
        throw GeometryError("degenerate circle: nonpositive radius");
    }
}

Real distance(const Point &a, const Point &b) {
    Real dx = a.x - b.x;
    Real dy = a.y - b.y;
    return sqrt(dx * dx + dy * dy);
}

Point midpoint_of(const Point &a, const Point &b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

std::pair<Point, Point> intersect_circle_circle(const Circle &c1,
                                                const Circle &c2) {
    const Real &R = c1.radius;
    const Real &r = c2.radius;
    Real d = distance(c1.center, c2.center);
    Real scale = std::max(std::max(R, r), Real(1));
    Real margin = eps(8) * scale;
    if (d + margin >= R + r || d - margin <= abs(R - r)) {
        // Distinguish the two failure modes for the error message.
        if (abs(d - (R + r)) < margin || abs(d - abs(R - r)) < margin) {
            throw GeometryError("circles are tangent");
        }
        throw GeometryError("circles do not intersect");
    }
    Real x = (d * d - r * r + R * R) / (2 * d);
    Real h2 = R * R - x * x;
    if (h2 <= 0) {
        throw GeometryError("circles are tangent");
    }
    Real h = sqrt(h2);
    Point u = (Real(1) / d) * (c2.center - c1.center);
    Point v(-u.y, u.x); // left of the directed center line
    Point base = c1.center + x * u;
    return {base + h * v, base - h * v};
}

std::pair<Point, Point> intersect_line_circle(const Line &l, const Circle &c) {
    Real len = distance(l.p, l.q);
    Point u = (Real(1) / len) * (l.q - l.p);
    Point w = l.p - c.center;
    // t^2 + 2 b t + cc = 0 along p + t u
    Real b = w.x * u.x + w.y * u.y;
    Real cc = w.x * w.x + w.y * w.y - c.radius * c.radius;
    Real disc = b * b - cc;
    Real margin = eps(8) * std::max(c.radius, Real(1));
    if (disc <= margin * margin) {
        if (disc > -margin * c.radius) {
            throw GeometryError("line is tangent to circle");
        }
        throw GeometryError("line does not meet circle");
    }
    Real s = sqrt(disc);
    Real t1 = -b - s;
    Real t2 = -b + s;
    return {l.p + t1 * u, l.p + t2 * u}; // increasing parameter
}

Point intersect_line_line(const Line &l1, const Line &l2) {
    Point d1 = l1.q - l1.p;
    Point d2 = l2.q - l2.p;
    Real cross = d1.x * d2.y - d1.y * d2.x;
    Real n1 = sqrt(d1.x * d1.x + d1.y * d1.y);
    Real n2 = sqrt(d2.x * d2.x + d2.y * d2.y);
    if (abs(cross) <= eps(8) * n1 * n2) {
        throw GeometryError("lines are parallel or coincident");
    }
    Point w = l2.p - l1.p;
    Real t = (w.x * d2.y - w.y * d2.x) / cross;
    return l1.p + t * d1;
}

Point rotate(const Point &p, const Real &theta_radians, const Point &center) {
    Real c = cos(theta_radians);
    Real s = sin(theta_radians);
    Point v = p - center;
    return {center.x + c * v.x - s * v.y, center.y + s * v.x + c * v.y};
}

Point reflect(const Point &p, const Line &l) {
    Point d = l.q - l.p;
    Real n2 = d.x * d.x + d.y * d.y;
    Point w = p - l.p;
    Real t = (w.x * d.x + w.y * d.y) / n2;
    Point foot = l.p + t * d;
    return {2 * foot.x - p.x, 2 * foot.y - p.y};
}

Line perpendicular_at(const Point &p, const Line &l) {
    Point d = l.q - l.p;
    return Line(p, p + Point(-d.y, d.x));
}

} // namespace zirkel
