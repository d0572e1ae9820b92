//-----------------------------------------------------------------------------
// Polygon reports: sides, central/interior angles, and deviation metrics
// against the regular n-gon.
//-----------------------------------------------------------------------------
#include "zirkel/analysis.hpp"

#include <algorithm>

namespace zirkel {

namespace {

int orient(const Point &a, const Point &b, const Point &c) {
    Real cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (cr > 0)
        return 1;
    if (cr < 0)
        return -1;
    return 0;
}

bool segments_cross(const Point &a, const Point &b, const Point &c,
                    const Point &d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

void require_simple(const std::vector<Point> &v) {
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j)
                continue;  // adjacent sides share an endpoint
            if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw ValidationError("report: polygon is self-intersecting");
        }
}

// Positive angle subtended at c by the step p -> q.
Real angle_about(const Point &c, const Point &p, const Point &q) {
    Point u = p - c;
    Point w = q - c;
    Real ang = atan2(u.x * w.y - u.y * w.x, u.x * w.x + u.y * w.y);
    if (ang < 0)
        ang += 2 * pi();
    return rad_to_deg(ang);
}

} // namespace

PolygonReport report(const VertexList &v) {
    const auto &pts = v.vertices;
    size_t n = pts.size();
    if (n < 3)
        throw ValidationError("report: need at least 3 vertices");
    require_simple(pts);

    PolygonReport r;
    r.n = static_cast<int>(n);

    for (size_t i = 0; i < n; ++i)
        r.sides.push_back(distance(pts[i], pts[(i + 1) % n]));

    // circumcircle through three spread vertices, checked against all
    Point c0 = pts[0], c1 = pts[n / 3], c2 = pts[(2 * n) / 3];
    Real ax = 2 * (c1.x - c0.x), ay = 2 * (c1.y - c0.y);
    Real bx = 2 * (c2.x - c0.x), by = 2 * (c2.y - c0.y);
    Real k1 = c1.x * c1.x + c1.y * c1.y - c0.x * c0.x - c0.y * c0.y;
    Real k2 = c2.x * c2.x + c2.y * c2.y - c0.x * c0.x - c0.y * c0.y;
    Real det = ax * by - ay * bx;
    Point center(Real(0), Real(0));
    Real radius = 0;
    r.concyclic = det != 0;
    if (r.concyclic) {
        center = Point((k1 * by - k2 * ay) / det, (ax * k2 - bx * k1) / det);
        radius = distance(c0, center);
        Real tol = eps(precision() - 8) * (radius < 1 ? Real(1) : radius);
        for (const Point &p : pts)
            if (abs(distance(p, center) - radius) > tol) {
                r.concyclic = false;
                break;
            }
    }
    if (!r.concyclic) {
        // fall back to the centroid; radius = mean vertex distance
        center = Point(Real(0), Real(0));
        for (const Point &p : pts)
            center = center + p;
        center = Point(center.x / int(n), center.y / int(n));
        radius = 0;
        for (const Point &p : pts)
            radius += distance(p, center);
        radius /= int(n);
    }

    std::vector<Real> central, interior;
    for (size_t i = 0; i < n; ++i)
        central.push_back(angle_about(center, pts[i], pts[(i + 1) % n]));
    for (size_t i = 0; i < n; ++i) {
        const Point &prev = pts[(i + n - 1) % n];
        const Point &next = pts[(i + 1) % n];
        Point u = pts[i] - prev;
        Point w = next - pts[i];
        Real turn = atan2(u.x * w.y - u.y * w.x, u.x * w.x + u.y * w.y);
        interior.push_back(180 - rad_to_deg(turn));
    }

    Real regular_side = side_from_radius(radius, r.n);
    Real regular_angle = Real(360) / r.n;
    r.max_side_dev = 0;
    for (const Real &s : r.sides)
        r.max_side_dev = (std::max)(r.max_side_dev, Real(abs(s - regular_side)));
    r.max_angle_dev_arcsec = 0;
    for (const Real &a : central)
        r.max_angle_dev_arcsec =
            (std::max)(r.max_angle_dev_arcsec, Real(abs(a - regular_angle) * 3600));

    std::vector<Real> sorted = central;
    std::sort(sorted.begin(), sorted.end());
    r.step_angle_err_arcsec = abs(sorted[(n - 1) / 2] - regular_angle) * 3600;

    Real side_lo = *std::min_element(r.sides.begin(), r.sides.end());
    Real side_hi = *std::max_element(r.sides.begin(), r.sides.end());
    r.equilateral = side_hi - side_lo <= eps(precision() - 10) * side_hi;
    Real int_lo = *std::min_element(interior.begin(), interior.end());
    Real int_hi = *std::max_element(interior.begin(), interior.end());
    r.equiangular = int_hi - int_lo <= eps(precision() - 10) * abs(int_hi);

    for (const Real &a : central)
        r.central_angles.push_back(to_dms(a));
    for (const Real &a : interior)
        r.interior_angles.push_back(to_dms(a));
    return r;
}

std::pair<Real, Real> compare_to_regular(const VertexList &v) {
    PolygonReport r = report(v);
    Real regular_side = side_from_radius(Real(1), r.n);
    Real side_err = 0;
    for (const Real &s : r.sides)
        side_err = (std::max)(side_err, Real(abs(s - regular_side)));
    return {side_err, r.max_angle_dev_arcsec};
}

} // namespace zirkel
