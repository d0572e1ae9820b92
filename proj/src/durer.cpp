//-----------------------------------------------------------------------------
// Closed-form generators, metadata and script plumbing for the Durer figures.
//-----------------------------------------------------------------------------
#include "zirkel/durer.hpp"

#include <map>

#include "zirkel/corpus.hpp"
#include "zirkel/script.hpp"

namespace zirkel {

namespace {

struct FigureInfo {
    FigureId id;
    const char *name;
    int figure_number;
    int sides;
    bool exact;
};

const FigureInfo kFigures[] = {
    {FigureId::Hexagon9, "hexagon-9", 9, 6, true},
    {FigureId::Triangle10, "triangle-10", 10, 3, true},
    {FigureId::Heptagon11, "heptagon-11", 11, 7, false},
    {FigureId::Fourteen12, "fourteen-12", 12, 14, false},
    {FigureId::TwentyEight12, "twentyeight-12", 12, 28, false},
    {FigureId::Square13, "square-13", 13, 4, true},
    {FigureId::Octagon14, "octagon-14", 14, 8, true},
    {FigureId::Sixteen14, "sixteen-14", 14, 16, true},
    {FigureId::PentagonExact15, "pentagon-exact-15", 15, 5, true},
    {FigureId::Decagon15, "decagon-15", 15, 10, true},
    {FigureId::PentagonRusty16, "pentagon-rusty-16", 16, 5, false},
    {FigureId::Fifteen17, "fifteen-17", 17, 15, true},
    {FigureId::Nine18, "nine-18", 18, 9, false},
    {FigureId::Eleven19, "eleven-19", 19, 11, false},
    {FigureId::Thirteen19, "thirteen-19", 19, 13, false},
};

const FigureInfo &info(FigureId fig) {
    for (const auto &f : kFigures)
        if (f.id == fig)
            return f;
    throw ValidationError("unknown figure id");
}

Point on_circle_deg(const Real &deg) {
    // Exact coordinates on the cardinal angles: trig of the rounded radian
    // value would smear cos 90deg into ~1e-(P-1) residue in the tables.
    Real r = fmod(deg, Real(360));
    if (r < 0)
        r += 360;
    if (r == 0)
        return Point(Real(1), Real(0));
    if (r == 90)
        return Point(Real(0), Real(1));
    if (r == 180)
        return Point(Real(-1), Real(0));
    if (r == 270)
        return Point(Real(0), Real(-1));
    Real a = deg_to_rad(deg);
    return Point(cos(a), sin(a));
}

std::vector<Point> regular(int n) {
    std::vector<Point> out;
    out.reserve(n);
    for (int k = 0; k < n; ++k)
        out.push_back(on_circle_deg(90 + Real(360) * k / n));
    return out;
}

// Vertex 1 at the top, half the steps counterclockwise, half clockwise, the
// closing chord at the bottom (the layout of the published 11/13-gon tables).
std::vector<Point> symmetric(int n, const Real &gamma_deg) {
    int half = (n - 1) / 2;
    std::vector<Point> out;
    out.reserve(n);
    for (int k = 0; k <= half; ++k)
        out.push_back(on_circle_deg(90 + k * gamma_deg));
    for (int k = 0; k < half; ++k)
        out.push_back(on_circle_deg(90 - (half - k) * gamma_deg));
    return out;
}

std::vector<Real> heptagon_angles() {
    Real g = chord_central_angle(sqrt(Real(3)) / 2, Real(1));
    std::vector<Real> a;
    for (int k = 0; k <= 3; ++k)
        a.push_back(90 + k * g);
    for (int k = 3; k >= 1; --k)
        a.push_back(90 - k * g);
    return a;
}

// Interleave each arc's midpoint after its start: the arc-bisection doubling.
std::vector<Real> doubled(const std::vector<Real> &angles) {
    std::vector<Real> out;
    out.reserve(angles.size() * 2);
    for (size_t i = 0; i < angles.size(); ++i) {
        Real a = angles[i];
        Real b = angles[(i + 1) % angles.size()];
        if (b <= a)
            b += 360;
        out.push_back(a);
        out.push_back((a + b) / 2);
    }
    return out;
}

std::vector<Point> from_angles(const std::vector<Real> &angles) {
    std::vector<Point> out;
    out.reserve(angles.size());
    for (const Real &a : angles)
        out.push_back(on_circle_deg(a));
    return out;
}

// The rusty pentagon chain in its raw frame (a = {0,0}, b = {1,0}, unit
// opening everywhere): h is the upper cut of the 45-degree line from
// e = {-1/2, -sqrt(3)/2} through g = {1/2, 1 - sqrt(3)/2} with the circle
// about b, i its mirror, k the upper apex one opening from both h and i.
struct RustyRaw {
    Point a, b, h, i, k;
};

RustyRaw rusty_raw() {
    Real s3 = sqrt(Real(3));
    Real xh = (1 + s3 + sqrt(6 * s3 - 4)) / 4;
    Real yh = xh + (1 - s3) / 2;
    Real half = Real(1) / 2;
    RustyRaw r;
    r.a = Point(Real(0), Real(0));
    r.b = Point(Real(1), Real(0));
    r.h = Point(xh, yh);
    r.i = Point(1 - xh, yh);
    r.k = Point(half, yh + sqrt(1 - (xh - half) * (xh - half)));
    return r;
}

Real interior_angle(const Point &prev, const Point &at, const Point &next) {
    Point u = prev - at;
    Point v = next - at;
    Real dot = u.x * v.x + u.y * v.y;
    Real nn = sqrt(u.x * u.x + u.y * u.y) * sqrt(v.x * v.x + v.y * v.y);
    return rad_to_deg(acos(dot / nn));
}

// Side of the rusty pentagon after scaling its apex triangle {k, a, b} to
// circumradius 1 (the transfer scale of the 15-gon's approximate variant).
Real rusty_unit_side() {
    RustyRaw r = rusty_raw();
    Real la = distance(r.b, r.k);
    Real lb = distance(r.a, r.k);
    Real lc = distance(r.a, r.b);
    Point u = r.b - r.a;
    Point v = r.k - r.a;
    Real area = abs(u.x * v.y - u.y * v.x) / 2;
    Real circumradius = la * lb * lc / (4 * area);
    return lc / circumradius;
}

std::vector<Point> nine_vertices() {
    NineGonPoints p = nine_gon_points();
    Point bottom(Real(0), Real(-1));
    Real r120 = deg_to_rad(Real(120));
    Real r240 = deg_to_rad(Real(240));
    Point o(Real(0), Real(0));
    return {
        rotate(bottom, r120, o), p.f,
        p.e,                     rotate(bottom, r240, o),
        p.p1,                    rotate(p.e, r120, o),
        bottom,                  rotate(p.f, r240, o),
        rotate(p.e, r240, o),
    };
}

Real thirteen_edge(ThirteenVariant variant) {
    switch (variant) {
    case ThirteenVariant::Half: return Real(1) / 2;
    case ThirteenVariant::MinusOneThirtySecond: return Real(15) / 32;
    case ThirteenVariant::Hunrath: return Real(23) / 48;
    }
    throw ValidationError("unknown thirteen-gon variant");
}

} // namespace

VertexList durer_polygon(FigureId fig, std::optional<ThirteenVariant> variant,
                         bool fifteen_rusty_side) {
    if (variant && fig != FigureId::Thirteen19)
        throw ValidationError("variant is only valid with thirteen-19");
    if (fifteen_rusty_side && fig != FigureId::Fifteen17)
        throw ValidationError("the rusty-side flag is only valid with fifteen-17");

    VertexList out;
    out.n = figure_sides(fig);
    out.exact_regular = figure_exact(fig) && !fifteen_rusty_side;

    switch (fig) {
    case FigureId::Hexagon9: out.vertices = regular(6); break;
    case FigureId::Triangle10: out.vertices = regular(3); break;
    case FigureId::Heptagon11:
        out.vertices = symmetric(7, chord_central_angle(sqrt(Real(3)) / 2, Real(1)));
        break;
    case FigureId::Fourteen12:
        out.vertices = from_angles(doubled(heptagon_angles()));
        break;
    case FigureId::TwentyEight12:
        out.vertices = from_angles(doubled(doubled(heptagon_angles())));
        break;
    case FigureId::Square13: out.vertices = regular(4); break;
    case FigureId::Octagon14: out.vertices = regular(8); break;
    case FigureId::Sixteen14: out.vertices = regular(16); break;
    case FigureId::PentagonExact15: out.vertices = regular(5); break;
    case FigureId::Decagon15: out.vertices = regular(10); break;
    case FigureId::PentagonRusty16: {
        RustyRaw r = rusty_raw();
        VertexList raw;
        raw.vertices = {r.k, r.i, r.a, r.b, r.h};
        raw.n = 5;
        raw.exact_regular = false;
        return normalize_to_convention(raw);
    }
    case FigureId::Fifteen17:
        if (fifteen_rusty_side) {
            Real gamma5 = chord_central_angle(rusty_unit_side(), Real(1));
            out.vertices = symmetric(15, 60 - gamma5 / 2);
        } else {
            out.vertices = regular(15);
        }
        break;
    case FigureId::Nine18: out.vertices = nine_vertices(); break;
    case FigureId::Eleven19:
        out.vertices = symmetric(11, chord_central_angle(Real(9) / 16, Real(1)));
        break;
    case FigureId::Thirteen19: {
        Real edge = thirteen_edge(variant.value_or(ThirteenVariant::Hunrath));
        out.vertices = symmetric(13, chord_central_angle(edge, Real(1)));
        break;
    }
    }
    return out;
}

RustyAngles pentagon_rusty_angles() {
    Real s3 = sqrt(Real(3));
    Real alpha = 135 - rad_to_deg(asin(s3 * sin(deg_to_rad(Real(15)))));
    RustyRaw r = rusty_raw();
    Real beta = interior_angle(r.b, r.h, r.k);
    Real gamma = 540 - 2 * alpha - 2 * beta;
    return {to_dms(alpha), to_dms(beta), to_dms(gamma)};
}

NineGonPoints nine_gon_points() {
    Real s3 = sqrt(Real(3));
    Real s35 = sqrt(Real(35));
    Real s105 = sqrt(Real(105));
    NineGonPoints p;
    p.f = Point((-s3 + s35) / 12, (1 + s105) / 12);
    p.e = Point(-p.f.x, p.f.y);
    p.p1 = Point(-s35 / 6, -Real(1) / 6);
    return p;
}

ThirteenReport thirteen_gon_report(ThirteenVariant variant) {
    Real edge = thirteen_edge(variant);
    Real gamma = chord_central_angle(edge, Real(1));
    Real closing = 360 - 12 * gamma;
    return {edge, 2 * sin(deg_to_rad(closing) / 2)};
}

VertexList normalize_to_convention(const VertexList &v) {
    if (v.vertices.size() < 3)
        throw DomainError("normalize_to_convention: fewer than 3 vertices");
    size_t n = v.vertices.size();
    const Point &p0 = v.vertices[0];
    const Point &p1 = v.vertices[n / 3];
    const Point &p2 = v.vertices[(2 * n) / 3];

    // circumcenter of three spread vertices
    Real ax = 2 * (p1.x - p0.x), ay = 2 * (p1.y - p0.y);
    Real bx = 2 * (p2.x - p0.x), by = 2 * (p2.y - p0.y);
    Real c1 = p1.x * p1.x + p1.y * p1.y - p0.x * p0.x - p0.y * p0.y;
    Real c2 = p2.x * p2.x + p2.y * p2.y - p0.x * p0.x - p0.y * p0.y;
    Real det = ax * by - ay * bx;
    VertexList out = v;

    bool concyclic = det != 0;
    Point center(Real(0), Real(0));
    Real radius = 0;
    if (concyclic) {
        center = Point((c1 * by - c2 * ay) / det, (ax * c2 - bx * c1) / det);
        radius = distance(p0, center);
        Real tol = eps(precision() - 8) * (radius < 1 ? Real(1) : radius);
        for (const Point &p : v.vertices)
            if (abs(distance(p, center) - radius) > tol) {
                concyclic = false;
                break;
            }
    }

    if (concyclic) {
        Real rot = pi() / 2 - atan2(p0.y - center.y, p0.x - center.x);
        Point o(Real(0), Real(0));
        for (size_t i = 0; i < n; ++i) {
            Point q = v.vertices[i] - center;
            q = Point(q.x / radius, q.y / radius);
            out.vertices[i] = rotate(q, rot, o);
        }
    } else {
        // equilateral, non-concyclic (the rusty pentagon): scale the side to
        // the regular side for radius 1, then translate vertex 1 to {0,1}.
        Real side = distance(v.vertices[0], v.vertices[1]);
        Real f = side_from_radius(Real(1), static_cast<int>(n)) / side;
        Point shift = Point(Real(0), Real(1)) - f * v.vertices[0];
        for (size_t i = 0; i < n; ++i)
            out.vertices[i] = f * v.vertices[i] + shift;
    }
    return out;
}

const std::vector<FigureId> &all_figures() {
    static const std::vector<FigureId> ids = [] {
        std::vector<FigureId> v;
        for (const auto &f : kFigures)
            v.push_back(f.id);
        return v;
    }();
    return ids;
}

std::string figure_name(FigureId fig) { return info(fig).name; }

FigureId figure_from_name(const std::string &name) {
    for (const auto &f : kFigures)
        if (name == f.name)
            return f.id;
    throw ValidationError("unknown figure id '" + name + "'");
}

int figure_number(FigureId fig) { return info(fig).figure_number; }
int figure_sides(FigureId fig) { return info(fig).sides; }
bool figure_exact(FigureId fig) { return info(fig).exact; }

const char *corpus_text(const std::string &name) {
    for (int i = 0; i < kCorpusCount; ++i)
        if (name == kCorpus[i].name)
            return kCorpus[i].text;
    return nullptr;
}

const std::string &figure_script_text(FigureId fig) {
    static std::map<FigureId, std::string> cache;
    auto it = cache.find(fig);
    if (it == cache.end()) {
        const char *text = corpus_text(figure_name(fig));
        if (!text)
            throw ValidationError("no shipped script for '" + figure_name(fig) + "'");
        it = cache.emplace(fig, text).first;
    }
    return it->second;
}

ConstructionScript figure_script(FigureId fig) {
    return parse(figure_script_text(fig));
}

std::vector<std::string> figure_vertex_names(FigureId fig) {
    if (fig == FigureId::PentagonRusty16)
        return {"k", "i", "a", "b", "h"};
    std::vector<std::string> names;
    for (int i = 1; i <= figure_sides(fig); ++i)
        names.push_back("v" + std::to_string(i));
    return names;
}

VertexList vertices_from_script(FigureId fig) {
    PointRegistry reg = execute(figure_script(fig));
    VertexList out;
    out.n = figure_sides(fig);
    out.exact_regular = figure_exact(fig);
    for (const std::string &name : figure_vertex_names(fig))
        out.vertices.push_back(reg.point_at(name));
    if (fig == FigureId::PentagonRusty16)
        return normalize_to_convention(out);
    return out;
}

} // namespace zirkel
