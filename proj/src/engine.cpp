//-----------------------------------------------------------------------------
// Script validation, execution, macro expansion, and the fixed-compass audit.
// Execution is strictly sequential and side-effect free, so a script always
// replays to bitwise-identical results at a fixed precision.
//-----------------------------------------------------------------------------
#include "zirkel/engine.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace zirkel {

bool operator==(const Selector &a, const Selector &b) {
    return a.mode == b.mode && a.ref == b.ref;
}

bool operator==(const ConstructionStep &a, const ConstructionStep &b) {
    return a.kind == b.kind && a.output == b.output && a.inputs == b.inputs &&
           a.x_text == b.x_text && a.y_text == b.y_text &&
           a.selector == b.selector && a.branch == b.branch &&
           a.angle_text == b.angle_text && a.provenance == b.provenance;
}

bool operator==(const ConstructionScript &a, const ConstructionScript &b) {
    return a.rusty == b.rusty && a.steps == b.steps;
}

//-----------------------------------------------------------------------------
// Registry
//-----------------------------------------------------------------------------
void PointRegistry::insert(const std::string &name, GeomObject obj) {
    objects_.insert_or_assign(name, std::move(obj));
}

bool PointRegistry::contains(const std::string &name) const {
    return objects_.count(name) != 0;
}

const GeomObject &PointRegistry::at(const std::string &name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) {
        throw ValidationError("unknown name '" + name + "'");
    }
    return it->second;
}

const Point &PointRegistry::point_at(const std::string &name) const {
    const GeomObject &o = at(name);
    if (!std::holds_alternative<Point>(o)) {
        throw ValidationError("name '" + name + "' is not a point");
    }
    return std::get<Point>(o);
}

const Line &PointRegistry::line_at(const std::string &name) const {
    const GeomObject &o = at(name);
    if (!std::holds_alternative<Line>(o)) {
        throw ValidationError("name '" + name + "' is not a line");
    }
    return std::get<Line>(o);
}

const Circle &PointRegistry::circle_at(const std::string &name) const {
    const GeomObject &o = at(name);
    if (!std::holds_alternative<Circle>(o)) {
        throw ValidationError("name '" + name + "' is not a circle");
    }
    return std::get<Circle>(o);
}

//-----------------------------------------------------------------------------
// Validation
//-----------------------------------------------------------------------------
namespace {

enum class NameKind { PointName, LineName, CircleName };

bool valid_identifier(const std::string &s) {
    if (s.empty()) {
        return false;
    }
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

NameKind output_kind(StepKind k) {
    switch (k) {
    case StepKind::LineThrough:
        return NameKind::LineName;
    case StepKind::CircleThrough:
    case StepKind::CircleRadius:
        return NameKind::CircleName;
    default:
        return NameKind::PointName;
    }
}

const char *kind_word(NameKind k) {
    switch (k) {
    case NameKind::PointName:
        return "point";
    case NameKind::LineName:
        return "line";
    default:
        return "circle";
    }
}

struct NameTable {
    std::map<std::string, NameKind> kinds;

    void require(const std::string &step, const std::string &name,
                 NameKind want) const {
        auto it = kinds.find(name);
        if (it == kinds.end()) {
            throw ValidationError("step '" + step + "': reference to '" + name +
                                  "' before it is defined");
        }
        if (it->second != want) {
            throw ValidationError("step '" + step + "': '" + name +
                                  "' is not a " + kind_word(want));
        }
    }

    void require_object(const std::string &step,
                        const std::string &name) const {
        auto it = kinds.find(name);
        if (it == kinds.end()) {
            throw ValidationError("step '" + step + "': reference to '" + name +
                                  "' before it is defined");
        }
        if (it->second == NameKind::PointName) {
            throw ValidationError("step '" + step + "': '" + name +
                                  "' is a point, expected a line or circle");
        }
    }
};

void check_literal(const std::string &step, const std::string &text) {
    try {
        parse_real(text);
    } catch (const Error &e) {
        throw ValidationError("step '" + step + "': bad number literal '" +
                              text + "': " + e.what());
    }
}

void check_arity(const ConstructionStep &s, std::size_t want) {
    if (s.inputs.size() != want) {
        throw ValidationError("step '" + s.output + "': expected " +
                              std::to_string(want) + " inputs, got " +
                              std::to_string(s.inputs.size()));
    }
}

} // namespace

void validate(const ConstructionScript &script) {
    NameTable table;
    for (const ConstructionStep &s : script.steps) {
        if (!valid_identifier(s.output)) {
            throw ValidationError("invalid name '" + s.output + "'");
        }
        if (table.kinds.count(s.output)) {
            throw ValidationError("duplicate name '" + s.output + "'");
        }
        switch (s.kind) {
        case StepKind::Given:
            check_arity(s, 0);
            check_literal(s.output, s.x_text);
            check_literal(s.output, s.y_text);
            break;
        case StepKind::LineThrough:
        case StepKind::CircleThrough:
        case StepKind::Midpoint:
            check_arity(s, 2);
            table.require(s.output, s.inputs[0], NameKind::PointName);
            table.require(s.output, s.inputs[1], NameKind::PointName);
            break;
        case StepKind::CircleRadius:
            check_arity(s, 3);
            for (const std::string &in : s.inputs) {
                table.require(s.output, in, NameKind::PointName);
            }
            break;
        case StepKind::Intersect:
            check_arity(s, 2);
            table.require_object(s.output, s.inputs[0]);
            table.require_object(s.output, s.inputs[1]);
            if (s.selector.mode == SelectorMode::Near ||
                s.selector.mode == SelectorMode::Far) {
                table.require(s.output, s.selector.ref, NameKind::PointName);
            }
            break;
        case StepKind::Trisect3:
            check_arity(s, 2);
            table.require(s.output, s.inputs[0], NameKind::PointName);
            table.require(s.output, s.inputs[1], NameKind::PointName);
            if (s.branch != 1 && s.branch != 2) {
                throw ValidationError("step '" + s.output +
                                      "': trisect3 branch must be .1 or .2");
            }
            break;
        case StepKind::PerpFoot:
            check_arity(s, 2);
            table.require(s.output, s.inputs[0], NameKind::PointName);
            table.require(s.output, s.inputs[1], NameKind::LineName);
            break;
        case StepKind::Rotate:
            check_arity(s, 2);
            table.require(s.output, s.inputs[0], NameKind::PointName);
            table.require(s.output, s.inputs[1], NameKind::PointName);
            check_literal(s.output, s.angle_text);
            break;
        }
        table.kinds[s.output] = output_kind(s.kind);
    }
}

//-----------------------------------------------------------------------------
// Execution
//-----------------------------------------------------------------------------
namespace {

const char *selector_word(SelectorMode m) {
    switch (m) {
    case SelectorMode::Upper:
        return "upper";
    case SelectorMode::Lower:
        return "lower";
    case SelectorMode::Left:
        return "left";
    case SelectorMode::Right:
        return "right";
    case SelectorMode::Near:
        return "near";
    case SelectorMode::Far:
        return "far";
    case SelectorMode::First:
        return "first";
    default:
        return "second";
    }
}

// Picks the candidate with the larger key; ambiguous if the keys are closer
// than the tie tolerance.
Point pick_by_key(const Point &a, const Point &b, const Real &ka,
                  const Real &kb, const Selector &sel) {
    if (abs(ka - kb) <= eps(10)) {
        throw GeometryError(std::string("ambiguous selector '") +
                            selector_word(sel.mode) +
                            "': candidates tie within tolerance");
    }
    return ka > kb ? a : b;
}

Point apply_selector(const std::vector<Point> &cands, const Selector &sel,
                     const PointRegistry &reg) {
    if (cands.size() == 1) {
        if (sel.mode == SelectorMode::Second) {
            throw GeometryError(
                "selector 'second' on a single-point intersection");
        }
        return cands[0];
    }
    const Point &a = cands[0];
    const Point &b = cands[1];
    switch (sel.mode) {
    case SelectorMode::Upper:
        return pick_by_key(a, b, a.y, b.y, sel);
    case SelectorMode::Lower:
        return pick_by_key(a, b, -a.y, -b.y, sel);
    case SelectorMode::Left:
        return pick_by_key(a, b, -a.x, -b.x, sel);
    case SelectorMode::Right:
        return pick_by_key(a, b, a.x, b.x, sel);
    case SelectorMode::Near: {
        const Point &r = reg.point_at(sel.ref);
        return pick_by_key(a, b, -distance(a, r), -distance(b, r), sel);
    }
    case SelectorMode::Far: {
        const Point &r = reg.point_at(sel.ref);
        return pick_by_key(a, b, distance(a, r), distance(b, r), sel);
    }
    case SelectorMode::First:
        return a;
    default:
        return b;
    }
}

Point eval_intersect(const ConstructionStep &s, const PointRegistry &reg) {
    const GeomObject &o1 = reg.at(s.inputs[0]);
    const GeomObject &o2 = reg.at(s.inputs[1]);
    std::vector<Point> cands;
    if (std::holds_alternative<Circle>(o1) &&
        std::holds_alternative<Circle>(o2)) {
        auto [p, q] =
            intersect_circle_circle(std::get<Circle>(o1), std::get<Circle>(o2));
        cands = {p, q};
    } else if (std::holds_alternative<Line>(o1) &&
               std::holds_alternative<Line>(o2)) {
        cands = {intersect_line_line(std::get<Line>(o1), std::get<Line>(o2))};
    } else {
        // Mixed: candidates are ordered along the line either way.
        const Line &l = std::holds_alternative<Line>(o1) ? std::get<Line>(o1)
                                                         : std::get<Line>(o2);
        const Circle &c = std::holds_alternative<Circle>(o1)
                              ? std::get<Circle>(o1)
                              : std::get<Circle>(o2);
        auto [p, q] = intersect_line_circle(l, c);
        cands = {p, q};
    }
    return apply_selector(cands, s.selector, reg);
}

Point perp_foot_value(const Point &p, const Line &l) {
    Point d = l.q - l.p;
    Real n2 = d.x * d.x + d.y * d.y;
    Point w = p - l.p;
    Real t = (w.x * d.x + w.y * d.y) / n2;
    Point foot = l.p + t * d;
    if (distance(p, foot) <= eps(8) * std::max(Real(1), sqrt(n2))) {
        throw GeometryError("perpendicular foot undefined: point lies on the "
                            "line (the two-circle construction degenerates)");
    }
    return foot;
}

GeomObject eval_step(const ConstructionStep &s, const PointRegistry &reg) {
    switch (s.kind) {
    case StepKind::Given:
        return Point(parse_real(s.x_text), parse_real(s.y_text));
    case StepKind::LineThrough:
        return Line(reg.point_at(s.inputs[0]), reg.point_at(s.inputs[1]));
    case StepKind::CircleThrough: {
        const Point &c = reg.point_at(s.inputs[0]);
        return Circle(c, distance(c, reg.point_at(s.inputs[1])));
    }
    case StepKind::CircleRadius:
        return Circle(reg.point_at(s.inputs[0]),
                      distance(reg.point_at(s.inputs[1]),
                               reg.point_at(s.inputs[2])));
    case StepKind::Intersect:
        return eval_intersect(s, reg);
    case StepKind::Midpoint:
        return midpoint_of(reg.point_at(s.inputs[0]),
                           reg.point_at(s.inputs[1]));
    case StepKind::Trisect3: {
        const Point &a = reg.point_at(s.inputs[0]);
        const Point &b = reg.point_at(s.inputs[1]);
        Real third = Real(1) / 3;
        return s.branch == 1 ? a + third * (b - a)
                             : a + (2 * third) * (b - a);
    }
    case StepKind::PerpFoot:
        return perp_foot_value(reg.point_at(s.inputs[0]),
                               reg.line_at(s.inputs[1]));
    default: { // Rotate
        Real theta = deg_to_rad(parse_real(s.angle_text));
        return rotate(reg.point_at(s.inputs[0]), theta,
                      reg.point_at(s.inputs[1]));
    }
    }
}

} // namespace

PointRegistry execute(const ConstructionScript &script) {
    validate(script);
    PointRegistry reg;
    for (const ConstructionStep &s : script.steps) {
        try {
            reg.insert(s.output, eval_step(s, reg));
        } catch (const GeometryError &e) {
            throw GeometryError("step '" + s.output + "': " + e.what());
        }
    }
    return reg;
}

//-----------------------------------------------------------------------------
// Macro expansion
//-----------------------------------------------------------------------------
namespace {

struct Expander {
    std::vector<ConstructionStep> steps;
    std::set<std::string> used;

    std::string fresh(const std::string &base, int &counter) {
        for (;;) {
            std::string name = base + "__" + std::to_string(++counter);
            if (!used.count(name)) {
                used.insert(name);
                return name;
            }
        }
    }

    ConstructionStep &emit(StepKind kind, std::string output,
                           std::vector<std::string> inputs,
                           const std::string &prov) {
        ConstructionStep s;
        s.kind = kind;
        s.output = std::move(output);
        s.inputs = std::move(inputs);
        s.provenance = prov;
        steps.push_back(std::move(s));
        return steps.back();
    }

    // Vesica bisection: the common chord of the two circles through each
    // other's centers crosses ab at the midpoint.
    void expand_midpoint(const std::string &a, const std::string &b,
                         const std::string &out, const std::string &base,
                         int &counter, const std::string &prov) {
        std::string c1 = fresh(base, counter);
        std::string c2 = fresh(base, counter);
        std::string p1 = fresh(base, counter);
        std::string p2 = fresh(base, counter);
        std::string l1 = fresh(base, counter);
        std::string l2 = fresh(base, counter);
        emit(StepKind::CircleThrough, c1, {a, b}, prov);
        emit(StepKind::CircleThrough, c2, {b, a}, prov);
        emit(StepKind::Intersect, p1, {c1, c2}, prov).selector = {
            SelectorMode::First, ""};
        emit(StepKind::Intersect, p2, {c1, c2}, prov).selector = {
            SelectorMode::Second, ""};
        emit(StepKind::LineThrough, l1, {p1, p2}, prov);
        emit(StepKind::LineThrough, l2, {a, b}, prov);
        emit(StepKind::Intersect, out, {l1, l2}, prov).selector = {
            SelectorMode::First, ""};
    }

    // Similar-triangle trisection: lay off |ab| three times along the ray
    // a->u (u the vesica apex), then bring the far mark back to b through a
    // parallelogram; the parallel through u cuts ab at (2a+b)/3.
    void expand_trisect(const std::string &a, const std::string &b, int branch,
                        const std::string &out, const std::string &prov) {
        int counter = 0;
        std::string c1 = fresh(out, counter);
        std::string c2 = fresh(out, counter);
        std::string u = fresh(out, counter);
        std::string cu = fresh(out, counter);
        std::string ray = fresh(out, counter);
        std::string e2 = fresh(out, counter);
        std::string ce = fresh(out, counter);
        std::string e3 = fresh(out, counter);
        std::string ka = fresh(out, counter);
        std::string kb = fresh(out, counter);
        std::string pp = fresh(out, counter);
        std::string par = fresh(out, counter);
        std::string ab = fresh(out, counter);
        emit(StepKind::CircleThrough, c1, {a, b}, prov);
        emit(StepKind::CircleThrough, c2, {b, a}, prov);
        emit(StepKind::Intersect, u, {c1, c2}, prov).selector = {
            SelectorMode::First, ""};
        emit(StepKind::CircleThrough, cu, {u, a}, prov);
        emit(StepKind::LineThrough, ray, {a, u}, prov);
        emit(StepKind::Intersect, e2, {ray, cu}, prov).selector = {
            SelectorMode::Far, a};
        emit(StepKind::CircleThrough, ce, {e2, u}, prov);
        emit(StepKind::Intersect, e3, {ray, ce}, prov).selector = {
            SelectorMode::Far, a};
        emit(StepKind::CircleRadius, ka, {u, e3, b}, prov);
        emit(StepKind::CircleRadius, kb, {b, e3, u}, prov);
        emit(StepKind::Intersect, pp, {ka, kb}, prov).selector = {
            SelectorMode::Far, e3};
        emit(StepKind::LineThrough, par, {u, pp}, prov);
        emit(StepKind::LineThrough, ab, {a, b}, prov);
        if (branch == 1) {
            emit(StepKind::Intersect, out, {par, ab}, prov).selector = {
                SelectorMode::First, ""};
        } else {
            std::string t1 = fresh(out, counter);
            emit(StepKind::Intersect, t1, {par, ab}, prov).selector = {
                SelectorMode::First, ""};
            expand_midpoint(t1, b, out, out, counter, prov);
        }
    }

    // Reflect p across l through the two circles centered on l's defining
    // points, then cut l with the line p -> p'.
    void expand_perp_foot(const std::string &p, const std::string &lname,
                          const std::string &la, const std::string &lb,
                          const std::string &out, const std::string &prov) {
        int counter = 0;
        std::string c1 = fresh(out, counter);
        std::string c2 = fresh(out, counter);
        std::string mirror = fresh(out, counter);
        std::string drop = fresh(out, counter);
        emit(StepKind::CircleThrough, c1, {la, p}, prov);
        emit(StepKind::CircleThrough, c2, {lb, p}, prov);
        emit(StepKind::Intersect, mirror, {c1, c2}, prov).selector = {
            SelectorMode::Far, p};
        emit(StepKind::LineThrough, drop, {p, mirror}, prov);
        emit(StepKind::Intersect, out, {drop, lname}, prov).selector = {
            SelectorMode::First, ""};
    }
};

} // namespace

ConstructionScript expand_macros(const ConstructionScript &script) {
    validate(script);

    bool has_rotate =
        std::any_of(script.steps.begin(), script.steps.end(),
                    [](const ConstructionStep &s) {
                        return s.kind == StepKind::Rotate;
                    });
    PointRegistry reg;
    if (has_rotate) {
        reg = execute(script);
    }

    // Line definitions by name, for the perpendicular-foot expansion.
    std::map<std::string, const ConstructionStep *> lines;

    Expander ex;
    for (const ConstructionStep &s : script.steps) {
        ex.used.insert(s.output);
    }
    for (const ConstructionStep &s : script.steps) {
        if (s.kind == StepKind::LineThrough) {
            lines[s.output] = &s;
        }
        switch (s.kind) {
        case StepKind::Midpoint: {
            int counter = 0;
            ex.expand_midpoint(s.inputs[0], s.inputs[1], s.output, s.output,
                               counter, "midpoint " + s.output);
            break;
        }
        case StepKind::Trisect3:
            ex.expand_trisect(s.inputs[0], s.inputs[1], s.branch, s.output,
                              "trisect3 " + s.output);
            break;
        case StepKind::PerpFoot: {
            const ConstructionStep *ldef = lines.at(s.inputs[1]);
            ex.expand_perp_foot(s.inputs[0], s.inputs[1], ldef->inputs[0],
                                ldef->inputs[1], s.output,
                                "perp_foot " + s.output);
            break;
        }
        case StepKind::Rotate: {
            // Rotation by an arbitrary angle is not a finite compass-and-
            // straightedge primitive; materialize the computed point with
            // enough digits that re-execution reproduces it well inside the
            // equivalence tolerance.
            const Point &p = reg.point_at(s.output);
            ConstructionStep g;
            g.kind = StepKind::Given;
            g.output = s.output;
            g.x_text = format_real(p.x, static_cast<int>(precision()) + 10,
                                   true);
            g.y_text = format_real(p.y, static_cast<int>(precision()) + 10,
                                   true);
            g.provenance = "rotate " + s.output;
            ex.steps.push_back(std::move(g));
            break;
        }
        default:
            ex.steps.push_back(s);
            break;
        }
    }

    ConstructionScript out;
    out.rusty = script.rusty;
    out.steps = std::move(ex.steps);
    return out;
}

//-----------------------------------------------------------------------------
// Fixed-compass audit
//-----------------------------------------------------------------------------
std::vector<std::string> validate_rusty(const ConstructionScript &script) {
    ConstructionScript flat = expand_macros(script);
    PointRegistry reg = execute(flat);

    // Rotate steps were materialized by the expansion; recover their compass
    // openings |center - p| from the original step definitions.
    std::map<std::string, const ConstructionStep *> rotates;
    for (const ConstructionStep &s : script.steps) {
        if (s.kind == StepKind::Rotate) {
            rotates[s.output] = &s;
        }
    }

    std::vector<std::pair<std::string, Real>> openings;
    for (const ConstructionStep &s : flat.steps) {
        if (s.kind == StepKind::CircleThrough ||
            s.kind == StepKind::CircleRadius) {
            openings.emplace_back(s.output, reg.circle_at(s.output).radius);
        } else if (s.kind == StepKind::Given && rotates.count(s.output)) {
            const ConstructionStep *r = rotates.at(s.output);
            openings.emplace_back(s.output,
                                  distance(reg.point_at(r->inputs[0]),
                                           reg.point_at(r->inputs[1])));
        }
    }

    std::vector<std::string> violations;
    if (openings.empty()) {
        return violations;
    }
    const Real &opening = openings.front().second;
    for (const auto &[name, radius] : openings) {
        if (abs(radius - opening) > eps(10)) {
            violations.push_back("step '" + name + "': radius " +
                                 format_real(radius, 12, true) +
                                 " differs from the compass opening " +
                                 format_real(opening, 12, true));
        }
    }
    return violations;
}

//-----------------------------------------------------------------------------
// Registry serialization
//-----------------------------------------------------------------------------
std::string serialize_registry(const PointRegistry &registry) {
    std::string out;
    for (const auto &[name, obj] : registry.objects()) {
        out += name;
        if (std::holds_alternative<Point>(obj)) {
            const Point &p = std::get<Point>(obj);
            out += " = point (" + format_real(p.x) + ", " + format_real(p.y) +
                   ")";
        } else if (std::holds_alternative<Line>(obj)) {
            const Line &l = std::get<Line>(obj);
            out += " = line (" + format_real(l.p.x) + ", " +
                   format_real(l.p.y) + ") -> (" + format_real(l.q.x) + ", " +
                   format_real(l.q.y) + ")";
        } else {
            const Circle &c = std::get<Circle>(obj);
            out += " = circle center (" + format_real(c.center.x) + ", " +
                   format_real(c.center.y) + ") radius " +
                   format_real(c.radius);
        }
        out += "\n";
    }
    return out;
}

} // namespace zirkel
