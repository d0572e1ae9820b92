//-----------------------------------------------------------------------------
// Executable model of a compass-and-straightedge construction: a script is an
// ordered list of named steps (given points, lines, compass-legal circles,
// intersections with an explicit branch selector, and a few classical macros).
// Executing a script yields a registry mapping each name to its Point, Line,
// or Circle. Radii are always distances between already-constructed points, so
// every script is something a compass can actually do.
//-----------------------------------------------------------------------------
#pragma once

#include "zirkel/geometry.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zirkel {

enum class StepKind {
    Given,         // literal coordinates (the starting configuration)
    LineThrough,   // straightedge through two named points
    CircleThrough, // compass: center + point on the circumference
    CircleRadius,  // compass: center + opening taken between two other points
    Intersect,     // two objects + a branch selector
    Midpoint,      // macro: vesica bisection of a segment
    Trisect3,      // macro: similar-triangle trisection of a segment (.1 or .2)
    PerpFoot,      // macro: foot of the perpendicular from a point to a line
    Rotate,        // macro: rotation of a point about a center by a fixed angle
};

enum class SelectorMode { Upper, Lower, Left, Right, Near, Far, First, Second };

// Chooses one of the (up to two) intersection candidates. Near/Far measure
// distance to a previously constructed reference point.
struct Selector {
    SelectorMode mode = SelectorMode::First;
    std::string ref; // Near/Far only
};

bool operator==(const Selector &a, const Selector &b);

struct ConstructionStep {
    StepKind kind = StepKind::Given;
    std::string output;              // fresh name defined by this step
    std::vector<std::string> inputs; // named references, arity fixed per kind
    std::string x_text, y_text;      // Given: coordinate literals
    Selector selector;               // Intersect only
    int branch = 1;                  // Trisect3: 1 -> (2a+b)/3, 2 -> (a+2b)/3
    std::string angle_text;          // Rotate: signed angle in degrees
    std::string provenance;          // "<macro-kind> <name>" when macro-expanded
    int line = 0, column = 0;        // source position (0 when synthetic)
};

// Structural equality; source positions are ignored.
bool operator==(const ConstructionStep &a, const ConstructionStep &b);

struct ConstructionScript {
    std::vector<ConstructionStep> steps;
    bool rusty = false; // fixed compass opening claimed for the whole script
};

bool operator==(const ConstructionScript &a, const ConstructionScript &b);

using GeomObject = std::variant<Point, Line, Circle>;

// Execution result: one named object per step, lexicographically iterable.
class PointRegistry {
  public:
    void insert(const std::string &name, GeomObject obj);
    bool contains(const std::string &name) const;
    const GeomObject &at(const std::string &name) const;
    const Point &point_at(const std::string &name) const;
    const Line &line_at(const std::string &name) const;
    const Circle &circle_at(const std::string &name) const;
    const std::map<std::string, GeomObject> &objects() const { return objects_; }
    std::size_t size() const { return objects_.size(); }

  private:
    std::map<std::string, GeomObject> objects_;
};

// Structural checks: fresh, unique output names; every reference defined by an
// earlier step with the kind the step requires. Throws ValidationError.
void validate(const ConstructionScript &script);

// Runs the script. Geometric failures and ambiguous selectors (candidates
// closer than 10^-(P-10)) throw GeometryError naming the offending step.
PointRegistry execute(const ConstructionScript &script);

// Fixed-compass audit: one violation string per circle (or rotate opening)
// whose radius differs from the first circle's radius by more than 10^-(P-10).
// Macros are expanded first so their internal arcs are audited too.
std::vector<std::string> validate_rusty(const ConstructionScript &script);

// Rewrites every macro step into primitive steps (given/line/circle/intersect)
// with generated "<name>__k" intermediates carrying provenance tags. Executing
// the result reproduces all original names within 10^-(P-8).
ConstructionScript expand_macros(const ConstructionScript &script);

// Stable text form used for golden files and determinism checks: one line per
// name in sorted order, coordinates to 25 significant digits.
std::string serialize_registry(const PointRegistry &registry);

} // namespace zirkel
