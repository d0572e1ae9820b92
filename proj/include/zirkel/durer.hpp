//-----------------------------------------------------------------------------
// Built-in construction suites for Durer's 1525 polygon figures 9-19: one
// FigureId per figure, each backed by a shipped .geo script and a closed-form
// vertex generator, plus the vertex-table normalization convention
// (counterclockwise, vertex 1 at {0,1}, unit circumradius).
//-----------------------------------------------------------------------------
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zirkel/engine.hpp"
#include "zirkel/geometry.hpp"
#include "zirkel/numerics.hpp"

namespace zirkel {

enum class FigureId {
    Hexagon9,
    Triangle10,
    Heptagon11,
    Fourteen12,
    TwentyEight12,
    Square13,
    Octagon14,
    Sixteen14,
    PentagonExact15,
    Decagon15,
    PentagonRusty16,
    Fifteen17,
    Nine18,
    Eleven19,
    Thirteen19,
};

// Readings of Durer's 13-gon edge: half the radius, half less 1/32, and
// Hunrath's 23/48 (the default).
enum class ThirteenVariant { Half, MinusOneThirtySecond, Hunrath };

struct VertexList {
    std::vector<Point> vertices;  // counterclockwise
    int n = 0;
    bool exact_regular = false;
};

struct RustyAngles {
    DmsAngle alpha;  // at the base corners a, b
    DmsAngle beta;   // at the flank corners h, i
    DmsAngle gamma;  // at the apex k
};

struct NineGonPoints {
    Point e;   // upper-left bladder vertex
    Point f;   // upper-right bladder vertex (mirror of e)
    Point p1;  // left vertex of the bottom bladder pair
};

struct ThirteenReport {
    Real edge;            // the repeated chord
    Real thirteenth_edge; // the closing chord
};

// Closed-form vertex generator. `variant` is only valid with Thirteen19;
// `fifteen_rusty_side` is only valid with Fifteen17 and swaps the exact
// pentagon side for the rusty pentagon's (the approximate variant).
VertexList durer_polygon(FigureId fig,
                         std::optional<ThirteenVariant> variant = {},
                         bool fifteen_rusty_side = false);

// Interior angles of the rusty pentagon: alpha = 135 deg - arcsin(sqrt(3)
// sin 15 deg) at the base, beta at the flanks, gamma = 540 - 2 alpha - 2 beta.
RustyAngles pentagon_rusty_angles();

// The 9-gon bladder intersections: p1 = {-sqrt(35)/6, -1/6},
// f = {(-sqrt(3)+sqrt(35))/12, (1+sqrt(105))/12}, e its y-axis mirror.
NineGonPoints nine_gon_points();

ThirteenReport thirteen_gon_report(ThirteenVariant variant);

// Vertex 1 to {0,1}: concyclic lists are centered, scaled to unit radius and
// rotated; non-concyclic (equilateral) lists are scaled by the regular side
// ratio and translated, matching the rusty pentagon's published table.
VertexList normalize_to_convention(const VertexList &v);

// Figure metadata and the shipped script corpus.
const std::vector<FigureId> &all_figures();
std::string figure_name(FigureId fig);
FigureId figure_from_name(const std::string &name);
int figure_number(FigureId fig);     // Durer's 1525 figure number
int figure_sides(FigureId fig);
bool figure_exact(FigureId fig);     // exact_regular flag for the figure

// The shipped .geo source and its parsed form.
const std::string &figure_script_text(FigureId fig);
ConstructionScript figure_script(FigureId fig);

// Names of the vertex outputs in the shipped script, in counterclockwise
// order, and the executed-script route to the same VertexList as
// durer_polygon (rusty pentagon included, normalization applied).
std::vector<std::string> figure_vertex_names(FigureId fig);
VertexList vertices_from_script(FigureId fig);

} // namespace zirkel
