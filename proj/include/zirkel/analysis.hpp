//-----------------------------------------------------------------------------
// Quantitative comparison of a vertex list against the regular n-gon: sides,
// central and interior angles, deviation metrics, DMS reporting.
//-----------------------------------------------------------------------------
#pragma once

#include <utility>
#include <vector>

#include "zirkel/durer.hpp"
#include "zirkel/numerics.hpp"

namespace zirkel {

struct PolygonReport {
    int n = 0;
    std::vector<Real> sides;                 // side i = |v_i v_{i+1}|
    std::vector<DmsAngle> central_angles;    // about the circumcenter, or the
                                             // centroid when not concyclic
    std::vector<DmsAngle> interior_angles;
    Real max_side_dev;                       // vs the regular side at the
                                             // polygon's own radius
    Real max_angle_dev_arcsec;               // max |central - 360/n|
    Real step_angle_err_arcsec;              // |median central - 360/n|: the
                                             // repeated construction chord
    bool equilateral = false;                // relative spread < 10^-(P-10)
    bool equiangular = false;
    bool concyclic = false;
};

// Requires a simple polygon with n >= 3; throws ValidationError on
// self-intersecting input.
PolygonReport report(const VertexList &v);

// side_err = max |side - side_from_radius(1, n)|,
// angle_err = max |central angle - 360/n| in arcseconds.
std::pair<Real, Real> compare_to_regular(const VertexList &v);

} // namespace zirkel
