//-----------------------------------------------------------------------------
// Deterministic SVG rendering of vertex lists, with an optional unit circle
// and an optional labeled construction overlay.
//-----------------------------------------------------------------------------
#pragma once

#include <string>

#include "zirkel/durer.hpp"
#include "zirkel/engine.hpp"

namespace zirkel {

// Fixed viewBox "-1.2 -1.2 2.4 2.4", y-axis flipped so mathematical up is
// visual up, 12 significant digits; byte-stable across runs.
std::string render_svg(const VertexList &v, bool show_circle,
                       const PointRegistry *construction = nullptr);

} // namespace zirkel
