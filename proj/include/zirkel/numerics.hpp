//-----------------------------------------------------------------------------
// Arbitrary-precision real arithmetic shared by every other module: the Real
// scalar type at a configurable decimal precision, angle helpers, the
// degrees/arcminutes/arcseconds display form, and deterministic decimal
// formatting for tables and golden files.
//-----------------------------------------------------------------------------
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace zirkel {

// Variable-precision real number. Precision is a process-global setting in
// decimal digits, configured once at startup (see set_precision).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

//-----------------------------------------------------------------------------
// Error hierarchy. GeometryError: a construction step has no valid result
// (missed/tangent intersection, degenerate object). ValidationError: a script
// is structurally ill-formed. ParseError: .geo text is ill-formed, with the
// offending position. DomainError: an argument is outside an operation's
// documented domain.
//-----------------------------------------------------------------------------
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GeometryError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string &msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
};

// Global working precision in decimal digits. Minimum 30, default 50.
void set_precision(unsigned digits);
unsigned precision();

// 10^-(precision() - offset); the tolerance family used throughout.
Real eps(int offset);

Real pi();
Real deg_to_rad(const Real &degrees);
Real rad_to_deg(const Real &radians);

//-----------------------------------------------------------------------------
// An angle decomposed for display: D° M' S". Angles must be nonnegative;
// seconds lie in [0, 60). Reconstruction via dms_to_degrees round-trips the
// input to working precision.
//-----------------------------------------------------------------------------
struct DmsAngle {
    long degrees = 0;
    int minutes = 0;
    Real seconds;
};

DmsAngle to_dms(const Real &degrees);
Real dms_to_degrees(const DmsAngle &a);

// Fixed display form: `33° 20' 0"` — single spaces, U+00B0 degree sign, ASCII
// apostrophe/quote, seconds with at most 5 fractional digits, trailing zeros
// trimmed, carry applied (59.999997" displays as the next minute).
std::string dms_to_string(const DmsAngle &a);
std::string dms_string(const Real &degrees);

// Side length of the regular n-gon inscribed in a circle: 2 r sin(pi/n).
Real side_from_radius(const Real &radius, int n);

// Central angle (in degrees) subtended by a chord: 2 arcsin(side / 2r).
Real chord_central_angle(const Real &side, const Real &radius);

// Deterministic decimal rendering with a fixed count of significant digits.
// trim=false keeps trailing zeros (table form), trim=true drops them (SVG).
std::string format_real(const Real &x, int significant_digits = 25,
                        bool trim = false);

// Parses a decimal number or an exact rational "p/q" at working precision.
Real parse_real(const std::string &text);

} // namespace zirkel
