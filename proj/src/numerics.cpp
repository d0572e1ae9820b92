//-----------------------------------------------------------------------------
// Implementation of the numerics module: precision control, pi, DMS
// decomposition and rendering, chord/angle helpers, deterministic decimal
// formatting via mpfr_get_str.
//-----------------------------------------------------------------------------
#include "zirkel/numerics.hpp"

#include <algorithm>
#include <mpfr.h>

#include <cstdlib>

namespace zirkel {

static unsigned g_digits = 50;

void set_precision(unsigned digits) {
    if (digits < 30) {
        throw DomainError("working precision must be at least 30 digits");
    }
    g_digits = digits;
    Real::default_precision(digits);
}

unsigned precision() {
    return g_digits;
}

Real eps(int offset) {
    return pow(Real(10), -(static_cast<int>(g_digits) - offset));
}

Real pi() {
    // boost's pi constant is unavailable for variable-precision backends;
    // MPFR computes (and caches) it directly at the working precision.
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real deg_to_rad(const Real &degrees) {
    return degrees * pi() / 180;
}

Real rad_to_deg(const Real &radians) {
    return radians * 180 / pi();
}

DmsAngle to_dms(const Real &degrees) {
    if (degrees < 0) {
        throw DomainError("to_dms requires a nonnegative angle");
    }
    Real total_seconds = degrees * 3600;
    // Snap to integer seconds when within working precision, so exact values
    // like 100/3 degrees decompose to 33° 20' 0" instead of 33° 19' 59.99…".
    Real nearest = round(total_seconds);
    Real tol = eps(12) * std::max(Real(1), total_seconds);
    if (abs(total_seconds - nearest) < tol) {
        total_seconds = nearest;
    }
    Real deg_part = floor(total_seconds / 3600);
    Real rem = total_seconds - deg_part * 3600;
    Real min_part = floor(rem / 60);
    if (min_part > 59) {
        min_part = 59;
    }
    DmsAngle out;
    out.degrees = deg_part.convert_to<long>();
    out.minutes = min_part.convert_to<int>();
    out.seconds = rem - min_part * 60;
    if (out.seconds < 0) {
        out.seconds = 0;
    }
    return out;
}

Real dms_to_degrees(const DmsAngle &a) {
    return Real(a.degrees) + Real(a.minutes) / 60 + a.seconds / 3600;
}

std::string dms_to_string(const DmsAngle &a) {
    // Render seconds at 5 decimals (rounded), then carry 60" and 60' so the
    // displayed fields stay in range.
    long long micro = round(a.seconds * 100000).convert_to<long long>();
    long deg = a.degrees;
    int min = a.minutes;
    if (micro >= 6000000) {
        micro -= 6000000;
        min += 1;
        if (min == 60) {
            min = 0;
            deg += 1;
        }
    }
    std::string sec = std::to_string(micro / 100000);
    long long frac = micro % 100000;
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(0, 5 - f.size(), '0');
        while (!f.empty() && f.back() == '0') {
            f.pop_back();
        }
        sec += "." + f;
    }
    return std::to_string(deg) + "° " + std::to_string(min) + "' " + sec +
           "\"";
}

std::string dms_string(const Real &degrees) {
    return dms_to_string(to_dms(degrees));
}

Real side_from_radius(const Real &radius, int n) {
    if (n < 3) {
        throw DomainError("side_from_radius requires n >= 3");
    }
    if (radius <= 0) {
        throw DomainError("side_from_radius requires a positive radius");
    }
    return 2 * radius * sin(pi() / n);
}

Real chord_central_angle(const Real &side, const Real &radius) {
    if (side <= 0 || radius <= 0) {
        throw DomainError("chord_central_angle requires positive lengths");
    }
    if (side > 2 * radius) {
        throw DomainError("chord longer than diameter");
    }
    return rad_to_deg(2 * asin(side / (2 * radius)));
}

std::string format_real(const Real &x, int significant_digits, bool trim) {
    if (x == 0) {
        return "0";
    }
    mpfr_exp_t exp10 = 0;
    char *raw = mpfr_get_str(nullptr, &exp10, 10, significant_digits,
                             x.backend().data(), MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    // Value is 0.<digits> * 10^exp10. Our magnitudes are desk-scale, so plain
    // decimal is always appropriate.
    std::string body;
    long e = static_cast<long>(exp10);
    if (e <= 0) {
        body = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
    } else if (static_cast<size_t>(e) >= digits.size()) {
        body = digits + std::string(static_cast<size_t>(e) - digits.size(), '0');
    } else {
        body = digits.substr(0, static_cast<size_t>(e)) + "." +
               digits.substr(static_cast<size_t>(e));
    }
    if (trim && body.find('.') != std::string::npos) {
        while (body.back() == '0') {
            body.pop_back();
        }
        if (body.back() == '.') {
            body.pop_back();
        }
    }
    return sign + body;
}

Real parse_real(const std::string &text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty()) {
            throw DomainError("malformed rational: " + text);
        }
        Real d(den);
        if (d == 0) {
            throw DomainError("zero denominator: " + text);
        }
        return Real(num) / d;
    }
    try {
        return Real(text);
    } catch (const std::exception &) {
        throw DomainError("malformed number: " + text);
    }
}

} // namespace zirkel
