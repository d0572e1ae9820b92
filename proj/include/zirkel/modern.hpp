//-----------------------------------------------------------------------------
// Richmond's exact pentagon and 17-gon, Gauss's radical for cos(2*pi/17),
// and the Gauss-Wantzel constructibility predicate.
//-----------------------------------------------------------------------------
#pragma once

#include <optional>
#include <vector>

#include "zirkel/durer.hpp"
#include "zirkel/numerics.hpp"

namespace zirkel {

struct ConstructibilityVerdict {
    long n = 0;
    bool constructible = false;
    int power_of_two = 0;                  // m in n = 2^m * odd part
    std::vector<long> fermat_factors;      // distinct, ascending
    std::optional<long> obstruction;       // repeated or non-Fermat odd factor
};

// Richmond 1893: A = (0, 1/2); bisecting angle OAP places B on the x-axis at
// cos 72 degrees; the vertical at B meets the circle at vertex 2. Vertices
// counterclockwise from P = {1, 0}.
VertexList richmond_pentagon();

// Richmond 17-gon: A = (0, 1/4); quarter of angle OAP places B; the pi/4
// rotation places C; the circle on CP as diameter and the circle about B
// give the feet of vertices 4 and 6; half the arc difference is 2*pi/17.
// Vertices counterclockwise from P = {1, 0}.
VertexList richmond_17gon();

// The construction's intermediate marks, for auditing against the tables:
// B and C on the x-axis, K on the +y-axis, E/F the feet of vertices 4 and 6.
struct SeventeenGonPoints {
    Point B, C, K;
    Real E, F;
};

SeventeenGonPoints richmond_17gon_points();

// 16 cos(2*pi/17) = -1 + sqrt(17) + sqrt(34 - 2 sqrt(17))
//                   + 2 sqrt(17 + 3 sqrt(17) - sqrt(34 - 2 sqrt(17))
//                            - 2 sqrt(34 + 2 sqrt(17))).
Real gauss_cos_2pi_17();

// Gauss-Wantzel: n-gon constructible iff n = 2^m times distinct Fermat
// primes from {3, 5, 17, 257, 65537}. Requires n >= 3.
ConstructibilityVerdict is_constructible(long n);

} // namespace zirkel
