#pragma once

// The Kasner map as a shift on continued-fraction words, base-point
// enumeration for periodic chains, and the exact eigenvalue triple
// (l1, l2, l3) = (-6u, 6(1+u), 6u(1+u)) / (1+u+u^2) at a Kasner-circle point.

#include <vector>

#include "bixlin/cfrac.hpp"
#include "bixlin/exactfield.hpp"

namespace bixlin {

struct EigenTriple {
    QuadExt l1, l2, l3;
};

// Requires u > 1; u = 1 is a Taub point (hyperbolicity degenerates).
EigenTriple eigenvalues(const QuadExt& u);

// u >= 2: decrement a0; 1 < u < 2 (a0 = 1): drop a0. Words never name u = 1,
// so the map is total on CFWords. Result is canonical.
CFWord kasner_step(const CFWord& w);

// The complete Kasner orbit of [period repeating]: for each rotation index i
// (entry a_i), the words [m; rotation-after-a_i] for m = 1..a_i. The period is
// reduced to its minimal form first; orbit size = sum of minimal entries.
std::vector<CFWord> base_points(const std::vector<long>& period);

}  // namespace bixlin
