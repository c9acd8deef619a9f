#pragma once

// Sternberg non-resonance orders alpha, beta and the per-base-point /
// per-chain admissibility verdict.
//
// With magnitudes sorted N >= n >= mu (> 0) and smoothness k:
//   beta  = ceil((N + k*(mu + n)) / n)
//   alpha = ceil((mu + beta*(N + mu)) / mu)
// A base point escapes the obstruction when its resonance vector violates the
// RSC or its order exceeds alpha; otherwise linearization is blocked.

#include <optional>
#include <string>
#include <vector>

#include "bixlin/resonance.hpp"

namespace bixlin {

struct Magnitudes {
    QuadExt big, mid, small;  // N, n, mu
};

// |l1|,|l2|,|l3| sorted descending via exact sign tests. Throws
// TaubDegeneracyError when two magnitudes coincide (excluded Taub values).
Magnitudes sort_magnitudes(const EigenTriple& eig);

struct SncData {
    QuadExt big_mag, mid_mag, small_mag;
    long smoothness;
    Int beta;
    Int alpha;
};

SncData snc_data(const EigenTriple& eig, long smoothness);

struct AlphaBeta {
    Int alpha, beta;
};

AlphaBeta alpha_beta(const EigenTriple& eig, long smoothness);

enum class Reason { RscViolated, OrderExceedsAlpha, Blocked };

std::string reason_str(Reason r);
Reason reason_from_str(const std::string& s);

struct BasePointReport {
    CFWord word;
    QuadExt u_value;
    CoeffVector c_raw;
    CoeffVector c_reduced;
    KVector k_raw;
    KVector k_reduced;
    Int common_factor;
    Int order;
    bool rsc_holds = false;
    Int alpha;
    Int beta;
    bool linearizable = false;
    Reason reason = Reason::Blocked;
    // order == alpha exactly; conservative (blocks unless the RSC already fails)
    bool boundary = false;
    bool rsc_zero_component = false;  // zero-entry sign convention was exercised
};

struct ChainReport {
    std::vector<long> period;  // minimal period actually analyzed
    long smoothness = 1;
    std::vector<BasePointReport> base_reports;
    bool admissible = false;
    // Definition-level admissibility for 2-periodic chains: a,b > 1 and
    // neither divides the other. Unset for other period lengths.
    std::optional<bool> def33;
};

BasePointReport basepoint_verdict(const CFWord& w, long smoothness);
ChainReport chain_verdict(const std::vector<long>& period, long smoothness);

// Definition 3.3 predicate on a 2-entry period.
bool two_periodic_admissible(long a, long b);

}  // namespace bixlin
