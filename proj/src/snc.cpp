#include "bixlin/snc.hpp"

#include <algorithm>
#include <array>

namespace bixlin {

Magnitudes sort_magnitudes(const EigenTriple& eig) {
    std::array<QuadExt, 3> m{abs(eig.l1), abs(eig.l2), abs(eig.l3)};
    std::sort(m.begin(), m.end(), [](const QuadExt& a, const QuadExt& b) { return a > b; });
    if (m[0] == m[1] || m[1] == m[2])
        throw TaubDegeneracyError("coinciding eigenvalue magnitudes (Taub degeneracy)");
    if (m[2].sign() <= 0) throw TaubDegeneracyError("non-positive eigenvalue magnitude");
    return Magnitudes{m[0], m[1], m[2]};
}

SncData snc_data(const EigenTriple& eig, long smoothness) {
    if (smoothness < 1) throw Error("smoothness must be >= 1");
    Magnitudes mag = sort_magnitudes(eig);
    QuadExt k{Rat(smoothness)};
    Int beta = ceil_exact((mag.big + k * (mag.small + mag.mid)) / mag.mid);
    QuadExt beta_q{Rat(beta)};
    Int alpha = ceil_exact((mag.small + beta_q * (mag.big + mag.small)) / mag.small);
    return SncData{mag.big, mag.mid, mag.small, smoothness, beta, alpha};
}

AlphaBeta alpha_beta(const EigenTriple& eig, long smoothness) {
    SncData d = snc_data(eig, smoothness);
    return AlphaBeta{d.alpha, d.beta};
}

std::string reason_str(Reason r) {
    switch (r) {
        case Reason::RscViolated: return "RSC_VIOLATED";
        case Reason::OrderExceedsAlpha: return "ORDER_EXCEEDS_ALPHA";
        case Reason::Blocked: return "BLOCKED";
    }
    throw Error("unknown reason");
}

Reason reason_from_str(const std::string& s) {
    if (s == "RSC_VIOLATED") return Reason::RscViolated;
    if (s == "ORDER_EXCEEDS_ALPHA") return Reason::OrderExceedsAlpha;
    if (s == "BLOCKED") return Reason::Blocked;
    throw Error("unknown reason string '" + s + "'");
}

BasePointReport basepoint_verdict(const CFWord& w, long smoothness) {
    CFWord word = canonicalize(w);
    QuadCoeffs qc = quad_coeffs(word);
    QuadExt u = cf_value(word);
    Resonance res = k_from_c(qc.raw, 1);
    Int ord = order(res.reduced);
    bool rsc_holds = rsc(res.reduced);
    bool zero_comp = res.reduced.k1 == 0 || res.reduced.k2 == 0 || res.reduced.k3 == 0;
    AlphaBeta ab = alpha_beta(eigenvalues(u), smoothness);
    bool linearizable;
    Reason reason;
    if (!rsc_holds) {
        linearizable = true;
        reason = Reason::RscViolated;
    } else if (ord > ab.alpha) {
        linearizable = true;
        reason = Reason::OrderExceedsAlpha;
    } else {
        linearizable = false;  // order == alpha counts as blocked
        reason = Reason::Blocked;
    }
    return BasePointReport{word,     u,        qc.raw,   qc.reduced,    res.raw,
                           res.reduced, res.gcd, ord,      rsc_holds,     ab.alpha,
                           ab.beta,  linearizable, reason, ord == ab.alpha, zero_comp};
}

bool two_periodic_admissible(long a, long b) {
    return a > 1 && b > 1 && a % b != 0 && b % a != 0;
}

ChainReport chain_verdict(const std::vector<long>& period, long smoothness) {
    if (period.empty()) throw Error("empty period");
    ChainReport rep;
    CFWord minimal = canonicalize(CFWord({}, period));
    rep.period = minimal.period;
    rep.smoothness = smoothness;
    std::vector<CFWord> points = base_points(rep.period);
    rep.base_reports.reserve(points.size());
    bool all = true;
    for (const CFWord& w : points) {
        rep.base_reports.push_back(basepoint_verdict(w, smoothness));
        all = all && rep.base_reports.back().linearizable;
    }
    rep.admissible = all;
    if (rep.period.size() == 2) rep.def33 = two_periodic_admissible(rep.period[0], rep.period[1]);
    return rep;
}

}  // namespace bixlin
