#include "bixlin/kasner.hpp"

#include <algorithm>

namespace bixlin {

EigenTriple eigenvalues(const QuadExt& u) {
    QuadExt one(Rat(1));
    if (u == one) throw TaubPointError("u = 1 is a Taub point");
    if (u < one) throw TaubPointError("Kasner parameter must satisfy u > 1");
    QuadExt six(Rat(6));
    QuadExt q = one + u + u * u;
    EigenTriple e;
    e.l1 = -(six * u) / q;
    e.l2 = six * (one + u) / q;
    e.l3 = six * u * (one + u) / q;
    return e;
}

CFWord kasner_step(const CFWord& w) {
    std::vector<long> h = w.head;
    std::vector<long> p = w.period;
    if (h.empty()) {
        // [P] = [P[0]; rotate-left(P)]
        h.push_back(p[0]);
        std::rotate(p.begin(), p.begin() + 1, p.end());
    }
    if (h[0] >= 2) {
        h[0] -= 1;
    } else {
        h.erase(h.begin());
    }
    return canonicalize(CFWord(std::move(h), std::move(p)));
}

std::vector<CFWord> base_points(const std::vector<long>& period) {
    CFWord minimal = canonicalize(CFWord({}, period));
    const std::vector<long>& p = minimal.period;
    std::vector<CFWord> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        // Rotation that follows entry p[i] in the repeating sequence.
        std::vector<long> rot;
        rot.reserve(p.size());
        for (std::size_t j = 1; j <= p.size(); ++j) rot.push_back(p[(i + j) % p.size()]);
        for (long m = 1; m <= p[i]; ++m) out.push_back(CFWord({m}, rot));
    }
    return out;
}

}  // namespace bixlin
