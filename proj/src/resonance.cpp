#include "bixlin/resonance.hpp"

#include <array>
#include <tuple>

namespace bixlin {

std::string KVector::str() const {
    return "(" + k1.get_str() + "," + k2.get_str() + "," + k3.get_str() + ")";
}

Int common_factor(const KVector& k) {
    if (k.is_zero()) throw Error("zero resonance vector");
    return gcd3(abs(k.k1), abs(k.k2), abs(k.k3));
}

KVector reduce(const KVector& k) {
    Int g = common_factor(k);
    KVector r{k.k1 / g, k.k2 / g, k.k3 / g};
    int lead = sgn(r.k1) != 0 ? sgn(r.k1) : (sgn(r.k2) != 0 ? sgn(r.k2) : sgn(r.k3));
    if (lead < 0) r = KVector{-r.k1, -r.k2, -r.k3};
    return r;
}

Resonance k_from_c(const CoeffVector& c, int s) {
    if (s != 1 && s != -1) throw Error("family sign must be +-1");
    KVector raw{s * (c.c1 - c.c2 + c.c3), s * c.c1, s * c.c3};
    if (raw.is_zero()) throw Error("degenerate coefficient vector yields zero resonance");
    return Resonance{raw, reduce(raw), common_factor(raw)};
}

bool rsc(const KVector& k) {
    if (k.is_zero()) throw Error("RSC undefined for the zero vector");
    std::array<const Int*, 3> comps{&k.k1, &k.k2, &k.k3};
    int pos = 0, neg = 0;
    const Int* lone_pos = nullptr;
    const Int* lone_neg = nullptr;
    for (const Int* c : comps) {
        if (sgn(*c) > 0) {
            ++pos;
            lone_pos = c;
        } else if (sgn(*c) < 0) {
            ++neg;
            lone_neg = c;
        }
    }
    if (pos == 0 || neg == 0) return true;  // all nonzero share one sign
    if (pos == 1 && *lone_pos == 1) return true;
    if (neg == 1 && *lone_neg == -1) return true;
    return false;
}

Int order(const KVector& k) {
    KVector r = reduce(k);
    return abs(r.k1) + abs(r.k2) + abs(r.k3);
}

bool verify_identity(const KVector& k, const EigenTriple& eig) {
    QuadExt sum = QuadExt(Rat(k.k1)) * eig.l1 + QuadExt(Rat(k.k2)) * eig.l2 +
                  QuadExt(Rat(k.k3)) * eig.l3;
    return sum.is_zero();
}

namespace {

// Each eigenvalue as an exact integer pair (e_i + f_i sqrt(D)) / g over a
// common denominator g and common radicand D. A candidate k then resonates
// iff sum k_i e_i = 0 and sum k_i f_i = 0 (sqrt(D) is irrational or f == 0).
struct ScaledTriple {
    std::array<Int, 3> e;
    std::array<Int, 3> f;
};

ScaledTriple scale_triple(const EigenTriple& eig) {
    std::array<QuadExt, 3> ls{eig.l1, eig.l2, eig.l3};
    Int rad(0);
    for (const QuadExt& l : ls)
        if (!l.is_rational()) {
            rad = l.radicand();
            break;
        }
    ScaledTriple st;
    Int g(1);
    std::array<QuadExt, 3> rebased;
    for (int i = 0; i < 3; ++i) {
        rebased[i] = rad == 0 ? ls[i] : ls[i].rebased(rad);
        g = lcm(g, rebased[i].rat_part().get_den());
        g = lcm(g, rebased[i].irr_part().get_den());
    }
    for (int i = 0; i < 3; ++i) {
        Rat e = rebased[i].rat_part() * Rat(g);
        Rat f = rebased[i].irr_part() * Rat(g);
        st.e[i] = e.get_num();
        st.f[i] = f.get_num();
    }
    return st;
}

}  // namespace

std::vector<KVector> resonances_up_to(const EigenTriple& eig, long max_order) {
    if (max_order < 1) throw Error("oracle order must be >= 1");
    ScaledTriple st = scale_triple(eig);
    std::vector<KVector> hits;
    auto test = [&](long k1, long k2, long k3) {
        Int a = st.e[0] * k1 + st.e[1] * k2 + st.e[2] * k3;
        if (a != 0) return;
        Int b = st.f[0] * k1 + st.f[1] * k2 + st.f[2] * k3;
        if (b != 0) return;
        hits.push_back(KVector{Int(k1), Int(k2), Int(k3)});
    };
    for (long l = 1; l <= max_order; ++l) {
        // Sign-canonical enumeration (first nonzero component positive),
        // ascending lexicographic within each order.
        for (long k1 = -l; k1 <= l; ++k1) {
            long rem1 = l - std::abs(k1);
            for (long k2 = -rem1; k2 <= rem1; ++k2) {
                long r = rem1 - std::abs(k2);
                long lead = k1 != 0 ? k1 : k2;
                if (r == 0) {
                    if (lead > 0) test(k1, k2, 0);
                    continue;
                }
                for (long k3 : {-r, r}) {
                    long first = k1 != 0 ? k1 : (k2 != 0 ? k2 : k3);
                    if (first > 0) test(k1, k2, k3);
                }
            }
        }
    }
    return hits;
}

std::optional<KVector> first_resonance_oracle(const EigenTriple& eig, long max_order) {
    std::vector<KVector> hits = resonances_up_to(eig, max_order);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

}  // namespace bixlin
