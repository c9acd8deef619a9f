#pragma once

// Resonance vectors k with k1*l1 + k2*l2 + k3*l3 = 0: the integer solution
// k = s*(c1-c2+c3, c1, c3) obtained from the quadratic coefficients of u, the
// Resonance Sign Condition, resonance order, and a brute-force search that
// confirms minimality independently of the coefficient route.

#include <optional>
#include <vector>

#include "bixlin/cfrac.hpp"
#include "bixlin/kasner.hpp"

namespace bixlin {

struct KVector {
    Int k1, k2, k3;

    bool is_zero() const { return k1 == 0 && k2 == 0 && k3 == 0; }
    std::string str() const;
    friend bool operator==(const KVector& a, const KVector& b) = default;
};

KVector reduce(const KVector& k);      // gcd-reduced, first nonzero positive
Int common_factor(const KVector& k);   // gcd(|k1|,|k2|,|k3|)

struct Resonance {
    KVector raw;      // family-signed, unreduced
    KVector reduced;  // gcd-reduced, canonical sign
    Int gcd;
};

Resonance k_from_c(const CoeffVector& c, int s);

// Resonance Sign Condition: all nonzero components share one sign, or the one
// odd-signed component is +-1. Zeros are sign-neutral. Invariant under global
// negation.
bool rsc(const KVector& k);

// |k1|+|k2|+|k3| of the gcd-reduced vector.
Int order(const KVector& k);

// Exact QuadExt evaluation of k1*l1 + k2*l2 + k3*l3 == 0.
bool verify_identity(const KVector& k, const EigenTriple& eig);

// All sign-canonical nonzero integer triples with |k1|+|k2|+|k3| <= max_order
// satisfying the resonance identity exactly, ordered by (order, lexicographic).
std::vector<KVector> resonances_up_to(const EigenTriple& eig, long max_order);

// Minimal-order hit of the scan above, if any.
std::optional<KVector> first_resonance_oracle(const EigenTriple& eig, long max_order);

}  // namespace bixlin
