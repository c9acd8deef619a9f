#pragma once

// Continued-fraction words, convergent recursions, and the integer quadratic
// equations satisfied by periodic and pre-periodic quadratic irrationals.
//
// A CFWord names u = [a_0,...,a_{h-1}, (a_h,...,a_{h+p-1}) repeating] with all
// entries >= 1. Convergents follow A_k = A_{k-1} a_k + A_{k-2} (same for B)
// with seeds A_{-1}=1, A_{-2}=0, B_{-1}=0, B_{-2}=1.

#include <string>
#include <vector>

#include "bixlin/exactfield.hpp"

namespace bixlin {

struct CFWord {
    std::vector<long> head;
    std::vector<long> period;

    CFWord(std::vector<long> head_entries, std::vector<long> period_entries);

    long entry(std::size_t k) const;  // a_k
    long a0() const { return entry(0); }
    std::size_t pre_period() const { return head.size(); }
    std::size_t period_length() const { return period.size(); }
    bool purely_periodic() const { return head.empty(); }

    // Text syntax: "m;a,b,c" = head m with period (a,b,c); "a,b" = purely
    // periodic. Multi-entry heads join with commas: "1,2;3".
    std::string str() const;
    static CFWord parse(const std::string& text);

    friend bool operator==(const CFWord& a, const CFWord& b) = default;
};

// Minimal period and minimal pre-period; idempotent, value-preserving.
CFWord canonicalize(const CFWord& w);

// The word of the tail xi_k = [a_k, a_{k+1}, ...].
CFWord tail(const CFWord& w, std::size_t k);

struct Convergents {
    // A(k), B(k) valid for -2 <= k <= max_index().
    const Int& A(long k) const { return a_.at(static_cast<std::size_t>(k + 2)); }
    const Int& B(long k) const { return b_.at(static_cast<std::size_t>(k + 2)); }
    long max_index() const { return static_cast<long>(a_.size()) - 3; }

    std::vector<Int> a_{0, 1};  // A_{-2}, A_{-1}
    std::vector<Int> b_{1, 0};  // B_{-2}, B_{-1}
};

Convergents convergents(const CFWord& w, long upto);

struct CoeffVector {
    Int c1, c2, c3;
    bool reduced = false;

    std::string str() const;
    friend bool operator==(const CoeffVector& a, const CoeffVector& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
    }
};

// gcd-reduce and normalize the sign so the leading quadratic coefficient c3
// is positive (first nonzero of (c3,c2,c1) positive when c3 = 0).
CoeffVector reduce(const CoeffVector& c);

struct QuadCoeffs {
    CoeffVector raw;      // published layout: h=0 gives c3=+B_{p-1}, h=1 gives c3=-B_{p-1}
    CoeffVector reduced;  // gcd-reduced, canonical sign
};

QuadCoeffs quad_coeffs(const CFWord& w);

enum class Family { constant, two_periodic, three_periodic };

// Closed-form coefficient vector for u = [m, rot repeating], rot listed in the
// order seen after m. Range rule: 1 <= m <= rot.back(). The vectors carry the
// per-family sign layout, unreduced.
CoeffVector closed_form_coeffs(Family f, long m, const std::vector<long>& rot);

// Same polynomials without the base-point range check (the pre-periodic
// tables extend m past rot.back()).
CoeffVector closed_form_coeffs_any_head(Family f, long m, const std::vector<long>& rot);

// Sign s applied to (c1-c2+c3, c1, c3) in each family's reference tables.
int family_k_sign(Family f);

QuadExt make_root(const CoeffVector& c);

// Exact value of the word, the root consistent with a0 <= u < a0+1.
QuadExt cf_value(const CFWord& w);

}  // namespace bixlin
