#include "bixlin/cfrac.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace bixlin {

CFWord::CFWord(std::vector<long> head_entries, std::vector<long> period_entries)
    : head(std::move(head_entries)), period(std::move(period_entries)) {
    if (period.empty()) throw Error("CFWord period must be non-empty");
    for (long e : head)
        if (e < 1) throw Error("CFWord head entry " + std::to_string(e) + " must be >= 1");
    for (long e : period)
        if (e < 1) throw Error("CFWord period entry " + std::to_string(e) + " must be >= 1");
}

long CFWord::entry(std::size_t k) const {
    if (k < head.size()) return head[k];
    return period[(k - head.size()) % period.size()];
}

std::string CFWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i];
    if (!head.empty()) os << ";";
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? "," : "") << period[i];
    return os.str();
}

namespace {

std::vector<long> parse_entry_list(const std::string& text, std::size_t base_pos,
                                   bool allow_empty) {
    std::vector<long> out;
    if (text.empty()) {
        if (allow_empty) return out;
        throw ParseError("empty entry list", base_pos);
    }
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        while (i < text.size() && text[i] != ',') ++i;
        std::string tok = text.substr(start, i - start);
        if (tok.empty()) throw ParseError("empty entry", base_pos + start);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("invalid integer '" + tok + "'", base_pos + start);
        }
        if (used != tok.size()) throw ParseError("trailing junk in '" + tok + "'", base_pos + start + used);
        if (v < 1) throw ParseError("entry must be >= 1, got " + tok, base_pos + start);
        out.push_back(v);
        if (i < text.size()) ++i;  // skip comma
    }
    if (!text.empty() && text.back() == ',') throw ParseError("trailing comma", base_pos + text.size() - 1);
    return out;
}

}  // namespace

CFWord CFWord::parse(const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos) return CFWord({}, parse_entry_list(text, 0, false));
    if (text.find(';', semi + 1) != std::string::npos)
        throw ParseError("more than one ';'", text.find(';', semi + 1));
    std::vector<long> h = parse_entry_list(text.substr(0, semi), 0, true);
    std::vector<long> p = parse_entry_list(text.substr(semi + 1), semi + 1, false);
    return CFWord(std::move(h), std::move(p));
}

CFWord canonicalize(const CFWord& w) {
    // Minimal period: the shortest divisor-length prefix that tiles the period.
    std::vector<long> p = w.period;
    std::size_t n = p.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool tiles = true;
        for (std::size_t i = d; i < n && tiles; ++i) tiles = (p[i] == p[i % d]);
        if (tiles) {
            p.resize(d);
            break;
        }
    }
    // Minimal pre-period: absorb head entries equal to the period's last entry
    // by rotating the period right.
    std::vector<long> h = w.head;
    while (!h.empty() && h.back() == p.back()) {
        h.pop_back();
        std::rotate(p.begin(), p.end() - 1, p.end());
    }
    return CFWord(std::move(h), std::move(p));
}

CFWord tail(const CFWord& w, std::size_t k) {
    if (k <= w.head.size()) {
        std::vector<long> h(w.head.begin() + static_cast<long>(k), w.head.end());
        return CFWord(std::move(h), w.period);
    }
    std::size_t shift = (k - w.head.size()) % w.period.size();
    std::vector<long> p = w.period;
    std::rotate(p.begin(), p.begin() + static_cast<long>(shift), p.end());
    return CFWord({}, std::move(p));
}

Convergents convergents(const CFWord& w, long upto) {
    if (upto < -2) throw Error("convergents index below -2");
    Convergents cv;
    cv.a_.reserve(static_cast<std::size_t>(upto) + 3);
    cv.b_.reserve(static_cast<std::size_t>(upto) + 3);
    for (long k = 0; k <= upto; ++k) {
        long ak = w.entry(static_cast<std::size_t>(k));
        cv.a_.push_back(cv.A(k - 1) * ak + cv.A(k - 2));
        cv.b_.push_back(cv.B(k - 1) * ak + cv.B(k - 2));
    }
    return cv;
}

std::string CoeffVector::str() const {
    return "(" + c1.get_str() + "," + c2.get_str() + "," + c3.get_str() + ")";
}

CoeffVector reduce(const CoeffVector& c) {
    if (c.c1 == 0 && c.c2 == 0 && c.c3 == 0) throw Error("zero coefficient vector");
    Int g = gcd3(abs(c.c1), abs(c.c2), abs(c.c3));
    CoeffVector r{c.c1 / g, c.c2 / g, c.c3 / g, true};
    int lead = sgn(r.c3) != 0 ? sgn(r.c3) : (sgn(r.c2) != 0 ? sgn(r.c2) : sgn(r.c1));
    if (lead < 0) {
        r.c1 = -r.c1;
        r.c2 = -r.c2;
        r.c3 = -r.c3;
    }
    return r;
}

QuadCoeffs quad_coeffs(const CFWord& w) {
    long h = static_cast<long>(w.pre_period());
    long g = h + static_cast<long>(w.period_length());
    Convergents cv = convergents(w, g - 1);
    CoeffVector raw;
    raw.c3 = cv.B(h - 2) * cv.B(g - 1) - cv.B(h - 1) * cv.B(g - 2);
    raw.c2 = cv.B(h - 1) * cv.A(g - 2) + cv.A(h - 1) * cv.B(g - 2) - cv.A(h - 2) * cv.B(g - 1) -
             cv.B(h - 2) * cv.A(g - 1);
    raw.c1 = cv.A(h - 2) * cv.A(g - 1) - cv.A(h - 1) * cv.A(g - 2);
    return QuadCoeffs{raw, reduce(raw)};
}

namespace {

CoeffVector constant_coeffs(long m, long a) {
    Int M(m), A(a);
    return CoeffVector{M * M - A * M - 1, A - 2 * M, Int(1)};
}

// u = [m, x, y, x, y, ...]
CoeffVector two_periodic_coeffs(long m, long x, long y) {
    Int M(m), X(x), Y(y);
    return CoeffVector{-X * M * M + X * Y * M + Y, 2 * X * M - X * Y, -X};
}

// u = [m, x, y, z, x, y, z, ...]
CoeffVector three_periodic_coeffs(long m, long x, long y, long z) {
    Int M(m), X(x), Y(y), Z(z);
    CoeffVector c;
    c.c1 = M * M + M * Y + M * M * X * Y - X * M - Z * M - Z * Y - X * Y * Z * M - 1;
    c.c2 = X * Y * Z + Z + X - Y - 2 * M - 2 * M * X * Y;
    c.c3 = 1 + X * Y;
    return c;
}

}  // namespace

CoeffVector closed_form_coeffs_any_head(Family f, long m, const std::vector<long>& rot) {
    if (m < 1) throw HeadOutOfRangeError("head value must be >= 1");
    switch (f) {
        case Family::constant:
            if (rot.size() != 1) throw Error("constant family takes one parameter");
            return constant_coeffs(m, rot[0]);
        case Family::two_periodic:
            if (rot.size() != 2) throw Error("two-periodic family takes two parameters");
            return two_periodic_coeffs(m, rot[0], rot[1]);
        case Family::three_periodic:
            if (rot.size() != 3) throw Error("three-periodic family takes three parameters");
            return three_periodic_coeffs(m, rot[0], rot[1], rot[2]);
    }
    throw Error("unknown family");
}

CoeffVector closed_form_coeffs(Family f, long m, const std::vector<long>& rot) {
    if (rot.empty()) throw Error("empty parameter list");
    if (m < 1 || m > rot.back())
        throw HeadOutOfRangeError("head value " + std::to_string(m) + " outside 1.." +
                                  std::to_string(rot.back()));
    return closed_form_coeffs_any_head(f, m, rot);
}

int family_k_sign(Family f) { return f == Family::constant ? -1 : 1; }

QuadExt make_root(const CoeffVector& c) { return make_root(c.c1, c.c2, c.c3); }

QuadExt cf_value(const CFWord& w) {
    // Value of the purely periodic tail: a reduced quadratic irrational, so
    // the larger root is the right one. The head is applied as the Moebius
    // transform u = (A_{h-1} xi + A_{h-2}) / (B_{h-1} xi + B_{h-2}).
    CFWord tail_word({}, w.period);
    QuadExt xi = make_root(quad_coeffs(tail_word).raw);
    long h = static_cast<long>(w.pre_period());
    Convergents cv = convergents(w, h - 1);
    QuadExt num = QuadExt(Rat(cv.A(h - 1))) * xi + QuadExt(Rat(cv.A(h - 2)));
    QuadExt den = QuadExt(Rat(cv.B(h - 1))) * xi + QuadExt(Rat(cv.B(h - 2)));
    QuadExt u = num / den;
    long a0 = w.a0();
    if (u < QuadExt(Rat(a0)) || u >= QuadExt(Rat(a0 + 1)))
        throw Error("cf_value outside [a0, a0+1) for word " + w.str());
    return u;
}

}  // namespace bixlin
