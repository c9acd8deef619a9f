#include "bixlin/exactfield.hpp"

#include <sstream>
#include <utility>

namespace bixlin {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int gcd3(const Int& a, const Int& b, const Int& c) {
    Int g = gcd(a, b);
    return gcd(g, c);
}

namespace {

// Extract square factors f^2 from d (returning f, leaving d square-free up to
// the trial bound), then collapse a perfect-square remainder entirely.
Int extract_square_factor(Int& d) {
    Int f(1);
    if (d <= 1) return f;
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
        d = 1;
        return s;
    }
    for (unsigned long p = 2; p <= 10000; ++p) {
        unsigned long p2 = p * p;
        if (Int(p2) > d) break;
        while (mpz_divisible_ui_p(d.get_mpz_t(), p2) != 0) {
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p2);
            f *= p;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
        f *= s;
        d = 1;
    }
    return f;
}

}  // namespace

QuadExt::QuadExt(Rat rat, Rat irr, Int radicand)
    : rat_(std::move(rat)), irr_(std::move(irr)), rad_(std::move(radicand)) {
    if (rad_ < 0) throw NegativeDiscriminantError("negative radicand");
    normalize();
}

void QuadExt::normalize() {
    if (irr_ == 0 || rad_ == 0) {
        irr_ = 0;
        rad_ = 0;
        return;
    }
    Int f = extract_square_factor(rad_);
    if (f != 1) irr_ *= f;
    if (rad_ == 1) {  // perfect square collapsed: the value is rational
        rat_ += irr_;
        irr_ = 0;
        rad_ = 0;
    }
}

void QuadExt::normalize_light() {
    if (irr_ == 0 || rad_ == 0) {
        irr_ = 0;
        rad_ = 0;
    }
}

int QuadExt::sign() const {
    int sa = sgn(rat_);
    int sb = sgn(irr_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare rat^2 against irr^2 * D. Since D is never a
    // perfect square here, the two cannot be equal.
    Rat lhs = rat_ * rat_;
    Rat rhs = irr_ * irr_ * Rat(rad_);
    int c = cmp(lhs, rhs);
    return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

QuadExt QuadExt::rebased(const Int& target) const {
    if (irr_ == 0) {
        QuadExt r = *this;
        r.rad_ = 0;
        return r;
    }
    if (rad_ == target) return *this;
    Int prod = rad_ * target;
    if (target > 0 && mpz_perfect_square_p(prod.get_mpz_t()) != 0) {
        // sqrt(rad) = (s/target) * sqrt(target) with s = sqrt(rad*target)
        Int s;
        mpz_sqrt(s.get_mpz_t(), prod.get_mpz_t());
        QuadExt r;
        r.rat_ = rat_;
        r.irr_ = irr_ * make_rat(s, target);
        r.rad_ = target;
        return r;
    }
    throw RadicandMismatchError("incompatible radicands " + rad_.get_str() + " and " +
                                target.get_str());
}

QuadExt QuadExt::aligned(const QuadExt& o) const {
    if (irr_ == 0 || rad_ == o.rad_) return o;
    return o.rebased(rad_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    QuadExt b = aligned(o);
    if (irr_ == 0) rad_ = b.rad_;
    rat_ += b.rat_;
    irr_ += b.irr_;
    normalize_light();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) { return *this += -o; }

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    QuadExt b = aligned(o);
    if (irr_ == 0) rad_ = b.rad_;
    Rat d(rad_);
    Rat nrat = rat_ * b.rat_ + irr_ * b.irr_ * d;
    Rat nirr = rat_ * b.irr_ + irr_ * b.rat_;
    rat_ = nrat;
    irr_ = nirr;
    normalize_light();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw DivisionByZeroError("QuadExt division by zero");
    QuadExt b = aligned(o);
    if (b.irr_ == 0) {
        rat_ /= b.rat_;
        irr_ /= b.rat_;
        normalize_light();
        return *this;
    }
    if (irr_ == 0) rad_ = b.rad_;
    // Multiply by the conjugate; b * conj(b) = rat^2 - irr^2 D is a nonzero
    // rational because D is not a perfect square.
    Rat norm = b.rat_ * b.rat_ - b.irr_ * b.irr_ * Rat(b.rad_);
    *this *= b.conjugate();
    rat_ /= norm;
    irr_ /= norm;
    normalize_light();
    return *this;
}

Int QuadExt::floor() const {
    if (irr_ == 0) return rat_floor(rat_);
    // Write the value as (P + Q*sqrt(D)) / R with integers P,Q and R > 0.
    Int qa = rat_.get_den(), qb = irr_.get_den();
    Int r = qa * qb;
    Int p = rat_.get_num() * qb;
    Int q = irr_.get_num() * qa;
    Int t;  // floor(Q*sqrt(D)); exact because Q*sqrt(D) is irrational here
    Int q2d = q * q * rad_;
    Int s;
    mpz_sqrt(s.get_mpz_t(), q2d.get_mpz_t());
    if (q > 0)
        t = s;
    else
        t = -s - 1;
    Int n0;
    Int pt = p + t;
    mpz_fdiv_q(n0.get_mpz_t(), pt.get_mpz_t(), r.get_mpz_t());
    // Candidate floor is n0 or n0+1; one exact sign test settles it.
    QuadExt diff = *this - QuadExt(Rat(n0 + 1));
    return diff.sign() >= 0 ? n0 + 1 : n0;
}

Int QuadExt::ceil() const {
    if (irr_ == 0) return rat_ceil(rat_);
    return floor() + 1;  // irrational values are never integers
}

mpf_class QuadExt::to_mpf(mp_bitcnt_t prec) const {
    mpf_class result(rat_, prec);
    if (irr_ != 0) {
        mpf_class root(rad_, prec);
        root = sqrt(root);
        mpf_class b(irr_, prec);
        result += b * root;
    }
    return result;
}

double QuadExt::to_double() const { return to_mpf(128).get_d(); }

std::string QuadExt::str() const {
    std::ostringstream os;
    if (irr_ == 0) {
        os << rat_;
        return os.str();
    }
    os << rat_ << (sgn(irr_) < 0 ? " - " : " + ");
    Rat a = abs(irr_);
    if (a != 1) os << a << "*";
    os << "sqrt(" << rad_ << ")";
    return os.str();
}

QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

QuadExt make_root(const Int& c1, const Int& c2, const Int& c3) {
    if (c3 == 0) throw ZeroLeadingCoefficientError("leading coefficient c3 is zero");
    Int disc = c2 * c2 - 4 * c1 * c3;
    if (disc <= 0) throw NegativeDiscriminantError("no real root: discriminant " + disc.get_str());
    Int two_c3 = 2 * c3;
    int s = sgn(c3);
    return QuadExt(make_rat(-c2, two_c3), make_rat(Int(s), two_c3), disc);
}

}  // namespace bixlin
