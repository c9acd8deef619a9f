#pragma once

// Exact arithmetic in real quadratic number fields Q(sqrt(D)).
//
// A QuadExt is a value a + b*sqrt(D) with a,b rational and D a non-negative
// integer radicand. All decisions (sign, comparison, floor, ceiling) are made
// with integer/rational arithmetic only; floating point appears solely in the
// optional decimal-evaluation helper used by cross-check harnesses.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bixlin {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroLeadingCoefficientError : Error {
    using Error::Error;
};
struct NegativeDiscriminantError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct RadicandMismatchError : Error {
    using Error::Error;
};
struct TaubPointError : Error {
    using Error::Error;
};
struct TaubDegeneracyError : Error {
    using Error::Error;
};
struct HeadOutOfRangeError : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};
struct ConfigError : Error {
    using Error::Error;
};

// Canonical rational with positive denominator, gcd-reduced.
Rat make_rat(const Int& num, const Int& den);

Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);
Int gcd3(const Int& a, const Int& b, const Int& c);

class QuadExt {
  public:
    QuadExt() : rat_(0), irr_(0), rad_(0) {}
    QuadExt(const Rat& r) : rat_(r), irr_(0), rad_(0) {}  // NOLINT: implicit by design
    QuadExt(long r) : rat_(r), irr_(0), rad_(0) {}        // NOLINT
    QuadExt(Rat rat, Rat irr, Int radicand);

    static QuadExt sqrt_of(const Int& d) { return QuadExt(Rat(0), Rat(1), d); }

    const Rat& rat_part() const { return rat_; }
    const Rat& irr_part() const { return irr_; }
    const Int& radicand() const { return rad_; }

    bool is_rational() const { return irr_ == 0; }
    bool is_zero() const { return irr_ == 0 && rat_ == 0; }

    // Exact sign in {-1,0,+1}; no floating point involved.
    int sign() const;

    QuadExt conjugate() const { return QuadExt(rat_, -irr_, rad_); }

    // Rewrite over the target radicand when the two generate the same field
    // (target = 0 only for rational values). Throws RadicandMismatchError.
    QuadExt rebased(const Int& target) const;

    Int floor() const;
    Int ceil() const;

    // Decimal evaluation for cross-check harnesses only.
    mpf_class to_mpf(mp_bitcnt_t prec = 256) const;
    double to_double() const;

    std::string str() const;

    QuadExt operator-() const { return QuadExt(-rat_, -irr_, rad_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) { return (a - b).is_zero(); }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }
    friend bool operator<(const QuadExt& a, const QuadExt& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return (a - b).sign() >= 0; }

  private:
    Rat rat_;
    Rat irr_;
    Int rad_;

    // Full normalization extracts square factors from the radicand; the light
    // form only clears degenerate fields. Arithmetic between normalized values
    // keeps the radicand square-free, so operators use the light form.
    void normalize();
    void normalize_light();
    // Put o over this value's radicand (or adopt o's when this is rational).
    // Returns the rewritten copy; throws RadicandMismatchError when the
    // radicands generate different fields.
    QuadExt aligned(const QuadExt& o) const;
};

QuadExt abs(const QuadExt& x);

inline int sign(const QuadExt& x) { return x.sign(); }
inline Int floor_exact(const QuadExt& x) { return x.floor(); }
inline Int ceil_exact(const QuadExt& x) { return x.ceil(); }

// Larger real root of c3*u^2 + c2*u + c1 = 0, exactly.
QuadExt make_root(const Int& c1, const Int& c2, const Int& c3);

}  // namespace bixlin
