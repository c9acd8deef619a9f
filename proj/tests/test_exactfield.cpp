#include <random>

#include "bixlin/exactfield.hpp"
#include "doctest.h"

using namespace bixlin;

namespace {

QuadExt qe(long rat_num, long rat_den, long irr_num, long irr_den, long rad) {
    return QuadExt(make_rat(Int(rat_num), Int(rat_den)), make_rat(Int(irr_num), Int(irr_den)),
                   Int(rad));
}

// Random values over a fixed radicand so pairs are field-compatible.
QuadExt random_quadext(std::mt19937& rng, long rad) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return qe(num(rng), den(rng), num(rng), den(rng), rad);
}

const long kRadicands[] = {2, 3, 5, 6, 7, 10, 13, 29, 85, 145};

}  // namespace

TEST_CASE("make_root examples") {
    // golden ratio: positive root of u^2 - u - 1 = 0
    QuadExt phi = make_root(Int(-1), Int(-1), Int(1));
    CHECK(phi == qe(1, 2, 1, 2, 5));

    QuadExt root2 = make_root(Int(-2), Int(0), Int(1));
    CHECK(root2 == QuadExt::sqrt_of(Int(2)));

    // u^2 + u - 3 = 0, larger root (-1+sqrt(13))/2; must equal the numeric
    // continued-fraction evaluation of [1,3,3,3,...] to 12 digits
    QuadExt r = make_root(Int(-3), Int(1), Int(1));
    CHECK(r == qe(-1, 2, 1, 2, 13));
    double xi = 3.0;
    for (int i = 0; i < 60; ++i) xi = 3.0 + 1.0 / xi;
    double u_num = 1.0 + 1.0 / xi;
    CHECK(r.to_double() == doctest::Approx(u_num).epsilon(1e-12));

    CHECK_THROWS_AS(make_root(Int(1), Int(1), Int(0)), ZeroLeadingCoefficientError);
    CHECK_THROWS_AS(make_root(Int(1), Int(0), Int(1)), NegativeDiscriminantError);
    CHECK_THROWS_AS(make_root(Int(1), Int(2), Int(1)), NegativeDiscriminantError);  // disc 0
}

TEST_CASE("make_root with negative leading coefficient picks the larger root") {
    // -3u^2 + 9u + 17 = 0 has roots ~ -1.31 and ~ 4.31
    QuadExt u = make_root(Int(17), Int(9), Int(-3));
    CHECK(u.sign() > 0);
    CHECK(u.to_double() == doctest::Approx(4.3137).epsilon(1e-3));
}

TEST_CASE("arithmetic examples") {
    QuadExt phi = qe(1, 2, 1, 2, 5);
    CHECK(phi * phi == qe(3, 2, 1, 2, 5));  // phi^2 = phi + 1

    QuadExt root2 = QuadExt::sqrt_of(Int(2));
    QuadExt four = root2 * root2;
    CHECK(four.is_rational());
    CHECK(four == QuadExt(Rat(2)));
    CHECK(four.radicand() == 0);

    QuadExt num = qe(3, 1, 3, 1, 2);  // 3 + 3*sqrt(2)
    QuadExt den = qe(1, 1, 1, 1, 2);  // 1 + sqrt(2)
    QuadExt q = num / den;
    CHECK(q.is_rational());
    CHECK(q == QuadExt(Rat(3)));

    CHECK_THROWS_AS(num / QuadExt(), DivisionByZeroError);
}

TEST_CASE("radicand normalization and reconciliation") {
    // sqrt(8) = 2*sqrt(2)
    QuadExt a = QuadExt::sqrt_of(Int(8));
    CHECK(a.radicand() == 2);
    CHECK(a.irr_part() == 2);

    // perfect square collapses to a rational
    QuadExt b = QuadExt::sqrt_of(Int(49));
    CHECK(b.is_rational());
    CHECK(b == QuadExt(Rat(7)));

    // same field reached through a square factor beyond the trial bound
    Int big_prime(10007);
    QuadExt c = QuadExt::sqrt_of(big_prime * big_prime * 2);
    QuadExt d = QuadExt::sqrt_of(Int(2));
    CHECK(c - d * QuadExt(Rat(10007)) == QuadExt());

    CHECK_THROWS_AS(QuadExt::sqrt_of(Int(2)) + QuadExt::sqrt_of(Int(3)), RadicandMismatchError);
}

TEST_CASE("sign examples") {
    CHECK(QuadExt().sign() == 0);
    CHECK(qe(-1, 1, 1, 1, 2).sign() == 1);  // sqrt(2) > 1
    CHECK(qe(3, 1, -2, 1, 2).sign() == 1);  // 9 > 8
    CHECK(qe(-3, 1, 2, 1, 2).sign() == -1);
    CHECK(qe(2, 1, -3, 1, 2).sign() == -1);  // 4 < 18
}

TEST_CASE("ceil and floor examples") {
    QuadExt exact3 = qe(3, 1, 3, 1, 2) / qe(1, 1, 1, 1, 2);
    CHECK(ceil_exact(exact3) == 3);  // exact integer

    CHECK(ceil_exact(qe(7, 1, 3, 1, 2)) == 12);  // 7 + 3*sqrt(2) ~ 11.24
    CHECK(ceil_exact(qe(0, 1, -1, 1, 2)) == -1);
    CHECK(floor_exact(qe(0, 1, -1, 1, 2)) == -2);
    CHECK(ceil_exact(QuadExt(make_rat(Int(7), Int(2)))) == 4);
    CHECK(floor_exact(QuadExt(make_rat(Int(7), Int(2)))) == 3);
    CHECK(ceil_exact(QuadExt(make_rat(Int(-7), Int(2)))) == -3);
}

TEST_CASE("arith agrees with high-precision decimal evaluation") {
    std::mt19937 rng(20240811);
    const mp_bitcnt_t prec = 333;  // ~100 decimal digits
    mpf_class tol(0, prec);
    tol = 1;
    for (int i = 0; i < 40; ++i) tol /= 10;  // 1e-40
    for (int iter = 0; iter < 1000; ++iter) {
        long rad = kRadicands[static_cast<std::size_t>(iter) % 10];
        QuadExt x = random_quadext(rng, rad);
        QuadExt y = random_quadext(rng, rad);
        QuadExt sum = x + y, diff = x - y, prod = x * y;
        mpf_class fx = x.to_mpf(prec), fy = y.to_mpf(prec);
        CHECK(abs(sum.to_mpf(prec) - (fx + fy)) < tol);
        CHECK(abs(diff.to_mpf(prec) - (fx - fy)) < tol);
        CHECK(abs(prod.to_mpf(prec) - fx * fy) < tol);
        if (!y.is_zero()) CHECK(abs((x / y).to_mpf(prec) - fx / fy) < tol);
    }
}

TEST_CASE("conjugation product is rational") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        QuadExt x = random_quadext(rng, kRadicands[static_cast<std::size_t>(iter) % 10]);
        CHECK((x * x.conjugate()).is_rational());
    }
}

TEST_CASE("ceil bracketing holds exactly for randomized values") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 1000; ++iter) {
        QuadExt x = random_quadext(rng, kRadicands[static_cast<std::size_t>(iter) % 10]);
        Int c = ceil_exact(x);
        QuadExt cx{Rat(c)};
        CHECK((cx - x).sign() >= 0);               // x <= ceil(x)
        CHECK((x - (cx - QuadExt(1))).sign() > 0);  // ceil(x) - 1 < x
    }
}

TEST_CASE("make_root plugged back into its quadratic gives exactly zero") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> coeff(-20, 20);
    int done = 0;
    while (done < 300) {
        Int c1(coeff(rng)), c2(coeff(rng)), c3(coeff(rng));
        if (c3 == 0 || c2 * c2 - 4 * c1 * c3 <= 0) continue;
        QuadExt u = make_root(c1, c2, c3);
        QuadExt residue = QuadExt(Rat(c3)) * u * u + QuadExt(Rat(c2)) * u + QuadExt(Rat(c1));
        CHECK(residue.is_zero());
        ++done;
    }
}

TEST_CASE("comparisons are exact near ties") {
    // 3 - 2*sqrt(2) vs 0: tiny but positive
    CHECK(qe(3, 1, -2, 1, 2) > QuadExt());
    // (1+sqrt(5))/2 vs 1.618...: strict order against nearby rationals
    QuadExt phi = qe(1, 2, 1, 2, 5);
    CHECK(phi > QuadExt(make_rat(Int(1618033), Int(1000000))));
    CHECK(phi < QuadExt(make_rat(Int(1618034), Int(1000000))));
}
