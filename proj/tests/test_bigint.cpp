#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "affq/rational.hpp"

using namespace affq;

TEST_CASE("bigint basic arithmetic") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(12).to_string() == "12");
    CHECK(BigInt(-12).to_string() == "-12");
    CHECK((BigInt(7) + BigInt(-12)).to_string() == "-5");
    CHECK((BigInt(-7) * BigInt(-6)).to_string() == "42");
    CHECK((BigInt("123456789123456789123456789") * BigInt("1000000000000")).to_string() ==
          "123456789123456789123456789000000000000");
    CHECK(BigInt("18446744073709551616").to_string() == "18446744073709551616");  // 2^64
}

TEST_CASE("bigint divmod cross-checked against native arithmetic") {
    std::mt19937_64 rng(20240612);
    for (int iter = 0; iter < 4000; ++iter) {
        long long a = static_cast<long long>(rng() % 2000000000ull) - 1000000000;
        long long b = static_cast<long long>(rng() % 100000ull) - 50000;
        if (b == 0) b = 7;
        BigInt q, r;
        BigInt::divmod(BigInt(a), BigInt(b), q, r);
        CHECK(q.to_ll() == a / b);
        CHECK(r.to_ll() == a % b);
    }
}

TEST_CASE("bigint divmod on multi-limb values") {
    BigInt a("340282366920938463463374607431768211457");  // 2^128 + 1
    BigInt b("18446744073709551616");                     // 2^64
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q.to_string() == "18446744073709551616");
    CHECK(r.to_string() == "1");
    CHECK((q * b + r) == a);

    // reconstruction property on random multi-limb pairs
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt x = BigInt(static_cast<long long>(rng())) * BigInt(static_cast<long long>(rng())) +
                   BigInt(static_cast<long long>(rng() % 1000));
        BigInt y = BigInt(static_cast<long long>(rng() % 1000000000 + 1));
        if (rng() % 2) y = y * BigInt(static_cast<long long>(rng() % 100000 + 1));
        BigInt qq, rr;
        BigInt::divmod(x, y, qq, rr);
        CHECK((qq * y + rr) == x);
        CHECK(rr.abs() < y.abs());
    }
}

TEST_CASE("gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_string() == "6");
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)).to_string() == "6");
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_string() == "5");
}

TEST_CASE("rational arithmetic and normalization") {
    Rational a(1, 2), b(1, 3);
    CHECK((a + b).to_string() == "5/6");
    CHECK((a * b).to_string() == "1/6");
    CHECK((a - a).is_zero());
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational::parse("-5/2") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK((Rational(3, 4) / Rational(3, 2)) == Rational(1, 2));
}
