#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affq/rational_function.hpp"
#include "affq/weyl.hpp"

using namespace affq;

namespace {
Polynomial root_poly(const RootSystem& rs, int i) { return Polynomial::from_root(rs, rs.simple_root(i)); }
}  // namespace

TEST_CASE("weyl_act on simple roots") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    WeylElement s1 = WeylElement::simple(rs.get(), 1);

    CHECK(weyl_act(s1, a1) == -a1);            // s1 . a1 = -a1
    CHECK(weyl_act(s1, a2) == a1 + a2);        // s1 . a2 = a1 + a2
    WeylElement w0 = WeylElement::from_word(rs.get(), {1, 2, 1});
    CHECK(weyl_act(w0, a1) == -a2);            // w0 . a1 = -a2
}

TEST_CASE("weyl_act is a degree-preserving ring automorphism") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    Polynomial p = a1 * a1 + a2 * Rational(3);
    for (const auto& v : rs->weyl().elements()) {
        for (const auto& w : rs->weyl().elements()) {
            CHECK(weyl_act(v * w, p) == weyl_act(v, weyl_act(w, p)));
        }
        CHECK(weyl_act(v, a1 * a2) == weyl_act(v, a1) * weyl_act(v, a2));
        CHECK(weyl_act(v, p).degree() == p.degree());
        CHECK(weyl_act(v.inverse(), weyl_act(v, p)) == p);
    }
}

TEST_CASE("action preserves the root sublattice Q") {
    auto rs = RootSystem::build(CartanType::parse("B2"));
    for (const auto& v : rs->weyl().elements())
        for (int i = 1; i <= rs->rank(); ++i) {
            Weight img = v.act(rs->root_to_weight(rs->simple_root(i)));
            CHECK(rs->weight_to_root(img).has_value());
        }
}

TEST_CASE("rational function normalization") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    Polynomial two = Polynomial::constant(rs->rank(), Rational(2));
    Polynomial mone = Polynomial::constant(rs->rank(), Rational(-1));

    // (2 a1)/2 -> a1
    RationalFunction f(rs.get(), a1 * Rational(2), two);
    CHECK(f.normalized().num() == a1);
    CHECK(f.normalized().den_trivial());

    // (a1 a2)/a1 -> a2
    RationalFunction g(rs.get(), a1 * a2, a1);
    CHECK(g.normalized().num() == a2);
    CHECK(g.normalized().den_trivial());

    // (-a1)/(-1) -> a1
    RationalFunction h(rs.get(), -a1, mone);
    CHECK(h.normalized().num() == a1);
    CHECK(h.normalized().den_trivial());

    // the canonical denominator is a plain product of positive roots
    RationalFunction k(rs.get(), a1, (a1 + a2) * Rational(-2));
    CHECK(k.normalized().den_content().is_one());
    CHECK(k.normalized().den_roots().size() == 1);
    CHECK(k.normalized().num() == a1 * Rational(-1, 2));

    CHECK_THROWS(RationalFunction(rs.get(), a1, Polynomial(rs->rank())));
    // a denominator that is not a product of roots is rejected
    CHECK_THROWS(RationalFunction(rs.get(), a1, Polynomial::variable(2, 1)));
}

TEST_CASE("rational function equality by cross multiplication") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    RationalFunction f(rs.get(), a1 * a2 + a1 * a1, a1);  // (a1(a1+a2))/a1
    RationalFunction g(a1 + a2);
    CHECK(f == g);
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == a1 + a2);
    RationalFunction h(rs.get(), Polynomial::constant(2, Rational(1)), a1);
    CHECK_FALSE(h.is_polynomial());
    // lcm-based addition keeps the denominator a single factor
    RationalFunction sum = h + RationalFunction(rs.get(), a2, a1);
    CHECK(sum.den_roots().size() == 1);
}

TEST_CASE("polynomial division and content") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    Polynomial p = (a1 + a2) * (a1 + a2) * a1;
    auto q = p.divide_exact(a1 + a2);
    REQUIRE(q.has_value());
    CHECK(*q == (a1 + a2) * a1);
    CHECK_FALSE(p.divide_exact(a2).has_value());
    CHECK((a1 * Rational(4) + a2 * Rational(6)).content() == Rational(2));
}

TEST_CASE("polynomial printing uses simple-root monomials when integral") {
    auto rs = RootSystem::build(CartanType::parse("A2"));
    Polynomial a1 = root_poly(*rs, 1), a2 = root_poly(*rs, 2);
    CHECK((a1 * (a1 + a2)).to_string(rs.get()) == "a1^2 + a1*a2");
    CHECK((-a1).to_string(rs.get()) == "-a1");
    // a fundamental weight is not in the root lattice for A2
    Polynomial w1 = Polynomial::variable(rs->rank(), 1);
    CHECK(w1.to_string(rs.get()) == "w1");
}
