#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "confalg/poly.hpp"

using namespace confalg;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

Poly random_poly(std::mt19937& rng, int max_l, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, 4), coef(-5, 5), expo(0, max_deg);
    Poly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Poly term(static_cast<long>(coef(rng)));
        term *= Poly::D().pow(expo(rng));
        for (int i = 1; i <= max_l; ++i) term *= Poly::L(i).pow(expo(rng));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    Poly p = Poly::D() + Rational(2) * Poly::L(1);
    CHECK(p * Poly::one() == p);
    CHECK(p * p == P("D^2 + 4*D*L1 + 4*L1^2"));
    CHECK(p - p == Poly::zero());
    CHECK((p + (-p)).is_zero());
    CHECK(Poly::zero() * p == Poly::zero());
}

TEST_CASE("substitution") {
    Poly p = P("D + 2*L1");
    CHECK(p.substitute(Var::L(1), -Poly::L(1) - Poly::D()) == P("-D - 2*L1"));
    CHECK(p.substitute(Var::L(1), Poly::L(1)) == p);
    CHECK(P("L1*L2").substitute(Var::L(2), Poly::L(1) + Poly::L(3)) ==
          P("L1^2 + L1*L3"));
    // Simultaneous swap differs from sequential substitution.
    Poly q = P("L1 - L2");
    CHECK(q.substitute_many({{1, Poly::L(2)}, {2, Poly::L(1)}}) == P("L2 - L1"));
}

TEST_CASE("rename") {
    CHECK(P("L1*D").rename_lvars({{1, 3}}) == P("L3*D"));
    CHECK(P("L1+L2").rename_lvars({{1, 2}, {2, 1}}) == P("L1+L2"));
    CHECK(P("L1*L2").rename_lvars({{1, 2}, {2, 1}}) == P("L1*L2"));
    CHECK_THROWS(P("L1*L2").rename_lvars({{1, 2}}));
}

TEST_CASE("parser and printer round trip") {
    for (const char* s :
         {"0", "1", "-1", "D", "L1", "D^2 + 4*D*L1 + 4*L1^2", "-D - 2*L1",
          "1/2*D", "3/7*L2^5 - L1", "D*L1*L2*L3"}) {
        Poly p = P(s);
        CHECK(P(p.to_string()) == p);
    }
    CHECK(P(" D +   2*L1 ") == P("D+2L1"));
    CHECK(P("λ1") == Poly::L(1));
    CHECK(P("D + 2*λ1") == P("D + 2*L1"));
    CHECK(P("(D+2L1)*(D+2L1)") == P("D^2 + 4*D*L1 + 4*L1^2"));
    CHECK(P("1/2 + 1/2") == Poly::one());
    CHECK_THROWS(P("D +"));
    CHECK_THROWS(P("Q"));
    CHECK_THROWS(P("1/0"));
    CHECK_THROWS(P("L0"));
}

TEST_CASE("canonical string form") {
    CHECK(P("L1 + D").to_string() == "L1 + D");
    CHECK(Poly::zero().to_string() == "0");
    CHECK((Rational(-1, 2) * Poly::D()).to_string() == "-1/2*D");
    // Graded-lex order with D < L1 < L2, highest first.
    CHECK(P("D^2 + D*L1 + L1^2 + D + L2").to_string() ==
          "L1^2 + D*L1 + D^2 + L2 + D");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Poly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3),
             c = random_poly(rng, 2, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Poly a = random_poly(rng, 2, 2), b = random_poly(rng, 2, 2);
        Poly e = random_poly(rng, 2, 2);
        std::map<int, Poly> s{{1, e}};
        CHECK((a * b).substitute_many(s) ==
              a.substitute_many(s) * b.substitute_many(s));
        CHECK((a + b).substitute_many(s) ==
              a.substitute_many(s) + b.substitute_many(s));
    }
}

TEST_CASE("degree helpers") {
    Poly p = P("D^2*L1 + L2^4");
    CHECK(p.degree_in(Var::D()) == 2);
    CHECK(p.degree_in(Var::L(2)) == 4);
    CHECK(p.max_l_index() == 2);
    CHECK(p.total_degree() == 4);
    CHECK(Poly::zero().total_degree() == -1);
    CHECK(p.coefficient_of(Var::L(1), 1) == P("D^2"));
    CHECK(p.coefficient_of(Var::L(1), 0) == P("L2^4"));
}
