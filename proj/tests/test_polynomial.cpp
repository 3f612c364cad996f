#include <doctest.h>

#include <random>

#include "qi/parse.hpp"
#include "qi/polynomial.hpp"

using namespace qi;

namespace {

// Deterministic random polynomials for the property checks.
struct Gen {
    std::mt19937_64 rng{20260810};

    int small(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Polynomial poly(const Ring& ring, int max_terms = 5, int max_deg = 3, bool laurent = false) {
        Polynomial p(ring);
        int terms = small(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m(ring.nvars());
            for (int i = 0; i < ring.nvars(); ++i)
                m.e[i] = laurent ? small(-max_deg, max_deg) : small(0, max_deg);
            p.add_term(m, make_rational(small(-9, 9), small(1, 4)));
        }
        return p;
    }
};

}  // namespace

TEST_CASE("rational scalars stay reduced with positive denominators") {
    Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
}

TEST_CASE("difference of squares") {
    Ring R = poly_ring(2);
    auto t1 = Polynomial::variable(R, 0), t2 = Polynomial::variable(R, 1);
    CHECK((t1 + t2) * (t1 - t2) == t1 * t1 - t2 * t2);
    CHECK((t1 * t2).pow(2) == t1 * t1 * t2 * t2);
}

TEST_CASE("elementary symmetric product expands termwise") {
    Ring R = poly_ring(3);
    auto e1 = elementary_symmetric_vars<Rational>(R, 0, 3, 1);
    auto e2 = elementary_symmetric_vars<Rational>(R, 0, 3, 2);
    auto expect = parse_poly(
        "t1^2*t2 + t1^2*t3 + t1*t2^2 + t2^2*t3 + t1*t3^2 + t2*t3^2 + 3*t1*t2*t3", R);
    CHECK(e1 * e2 == expect);
}

TEST_CASE("divide_exact on the worked examples") {
    Ring R = poly_ring(2);
    auto f = parse_poly("t1*t2^2 - t1^2*t2", R);
    auto g = parse_poly("t1*t2", R);
    auto q = divide_exact(f, g);
    REQUIRE(q);
    CHECK(*q == parse_poly("t2 - t1", R));
    CHECK(*q * g == f);

    CHECK(!divide_exact(parse_poly("t1", R), g));
    auto zero = divide_exact(Polynomial::zero(R), g);
    REQUIRE(zero);
    CHECK(zero->is_zero());
    CHECK_THROWS_AS(divide_exact(f, Polynomial::zero(R)), std::invalid_argument);
}

TEST_CASE("laurent divisibility, units and shifts") {
    Ring Z = laurent_ring(2);
    auto f = parse_laurent("(1-z1)*(1-z2)*(z2-z1)", Z);
    auto g = parse_laurent("(1-z1)*(1-z2)", Z);
    auto q = laurent_divide_exact(f, g);
    REQUIRE(q);
    CHECK(*q == parse_laurent("z2 - z1", Z));
    CHECK(*q * g == f);

    CHECK(!laurent_divide_exact(parse_laurent("z1 - z2", Z), g));

    Ring Z1 = laurent_ring(1);
    auto u = laurent_divide_exact(parse_laurent("z1^-1", Z1), parse_laurent("z1", Z1));
    REQUIRE(u);
    CHECK(*u == parse_laurent("z1^-2", Z1));

    // integer-coefficient constraint: (z+1)/2 is not a Laurent polynomial over Z
    auto half = laurent_divide_exact(parse_laurent("z1 + 1", Z1), parse_laurent("2", Z1));
    CHECK(!half);
}

TEST_CASE("ring axioms on random inputs") {
    Gen gen;
    Ring R = poly_ring(3);
    for (int i = 0; i < 40; ++i) {
        auto a = gen.poly(R), b = gen.poly(R), c = gen.poly(R);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("divide_exact(f*g, g) = f on random inputs") {
    Gen gen;
    Ring R = poly_ring(3);
    int done = 0;
    while (done < 25) {
        auto f = gen.poly(R), g = gen.poly(R);
        if (g.is_zero()) continue;
        auto q = divide_exact(f * g, g);
        REQUIRE(q);
        CHECK(*q == f);
        ++done;
    }
}

TEST_CASE("homogeneous degree is additive under multiplication") {
    Gen gen;
    Ring R = poly_ring(2);
    int done = 0;
    while (done < 20) {
        auto a = gen.poly(R), b = gen.poly(R);
        if (a.is_zero() || b.is_zero()) continue;
        int da = a.total_degree(), db = b.total_degree();
        auto ah = a.component(da), bh = b.component(db);
        if (ah.is_zero() || bh.is_zero()) continue;
        auto prod = ah * bh;
        REQUIRE(prod.homogeneous_degree());
        CHECK(*prod.homogeneous_degree() == da + db);
        ++done;
    }
}

TEST_CASE("parse/render round trip") {
    Gen gen;
    Ring R = poly_ring(3);
    for (int i = 0; i < 40; ++i) {
        auto p = gen.poly(R);
        CHECK(parse_poly(p.str(), R) == p);
    }
    Ring Z = laurent_ring(2);
    for (int i = 0; i < 40; ++i) {
        auto p = gen.poly(Z, 5, 3, true);
        LaurentPolynomial zp(Z);
        for (auto& [m, c] : p.terms()) zp.add_term(m, c.get_num());
        CHECK(parse_laurent(zp.str(), Z) == zp);
    }
}

TEST_CASE("parser grammar and errors") {
    Ring R = poly_ring(3);
    auto p = parse_poly("t1^2*t2 - 3/2*t3", R);
    CHECK(p.str() == "t1^2*t2 - 3/2*t3");

    Ring Z = laurent_ring(2);
    CHECK(parse_laurent("z1^-1 + z2", Z).term_count() == 2);

    CHECK_THROWS_AS(parse_poly("t1^-1", R), ParseError);
    CHECK_THROWS_AS(parse_poly("t1t2", R), ParseError);
    CHECK_THROWS_AS(parse_poly("t9", R), ParseError);
    CHECK_THROWS_AS(parse_poly("t1 + ", R), ParseError);
    CHECK_THROWS_AS(parse_poly("(t1", R), ParseError);
    CHECK_THROWS_AS(parse_laurent("1/2", Z), ParseError);
    CHECK_THROWS_AS(parse_laurent("(z1+z2)^-1", Z), ParseError);

    try {
        parse_poly("t1 + t9", R);
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
    }
}

TEST_CASE("inhomogeneity is reported") {
    Ring R = poly_ring(2);
    CHECK(!parse_poly("t1 + t1*t2", R).homogeneous_degree());
    CHECK(*parse_poly("t1*t2 + t2^2", R).homogeneous_degree() == 2);
}
