#include <doctest.h>

#include <numeric>

#include "heightbound/int_poly.hpp"
#include "oracles.hpp"

using heightbound::IntPoly;
using heightbound::parse_poly;
using heightbound::poly_parse_error;

TEST_CASE("parse: human form") {
    CHECK(parse_poly("x^2 - x - 1") == IntPoly{-1, -1, 1});
    CHECK(parse_poly("x^2-x-1") == IntPoly{-1, -1, 1});
    CHECK(parse_poly("2x - 3") == IntPoly{-3, 2});
    CHECK(parse_poly("2*x-3") == IntPoly{-3, 2});
    CHECK(parse_poly("-x^2 + 1") == IntPoly{1, 0, -1});
    CHECK(parse_poly("x") == IntPoly{0, 1});
    CHECK(parse_poly("x^4+x^3+x^2+x+1") == IntPoly{1, 1, 1, 1, 1});
    CHECK(parse_poly("7") == IntPoly{7});
    CHECK(parse_poly("3 + x") == IntPoly{3, 1});
    CHECK(parse_poly("x + x") == IntPoly{0, 2});
}

TEST_CASE("parse: coefficient list") {
    CHECK(parse_poly("-1,-1,1") == IntPoly{-1, -1, 1});
    CHECK(parse_poly(" -1 , -1 , 1 ") == IntPoly{-1, -1, 1});
    CHECK(parse_poly("-2,0,1") == IntPoly{-2, 0, 1});
    CHECK(parse_poly("5,0") == IntPoly{5}); // high zeros trimmed
}

TEST_CASE("parse: errors") {
    CHECK_THROWS_AS(parse_poly("x - x"), poly_parse_error);      // zero polynomial
    CHECK_THROWS_AS(parse_poly("0,0,0"), poly_parse_error);      // zero polynomial
    CHECK_THROWS_AS(parse_poly(""), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("1.5,2"), poly_parse_error);      // non-integer coefficient
    CHECK_THROWS_AS(parse_poly("1.5x"), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("x^2 + + 1"), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("y^2-1"), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("x^"), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("1,,2"), poly_parse_error);
    CHECK_THROWS_AS(parse_poly("x^9999"), poly_parse_error);     // exponent cap
}

TEST_CASE("construction rejects the zero polynomial") {
    CHECK_THROWS_AS(IntPoly(std::vector<mpz_class>{}), std::invalid_argument);
    CHECK_THROWS_AS((IntPoly{0, 0}), std::invalid_argument);
}

TEST_CASE("normalize: content and sign") {
    CHECK(IntPoly{-2, -2, 2}.normalized() == IntPoly{-1, -1, 1});
    CHECK(IntPoly{1, 1, -1}.normalized() == IntPoly{-1, -1, 1});
    CHECK(IntPoly{-1, -1, 1}.normalized() == IntPoly{-1, -1, 1}); // idempotent
    CHECK(IntPoly{6, -9, 12}.normalized() == IntPoly{2, -3, 4});
    CHECK(IntPoly{-1, -1, 1}.is_canonical());
    CHECK_FALSE(IntPoly{-2, -2, 2}.is_canonical());
    CHECK_FALSE(IntPoly{1, 1, -1}.is_canonical());
}

TEST_CASE("normalize: property check on random polynomials") {
    oracles::Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<mpz_class> c(static_cast<size_t>(rng.int_in(1, 6)) + 1);
        bool nonzero = false;
        for (auto& x : c) {
            x = rng.int_in(-20, 20);
            nonzero = nonzero || x != 0;
        }
        if (!nonzero)
            c.back() = 1;
        if (c.back() == 0)
            c.back() = rng.int_in(1, 20);
        IntPoly p(c);
        IntPoly q = p.normalized();
        CHECK(q.is_canonical());
        CHECK(q.normalized() == q);
        // proportionality: q * content * sign == p
        mpz_class content = p.content();
        const int sign = p.leading() < 0 ? -1 : 1;
        REQUIRE(q.degree() == p.degree());
        for (int k = 0; k <= p.degree(); ++k)
            CHECK(q[k] * content * sign == p[k]);
    }
}

TEST_CASE("eval: exact integer evaluation") {
    IntPoly p{-1, -1, 1}; // x^2 - x - 1
    CHECK(p.eval(0) == -1);
    CHECK(p.eval(1) == -1);
    CHECK(p.eval(-1) == 1);
    CHECK(p.eval(10) == 89);

    // arbitrary-precision coefficients at +-1 never overflow
    mpz_class big("123456789012345678901234567890123456789");
    IntPoly q(std::vector<mpz_class>{big, big, big});
    CHECK(q.eval(1) == 3 * big);
    CHECK(q.eval(-1) == big);
    CHECK(q.eval(0) == big);
}

TEST_CASE("is_squarefree") {
    CHECK(IntPoly{-1, -1, 1}.is_squarefree());       // x^2-x-1
    CHECK_FALSE(IntPoly{1, -2, 1}.is_squarefree());  // (x-1)^2
    CHECK(IntPoly{0, -1, 0, 1}.is_squarefree());     // x^3-x
    CHECK_FALSE(IntPoly{0, 0, 1}.is_squarefree());   // x^2
    CHECK(IntPoly{-3, 2}.is_squarefree());           // degree 1
    CHECK_FALSE(IntPoly{0, 4, 0, -4, 0, 1}.is_squarefree()); // x(x^2-2)^2
}

TEST_CASE("sturm_real_count") {
    CHECK(IntPoly{1, 0, 1}.sturm_real_count() == 0);      // x^2+1
    CHECK(IntPoly{-2, 0, 1}.sturm_real_count() == 2);     // x^2-2
    CHECK(IntPoly{-1, -1, 0, 1}.sturm_real_count() == 1); // x^3-x-1
    CHECK(IntPoly{-3, 2}.sturm_real_count() == 1);
    CHECK(IntPoly{0, -1, 0, 1}.sturm_real_count() == 3);  // x^3-x
    CHECK(IntPoly{2, 0, -4, 0, 1}.sturm_real_count() == 4); // x^4-4x^2+2, totally real
    CHECK(IntPoly{-1, -1, 0, 0, 0, 1}.sturm_real_count() == 1); // x^5-x-1
    CHECK(IntPoly{1, 1, 1, 1, 1}.sturm_real_count() == 0); // Phi_5
    CHECK(IntPoly{1, -3, 0, 1}.sturm_real_count() == 3);  // x^3-3x+1
    CHECK_THROWS_AS((IntPoly{1, -2, 1}.sturm_real_count()), std::domain_error);
}

TEST_CASE("reverse") {
    CHECK(IntPoly{-1, -1, 1}.reversed() == IntPoly{-1, 1, 1}); // x^2-x-1 -> x^2+x-1
    CHECK(IntPoly{-2, 0, 1}.reversed() == IntPoly{-1, 0, 2});  // x^2-2 -> 2x^2-1
    CHECK(IntPoly{-3, 2}.reversed() == IntPoly{-2, 3});        // 2x-3 -> 3x-2
    CHECK_THROWS_AS((IntPoly{0, 1, 1}.reversed()), std::domain_error); // x^2+x
}

TEST_CASE("reverse is an involution on canonical polynomials") {
    oracles::Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<mpz_class> c(static_cast<size_t>(rng.int_in(1, 6)) + 1);
        for (auto& x : c)
            x = rng.int_in(-9, 9);
        if (c.front() == 0)
            c.front() = 1;
        if (c.back() == 0)
            c.back() = 2;
        IntPoly p = IntPoly(c).normalized();
        CHECK(p.reversed().reversed() == p);
    }
}

TEST_CASE("mirrored") {
    CHECK(IntPoly{-1, -1, 1}.mirrored() == IntPoly{-1, 1, 1});
    CHECK(IntPoly{-1, -1, 0, 1}.mirrored() == IntPoly{1, -1, 0, 1}); // x^3-x-1 -> x^3-x+1
    CHECK(IntPoly{-2, 0, 1}.mirrored() == IntPoly{-2, 0, 1});
}

TEST_CASE("to_string and coeff_list") {
    CHECK(IntPoly{-1, -1, 1}.to_string() == "x^2 - x - 1");
    CHECK(IntPoly{-3, 2}.to_string() == "2x - 3");
    CHECK(IntPoly{1, 0, -1}.to_string() == "-x^2 + 1");
    CHECK(IntPoly{-1, -1, 1}.coeff_list() == "-1,-1,1");
    CHECK(parse_poly(IntPoly{-1, 0, 2}.to_string()) == IntPoly{-1, 0, 2});
}

TEST_CASE("is_irreducible: known cases") {
    CHECK(heightbound::is_irreducible(IntPoly{-1, -1, 1}));       // x^2-x-1
    CHECK_FALSE(heightbound::is_irreducible(IntPoly{-1, 0, 1}));  // x^2-1
    CHECK(heightbound::is_irreducible(IntPoly{1, 1, 1, 1, 1}));   // Phi_5
    CHECK(heightbound::is_irreducible(IntPoly{-3, 2}));           // degree 1
    CHECK(heightbound::is_irreducible(IntPoly{-1, -1, 0, 1}));    // x^3-x-1
    CHECK_FALSE(heightbound::is_irreducible(IntPoly{0, -1, 0, 1})); // x^3-x
    CHECK_FALSE(heightbound::is_irreducible(IntPoly{-1, 0, 0, 0, 1})); // x^4-1... not squarefree? it is: roots +-1,+-i
    CHECK_FALSE(heightbound::is_irreducible(IntPoly{2, 0, 3, 0, 1})); // (x^2+1)(x^2+2)
    CHECK(heightbound::is_irreducible(IntPoly{1, 0, -4, 0, 1}));  // x^4-4x^2+1 = minimal poly of sqrt2+sqrt3
    CHECK_FALSE(heightbound::is_irreducible(IntPoly{-1, 0, 0, 0, 0, 0, 1})); // x^6-1

    // (x^2-x-1)(x^2-2)(x^2+x+3) = x^6 - x^4 - 4x^3 - 5x^2 + 8x + 6
    IntPoly composite{6, 8, -5, -4, -1, 0, 1};
    CHECK(heightbound::divides(composite, IntPoly{-1, -1, 1}));
    CHECK(heightbound::divides(composite, IntPoly{-2, 0, 1}));
    CHECK_FALSE(heightbound::is_irreducible(composite));
}

TEST_CASE("is_irreducible agrees with the brute-force factor oracle") {
    // all primitive squarefree polynomials of degree <= 4, coefficients in [-3, 3]
    long checked = 0;
    for (int d = 1; d <= 4; ++d) {
        std::vector<long> c(static_cast<size_t>(d) + 1, -3);
        for (;;) {
            if (c.back() > 0) { // canonical sign representative
                std::vector<mpz_class> coeffs(c.begin(), c.end());
                long g = 0;
                for (long x : c)
                    g = std::gcd(g, x);
                if (g == 1) {
                    IntPoly p(coeffs);
                    if (p.is_squarefree()) {
                        const bool fast = heightbound::is_irreducible(p);
                        const bool slow = !oracles::brute_force_reducible(p);
                        if (fast != slow)
                            FAIL("disagreement on " << p.to_string());
                        ++checked;
                    }
                }
            }
            size_t k = 0;
            while (k < c.size() && c[k] == 3) {
                c[k] = -3;
                ++k;
            }
            if (k == c.size())
                break;
            ++c[k];
        }
    }
    CHECK(checked > 5000);
}

TEST_CASE("divides") {
    CHECK(heightbound::divides(IntPoly{-1, 0, 1}, IntPoly{-1, 1}));
    CHECK(heightbound::divides(IntPoly{-1, 0, 1}, IntPoly{1, 1}));
    CHECK_FALSE(heightbound::divides(IntPoly{-1, -1, 1}, IntPoly{-1, 1}));
    CHECK(heightbound::divides(IntPoly{-2, 0, 2}, IntPoly{-1, 1})); // over Q
    CHECK(heightbound::divides(IntPoly{-1, 0, 2}, IntPoly{-1, 0, 2}));
}
