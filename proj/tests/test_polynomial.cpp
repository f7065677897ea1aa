#include "oracles.hpp"
#include "random_models.hpp"

#include "pairstab/error.hpp"
#include "pairstab/polynomial.hpp"
#include "pairstab/rational.hpp"

#include <doctest.h>

using namespace pairstab;

namespace {

RatPoly x() { return RatPoly::x(); }

RatPoly random_poly(testgen::Rng& rng) {
    const int deg = static_cast<int>(testgen::uniform(rng, -1, 3));
    if (deg < 0) return {};
    Rational lead = testgen::small_rational(rng, 4);
    if (lead == 0) lead = 1;
    return testgen::poly_with_leading(rng, deg, lead, 5);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(Rational(4, 2)) == "2/1");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
    CHECK_THROWS_AS(parse_rational(""), InvalidInput);
    CHECK_THROWS_AS(parse_rational("2/-3"), InvalidInput);
    CHECK(from_integer(-7) == -7);
}

TEST_CASE("canonical form trims zero leading coefficients") {
    const RatPoly p{1, 2, 0, 0};
    CHECK(p.degree() == 1);
    CHECK((p - p).is_zero());
    CHECK(RatPoly{0}.is_zero());
    CHECK(RatPoly{}.degree() == -1);
}

TEST_CASE("cmp_eventual examples") {
    CHECK(cmp_eventual(x() * x() + RatPoly{1}, x() * x()) == EventualOrdering::Greater);
    CHECK(cmp_eventual(RatPoly{}, RatPoly{}) == EventualOrdering::Equal);
    CHECK(cmp_eventual(x() * Rational(3), x() * x() - x() * Rational(100)) == EventualOrdering::Less);
    CHECK(eventually_holds(RatPoly{1}, RatPoly{1}, false));
    CHECK_FALSE(eventually_holds(RatPoly{1}, RatPoly{1}, true));
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(x() * x() + RatPoly{1}, 3) == 10);
    CHECK(evaluate(RatPoly{}, 7) == 0);
    CHECK(evaluate(RatPoly{2, 2}, 1) == 4);
    // term-by-term oracle
    testgen::Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        const RatPoly p = random_poly(rng);
        const Rational at = testgen::small_rational(rng, 5);
        Rational sum = 0;
        Rational power = 1;
        for (const auto& c : p.coeffs()) {
            sum += c * power;
            power *= at;
        }
        CHECK(evaluate(p, at) == sum);
    }
}

TEST_CASE("rank_of and mu_hat") {
    CHECK(rank_of(RatPoly{2, 2}) == 2);
    CHECK(rank_of(x() * x()) == 1);
    CHECK_THROWS_AS(rank_of(RatPoly{}), InvalidInput);
    CHECK(mu_hat(RatPoly{1, 6, 2}) == 3);
    CHECK(mu_hat(x() * x() * x()) == 0);
    CHECK(mu_hat(RatPoly{2, 2}) == 1);
    CHECK_THROWS_AS(mu_hat(RatPoly{5}), InvalidInput);
    CHECK_THROWS_AS(mu_hat(RatPoly{}), InvalidInput);
}

TEST_CASE("bracket_plus_pow") {
    CHECK(bracket_plus_pow(-2, 3) == 0);
    CHECK(bracket_plus_pow(3, 2) == 9);
    CHECK(bracket_plus_pow(0, 5) == 0);
    CHECK(bracket_plus_pow(Rational(1, 2), 2) == Rational(1, 4));
}

TEST_CASE("to_string is readable") {
    CHECK(to_string(RatPoly{3, Rational(-1, 2), 2}) == "2x^2 - 1/2x + 3");
    CHECK(to_string(RatPoly{}) == "0");
}

TEST_CASE("eventual order properties on random triples") {
    testgen::Rng rng(2024);
    for (int k = 0; k < 500; ++k) {
        const RatPoly p = random_poly(rng);
        const RatPoly q = random_poly(rng);
        const RatPoly r = random_poly(rng);
        const auto pq = cmp_eventual(p, q);
        // agrees with the evaluation oracle
        CHECK(static_cast<int>(pq) - 1 == oracle::compare(p, q));
        // antisymmetry and translation invariance
        CHECK(static_cast<int>(cmp_eventual(q, p)) == 2 - static_cast<int>(pq));
        CHECK(cmp_eventual(p + r, q + r) == pq);
        // transitivity
        if (pq != EventualOrdering::Greater && cmp_eventual(q, r) != EventualOrdering::Greater) {
            CHECK(cmp_eventual(p, r) != EventualOrdering::Greater);
        }
        // sampling consistency at M = 1 + sum |num| * den
        if (pq == EventualOrdering::Less) {
            mpz_class bound = 1;
            for (const RatPoly* f : {&p, &q}) {
                for (const auto& c : f->coeffs()) bound += abs(c.get_num()) * c.get_den();
            }
            CHECK(evaluate(p, Rational(bound)) < evaluate(q, Rational(bound)));
        }
        // rank of a sum with a lower-degree term
        if (!p.is_zero() && p.degree() > q.degree()) CHECK(rank_of(p + q) == rank_of(p));
        // scalar invariance of mu_hat
        if (p.degree() >= 1) {
            const Rational c = abs(testgen::small_rational(rng, 4)) + Rational(1, 3);
            CHECK(mu_hat(p * c) == mu_hat(p));
        }
    }
}

TEST_CASE("sign_stable_bound is beyond every sign change") {
    testgen::Rng rng(7);
    for (int k = 0; k < 300; ++k) {
        const RatPoly p = random_poly(rng);
        if (p.is_zero()) continue;
        const Rational b = sign_stable_bound(p);
        CHECK(b >= 1);
        for (int s = 0; s < 5; ++s) {
            const Rational at = b + Rational(s, 3);
            CHECK(sgn(evaluate(p, at)) == eventual_sign(p));
        }
    }
}
