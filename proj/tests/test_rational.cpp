#include "polytile/errors.hpp"
#include "polytile/rational.hpp"

#include <doctest.h>

using namespace polytile;

TEST_CASE("parsing accepts integers and fractions") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-7/3") == make_rational(-7, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3)); // reduced on input
}

TEST_CASE("parsing rejects anything else") {
    CHECK_THROWS_AS(parse_rational(""), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1.5"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("1/-2"), SyntaxError);
    CHECK_THROWS_AS(parse_rational(" 1"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("+1"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("a/b"), SyntaxError);
}

TEST_CASE("canonical form: lowest terms, positive denominator") {
    const Rational q = make_rational(-4, -6);
    CHECK(q.get_num() == 2);
    CHECK(q.get_den() == 3);
    CHECK(rational_to_string(q) == "2/3");
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(make_rational(5, -1)) == "-5");
}

TEST_CASE("round trip through strings") {
    for (long n = -20; n <= 20; ++n) {
        for (long d = 1; d <= 12; ++d) {
            const Rational q = make_rational(n, d);
            CHECK(parse_rational(rational_to_string(q)) == q);
        }
    }
}

TEST_CASE("integer conversions guard the range") {
    CHECK(rational_to_int64(Rational(42)) == 42);
    CHECK_THROWS_AS(rational_to_int64(Rational(1, 2)), ValidationError);
}
