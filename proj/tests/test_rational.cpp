#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "agora/rational.hpp"

#include <limits>
#include <stdexcept>

using namespace agora;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(1, -2) == rational(-1, 2));
    CHECK(rational(-3, -6) == rational(1, 2));
    CHECK(rational(0, 5) == rational());
    CHECK(rational(0, -5).denominator() == 1);
    CHECK(rational(10, 17).numerator() == 10);
    CHECK(rational(10, 17).denominator() == 17);
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
}

TEST_CASE("parse_decimal produces exact fractions") {
    CHECK(rational::parse_decimal("0.7") == rational(7, 10));
    CHECK(rational::parse_decimal(".25") == rational(1, 4));
    CHECK(rational::parse_decimal("1") == rational(1));
    CHECK(rational::parse_decimal("0.05") == rational(1, 20));
    CHECK(rational::parse_decimal("-0.5") == rational(-1, 2));
    CHECK(rational::parse_decimal("+2.50") == rational(5, 2));
    CHECK(rational::parse_decimal("0.588235") == rational(588235, 1000000));
}

TEST_CASE("parse_decimal rejects malformed text") {
    CHECK_THROWS_AS(rational::parse_decimal(""), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("."), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("-"), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("1e5"), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("1.2.3"), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("abc"), parse_error);
    CHECK_THROWS_AS(rational::parse_decimal("1 "), parse_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(rational(7, 10) + rational(3, 10) == rational(1));
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1) - rational(1, 20) == rational(19, 20));
    CHECK(rational(7, 10) * rational(10, 7) == rational(1));
    CHECK(rational(10, 17) / rational(2) == rational(5, 17));
    CHECK(-rational(3, 4) == rational(-3, 4));
    CHECK_THROWS_AS(rational(1) / rational(), std::domain_error);

    // the weighted-support computation that motivates exactness
    const rational m =
        (rational(7, 10) * rational(1) + rational(7, 10) * rational(0) + rational(3, 10) * rational(1)) /
        (rational(7, 10) + rational(7, 10) + rational(3, 10));
    CHECK(m == rational(10, 17));
}

TEST_CASE("comparison is exact cross multiplication") {
    CHECK(rational(10, 17) > rational(1, 2));
    CHECK(rational(10, 17) < rational(19, 20));
    CHECK(rational(1, 3) < rational(34, 100));
    CHECK(rational(1, 2) <= rational(2, 4));
    CHECK(min(rational(1, 3), rational(1, 4)) == rational(1, 4));
    CHECK(max(rational(1, 3), rational(1, 4)) == rational(1, 3));
}

TEST_CASE("to_string renders fraction form") {
    CHECK(rational(10, 17).to_string() == "10/17");
    CHECK(rational(3).to_string() == "3");
    CHECK(rational(-1, 2).to_string() == "-1/2");
    CHECK(rational().to_string() == "0");
}

TEST_CASE("to_decimal_string rounds half up and trims zeros") {
    CHECK(rational(10, 17).to_decimal_string() == "0.588235");
    CHECK(rational(2, 3).to_decimal_string() == "0.666667");
    CHECK(rational(1, 3).to_decimal_string() == "0.333333");
    CHECK(rational(7, 10).to_decimal_string() == "0.7");
    CHECK(rational(1).to_decimal_string() == "1");
    CHECK(rational(3, 2).to_decimal_string() == "1.5");
    CHECK(rational(1, 4).to_decimal_string() == "0.25");
    CHECK(rational(9999, 10000).to_decimal_string(3) == "1");
    CHECK(rational(-1, 2).to_decimal_string() == "-0.5");
    CHECK(rational(1, 1000000000).to_decimal_string() == "0");
    CHECK(rational(1, 20).to_decimal_string(18) == "0.05");
    CHECK(rational(19, 20).to_decimal_string(18) == "0.95");
}

TEST_CASE("overflow is detected, not wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(rational(big, 1) + rational(big, 1), std::overflow_error);
    CHECK_THROWS_AS(rational(big, 1) * rational(big, 1), std::overflow_error);
    CHECK_THROWS_AS(rational::parse_decimal("123456789012345678901234567890123456"),
                    std::overflow_error);
    // near the edge but representable
    CHECK(rational(big, 2) + rational(big, 2) == rational(big, 1));
}

TEST_CASE("par-for-par round trip through decimal text") {
    for (int num = 0; num <= 40; ++num) {
        for (int den = 1; den <= 8; ++den) {
            const rational r(num, den);
            if (den == 1 || den == 2 || den == 4 || den == 5 || den == 8) {
                // terminating decimals round-trip exactly
                CHECK(rational::parse_decimal(r.to_decimal_string(18)) == r);
            }
        }
    }
}
