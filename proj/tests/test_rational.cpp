#include "doctest.h"

#include <stdexcept>

#include "bergman/rational.hpp"

using namespace bergman;

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-1/2") == make_rational(-1, 2));
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("+5/10").get_den() == 2);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("parse_gaussian forms")
{
    CHECK(parse_gaussian("3") == GaussianRational(3));
    CHECK(parse_gaussian("2i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(parse_gaussian("i") == GaussianRational::i());
    CHECK(parse_gaussian("-i") == -GaussianRational::i());
    CHECK(parse_gaussian("1/2+3/4i") == GaussianRational(make_rational(1, 2), make_rational(3, 4)));
    CHECK(parse_gaussian("1-2i") == GaussianRational(Rational(1), Rational(-2)));
    CHECK(parse_gaussian("-1/3-i") == GaussianRational(make_rational(-1, 3), Rational(-1)));
    CHECK(parse_gaussian("3/4i") == GaussianRational(Rational(0), make_rational(3, 4)));
    CHECK_THROWS_AS(parse_gaussian(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gaussian("1+2j"), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse_gaussian")
{
    for (const char* text : {"0", "7", "-1/2", "3i", "-1/5i", "1/2+3/4i", "-2-7/3i"}) {
        const GaussianRational z = parse_gaussian(text);
        CHECK(parse_gaussian(to_string(z)) == z);
    }
}

TEST_CASE("Gaussian arithmetic")
{
    const GaussianRational a(Rational(1), Rational(2));
    const GaussianRational b(Rational(3), Rational(-1));
    CHECK(a * b == GaussianRational(Rational(5), Rational(5)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK(a.norm() == 5);
    CHECK(b.abs_bound() == 4);
    // 1/(2i) = -i/2
    CHECK(GaussianRational(Rational(0), Rational(2)).reciprocal() == GaussianRational(Rational(0), make_rational(-1, 2)));
    CHECK_THROWS_AS(GaussianRational().reciprocal(), std::domain_error);
}

TEST_CASE("tree sum equals sequential sum")
{
    std::vector<Rational> terms;
    Rational sequential(0);
    for (long k = 1; k <= 200; ++k) {
        terms.push_back(make_rational(1, k));
        sequential += make_rational(1, k);
    }
    CHECK(sum(terms) == sequential);
    CHECK(sum({}) == 0);
    CHECK(sum({make_rational(2, 3)}) == make_rational(2, 3));
}

TEST_CASE("pow")
{
    CHECK(pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(pow(make_rational(-1, 2), 0) == 1);
}
