#include "doctest.h"

#include <stdexcept>

#include "bergman/series.hpp"
#include "oracles.hpp"

using namespace bergman;

namespace {

SparseSeries z(Exponent e) { return SparseSeries::monomial(e); }

PiRational pi(long num, long den = 1) { return PiRational(make_rational(num, den)); }

} // namespace

TEST_CASE("SparseSeries keeps canonical sparse form")
{
    const SparseSeries f{{0, GaussianRational(0)}, {3, GaussianRational(2)}};
    CHECK(f.size() == 1);
    CHECK(f.support() == std::vector<Exponent>{3});
    CHECK(f.coefficient(0).is_zero());
    CHECK_THROWS_AS(SparseSeries(SparseSeries::Terms{{5, GaussianRational(1)}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Disc(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Disc(Rational(-1)), std::invalid_argument);
}

TEST_CASE("inner_product examples")
{
    const Disc unit = Disc::unit();
    CHECK(inner_product(z(0), z(0), unit) == pi(1));
    CHECK(inner_product(z(1), z(1), unit) == pi(1, 2));
    for (long r : {1L, 2L, 7L}) {
        CHECK(inner_product(z(2), z(3), Disc(make_rational(r, 3))).is_zero());
    }
    CHECK(inner_product(z(0), z(0), Disc(Rational(2))) == pi(4));
}

TEST_CASE("inner_product is conjugate-linear in the second slot")
{
    const SparseSeries f = SparseSeries::monomial(1, GaussianRational::i());
    const SparseSeries one = z(1);
    const PiRational a = inner_product(f, one, Disc::unit());
    const PiRational b = inner_product(one, f, Disc::unit());
    CHECK(a.coefficient() == GaussianRational(Rational(0), make_rational(1, 2)));
    CHECK(b.coefficient() == a.coefficient().conj());
    CHECK_THROWS_AS((void)(a < b), std::domain_error);
}

TEST_CASE("norm_sq examples")
{
    const Disc unit = Disc::unit();
    CHECK(norm_sq(SparseSeries(), unit).is_zero());
    CHECK(norm_sq(z(0) + z(1), unit) == pi(3, 2));
    // 1/4 + 1/5 by direct evaluation
    CHECK(norm_sq(z(3) + z(4), unit) == pi(9, 20));
}

TEST_CASE("compose_power examples")
{
    CHECK(compose_power(z(1) + z(2), 3) == z(3) + z(6));
    const SparseSeries f = SparseSeries{{0, GaussianRational(2)}, {4, make_rational(1, 3)}};
    CHECK(compose_power(f, 1) == f);
    CHECK(compose_power(truncate(f, 10), 4).degree_bound() == 40);

    const PiRational lhs = norm_sq(compose_power(z(1), 5), Disc::unit());
    const PiRational rhs = make_rational(2, 5) * norm_sq(z(1), Disc::unit());
    CHECK(lhs == pi(1, 6));
    CHECK(rhs == pi(1, 5));
    CHECK(lhs < rhs);

    CHECK_THROWS_AS(compose_power(f, 0), std::invalid_argument);
    CHECK_THROWS_AS(compose_power(z(1ULL << 40), 1ULL << 40), std::overflow_error);
}

TEST_CASE("disjoint_support examples")
{
    CHECK(disjoint_support(z(2), z(3)));
    CHECK_FALSE(disjoint_support(z(0) + z(1), z(1) + z(2)));
    CHECK(disjoint_support(SparseSeries(), z(0)));

    // Prime series vs its z -> z^2 image at degree 20, against a brute-force
    // exponent intersection.
    std::vector<Exponent> primes;
    for (Exponent n = 2; n <= 20; ++n) {
        if (oracle::is_prime_trial(n)) {
            primes.push_back(n);
        }
    }
    const SparseSeries p = SparseSeries::indicator(primes, 20);
    std::vector<Exponent> rough; // p_k = 3: odd numbers >= 3
    for (Exponent n = 3; n <= 20; n += 2) {
        rough.push_back(n);
    }
    const SparseSeries f2 = truncate(compose_power(SparseSeries::indicator(rough), 2), 20);
    bool brute = true;
    for (Exponent a : p.support()) {
        for (Exponent b : f2.support()) {
            brute = brute && a != b;
        }
    }
    CHECK(disjoint_support(p, f2) == brute);
    CHECK(brute); // F(z^2) has only even exponents >= 6
}

TEST_CASE("add / scale / truncate examples")
{
    CHECK(add(z(1), z(1)) == SparseSeries::monomial(1, GaussianRational(2)));
    CHECK(scale(z(0) + z(1), GaussianRational(0)).is_zero());
    const SparseSeries t = truncate(z(0) + z(1) + z(5), 3);
    CHECK(t == z(0) + z(1));
    CHECK(t.degree_bound() == 3);
    CHECK(add(z(1), scale(z(1), GaussianRational(-1))).is_zero());
}

TEST_CASE("property: inner product matches the direct-summation oracle")
{
    oracle::Generator gen(0xB3A6);
    for (int trial = 0; trial < 60; ++trial) {
        const SparseSeries f = gen.series(40, 10, true);
        const SparseSeries g = gen.series(40, 10, true);
        for (const Rational& r : {make_rational(1, 2), Rational(1), Rational(3)}) {
            const GaussianRational expected = oracle::bergman_inner_direct(oracle::densify(f), oracle::densify(g), r);
            CHECK(inner_product(f, g, Disc(r)).coefficient() == expected);
        }
    }
}

TEST_CASE("property: sesquilinearity with Gaussian-rational scalars")
{
    oracle::Generator gen(17);
    const Disc disc(make_rational(3, 2));
    for (int trial = 0; trial < 40; ++trial) {
        const SparseSeries f = gen.series(20, 6, true);
        const SparseSeries g = gen.series(20, 6, true);
        const SparseSeries h = gen.series(20, 6, true);
        const GaussianRational a = gen.gaussian();
        const GaussianRational b = gen.gaussian();
        const SparseSeries combo = add(scale(f, a), scale(g, b));
        const GaussianRational left = inner_product(combo, h, disc).coefficient();
        CHECK(left == a * inner_product(f, h, disc).coefficient() + b * inner_product(g, h, disc).coefficient());
        const GaussianRational right = inner_product(h, combo, disc).coefficient();
        CHECK(right == a.conj() * inner_product(h, f, disc).coefficient() +
                           b.conj() * inner_product(h, g, disc).coefficient());
    }
}

TEST_CASE("property: norm_sq is nonnegative and zero only for zero")
{
    oracle::Generator gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        const SparseSeries f = gen.series(30, 5, true);
        const PiRational n = norm_sq(f, Disc(make_rational(2, 3)));
        CHECK(n == inner_product(f, f, Disc(make_rational(2, 3))));
        CHECK(n.is_real());
        CHECK(sgn(n.real_coefficient()) >= 0);
        CHECK(n.is_zero() == f.is_zero());
    }
}

TEST_CASE("property: Parseval additivity over disjoint supports")
{
    oracle::Generator gen(99);
    for (int trial = 0; trial < 30; ++trial) {
        // Split one random series into blocks by exponent residue mod 3.
        const SparseSeries f = gen.series(60, 20, true);
        std::vector<SparseSeries::Terms> parts(3);
        for (const auto& [e, c] : f.terms()) {
            parts[e % 3].emplace(e, c);
        }
        PiRational total;
        SparseSeries sum_series;
        for (auto& p : parts) {
            SparseSeries block(std::move(p));
            CHECK(disjoint_support(block, sum_series));
            total += norm_sq(block, Disc::unit());
            sum_series = add(sum_series, block);
        }
        CHECK(norm_sq(sum_series, Disc::unit()) == total);
    }
}

TEST_CASE("property: power substitution shrinks the norm below 2/m")
{
    oracle::Generator gen(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const SparseSeries f = gen.series(40, 8, true, /*zero_constant=*/true);
        if (f.is_zero()) {
            continue;
        }
        const auto m = static_cast<Exponent>(gen.integer(2, 50));
        CHECK(norm_sq(compose_power(f, m), Disc::unit()) < make_rational(2, static_cast<long>(m)) * norm_sq(f, Disc::unit()));
    }
}

TEST_CASE("property: truncation is monotone in the degree")
{
    oracle::Generator gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        const SparseSeries f = gen.series(30, 12, true);
        const PiRational full = norm_sq(f, Disc::unit());
        PiRational previous;
        for (Exponent d = 0; d <= 32; ++d) {
            const PiRational n = norm_sq(truncate(f, d), Disc::unit());
            CHECK(previous <= n);
            CHECK(n <= full);
            previous = n;
        }
        CHECK(previous == full);
    }
}

TEST_CASE("monomials are orthogonal on every tested disc")
{
    for (const Rational& r : {make_rational(1, 2), Rational(1), Rational(2)}) {
        const Disc disc(r);
        for (Exponent a = 0; a <= 64; ++a) {
            for (Exponent b = 0; b <= 64; ++b) {
                if (a != b) {
                    REQUIRE(inner_product(z(a), z(b), disc).is_zero());
                }
            }
        }
    }
}
