#pragma once

// Test-only oracles. None of these call into the code paths they check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/series.hpp"

namespace oracle {

using bergman::GaussianRational;
using bergman::Rational;

inline bool is_prime_trial(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

/// Dense coefficients c[n] for n = 0..max.
using Dense = std::vector<GaussianRational>;

inline Dense densify(const bergman::SparseSeries& f)
{
    Dense d;
    for (const auto& [e, c] : f.terms()) {
        if (d.size() <= e) {
            d.resize(e + 1);
        }
        d[e] = c;
    }
    return d;
}

/// pi-coefficient of <f, g> on D_R by left-to-right accumulation over every
/// index, with R^(2n+2) built by repeated multiplication.
inline GaussianRational bergman_inner_direct(const Dense& f, const Dense& g, const Rational& radius)
{
    GaussianRational acc;
    Rational r_pow = radius * radius; // R^(2*0+2)
    const Rational r_sq = radius * radius;
    const std::size_t top = std::min(f.size(), g.size());
    for (std::size_t n = 0; n < top; ++n) {
        const GaussianRational& a = f[n];
        const GaussianRational& b = g[n];
        // a * conj(b), written out
        Rational re = a.re() * b.re() + a.im() * b.im();
        Rational im = a.im() * b.re() - a.re() * b.im();
        const Rational w = r_pow / Rational(static_cast<long>(n + 1));
        acc += GaussianRational(Rational(re * w), Rational(im * w));
        r_pow *= r_sq;
    }
    return acc;
}

/// Durand-Kerner simultaneous root iteration for a polynomial with complex
/// double coefficients a_0..a_n.
inline std::vector<std::complex<double>> durand_kerner(std::vector<std::complex<double>> a, int iterations = 500)
{
    const std::size_t n = a.size() - 1;
    const std::complex<double> lead = a.back();
    for (auto& c : a) {
        c /= lead;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc;
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    };
    std::vector<std::complex<double>> z(n);
    const std::complex<double> seed(0.4, 0.9);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = std::pow(seed, static_cast<double>(i));
    }
    for (int it = 0; it < iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> denom(1.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            z[i] -= eval(z[i]) / denom;
        }
    }
    return z;
}

/// Small random rationals and series for property tests.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long max_num = 20, long max_den = 12)
    {
        return bergman::make_rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Rational nonzero_rational(long max_num = 20, long max_den = 12)
    {
        Rational q;
        do {
            q = rational(max_num, max_den);
        } while (sgn(q) == 0);
        return q;
    }

    GaussianRational gaussian(bool complex = true)
    {
        return complex ? GaussianRational(rational(), rational()) : GaussianRational(rational());
    }

    bergman::SparseSeries series(std::uint64_t max_degree, std::size_t max_terms, bool complex = false,
                                 bool zero_constant = false)
    {
        bergman::SparseSeries::Terms t;
        const auto count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
        for (std::size_t i = 0; i < count; ++i) {
            const auto e = static_cast<std::uint64_t>(integer(zero_constant ? 1 : 0, static_cast<long>(max_degree)));
            t[e] = gaussian(complex);
        }
        return bergman::SparseSeries(std::move(t));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
