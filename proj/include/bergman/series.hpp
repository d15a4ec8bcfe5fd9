#pragma once

// Sparse formal power series with Gaussian-rational coefficients, and the
// Bergman inner product on discs |z| < R computed from Taylor coefficients:
//
//     <f, g> = pi * sum_n R^(2n+2) f_n conj(g_n) / (n + 1)
//
// Every such value is pi times an exact (Gaussian) rational, so the pi factor
// is carried symbolically by PiRational and never evaluated inside the
// library.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

using Exponent = std::uint64_t;

/// A finitely supported power series in canonical sparse form: no stored
/// coefficient is zero. When the series stands for a truncation of an
/// infinite series, degree_bound records the truncation degree and every
/// stored exponent is <= it.
class SparseSeries {
public:
    using Terms = std::map<Exponent, GaussianRational>;

    SparseSeries() = default;
    /// Zero coefficients are dropped. Throws std::invalid_argument when an
    /// exponent exceeds degree_bound.
    explicit SparseSeries(Terms terms, std::optional<Exponent> degree_bound = std::nullopt);
    SparseSeries(std::initializer_list<std::pair<const Exponent, GaussianRational>> terms);

    static SparseSeries monomial(Exponent exponent, GaussianRational coefficient = GaussianRational(1));
    /// 1 + z + ... + z^degree, the degree-D truncation of 1/(1-z).
    static SparseSeries geometric(Exponent degree);
    /// Sum of z^e over the given exponents (coefficient 1 each).
    static SparseSeries indicator(const std::vector<Exponent>& exponents,
                                  std::optional<Exponent> degree_bound = std::nullopt);

    const Terms& terms() const noexcept { return terms_; }
    const std::optional<Exponent>& degree_bound() const noexcept { return degree_bound_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool contains(Exponent e) const { return terms_.count(e) != 0; }
    /// Coefficient of z^e (zero when absent).
    GaussianRational coefficient(Exponent e) const;
    std::vector<Exponent> support() const;
    std::optional<Exponent> max_exponent() const;

    /// Structural equality of coefficients; degree_bound is metadata and is
    /// not compared.
    friend bool operator==(const SparseSeries& a, const SparseSeries& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
    std::optional<Exponent> degree_bound_;
};

/// The disc |z| < R with rational R > 0.
class Disc {
public:
    /// Throws std::invalid_argument unless radius > 0.
    explicit Disc(Rational radius);
    static Disc unit() { return Disc(Rational(1)); }
    const Rational& radius() const noexcept { return radius_; }

private:
    Rational radius_;
};

/// The exact value c * pi with c a Gaussian rational. Norms always have a
/// real, nonnegative c; inner products of complex series may not.
class PiRational {
public:
    PiRational() = default;
    explicit PiRational(GaussianRational coefficient) : coeff_(std::move(coefficient)) {}
    explicit PiRational(Rational coefficient) : coeff_(std::move(coefficient)) {}

    const GaussianRational& coefficient() const noexcept { return coeff_; }
    /// Throws std::domain_error if the coefficient is not real.
    const Rational& real_coefficient() const;

    bool is_zero() const { return coeff_.is_zero(); }
    bool is_real() const { return coeff_.is_real(); }
    /// Real part times pi, as a double. Presentation only.
    double to_double() const;

    PiRational& operator+=(const PiRational& rhs)
    {
        coeff_ += rhs.coeff_;
        return *this;
    }
    friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
    friend PiRational operator-(PiRational a, const PiRational& b) { return PiRational(a.coeff_ - b.coeff_); }
    friend PiRational operator*(const Rational& s, const PiRational& v) { return PiRational(GaussianRational(s) * v.coeff_); }

    friend bool operator==(const PiRational& a, const PiRational& b) { return a.coeff_ == b.coeff_; }
    /// Ordering of real values. Throws std::domain_error for complex operands.
    friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b);

private:
    GaussianRational coeff_;
};

PiRational inner_product(const SparseSeries& f, const SparseSeries& g, const Disc& disc);
PiRational norm_sq(const SparseSeries& f, const Disc& disc);

/// g(z) = f(z^m): exponent k becomes m*k; degree_bound scales by m.
/// Throws std::invalid_argument for m == 0 and std::overflow_error when an
/// exponent would not fit.
SparseSeries compose_power(const SparseSeries& f, Exponent m);

/// True iff no exponent carries a nonzero coefficient in both series.
bool disjoint_support(const SparseSeries& f, const SparseSeries& g);

/// Sum; the result keeps a degree_bound only if both operands carry one
/// (the larger of the two).
SparseSeries add(const SparseSeries& f, const SparseSeries& g);
SparseSeries scale(const SparseSeries& f, const GaussianRational& c);
/// Drops exponents above degree and sets degree_bound = degree.
SparseSeries truncate(const SparseSeries& f, Exponent degree);

inline SparseSeries operator+(const SparseSeries& f, const SparseSeries& g) { return add(f, g); }

} // namespace bergman
