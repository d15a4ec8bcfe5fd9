#pragma once

// Exact scalars: GMP rationals and Gaussian rationals (complex numbers whose
// real and imaginary parts are rational).

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bergman {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

Rational pow(const Rational& base, unsigned long exp);
Rational abs(const Rational& value);

/// Pairwise (tree-shaped) summation. Keeps operand sizes balanced, which
/// matters when summing tens of thousands of reciprocals with coprime
/// denominators.
Rational sum(std::vector<Rational> terms);

double to_double(const Rational& value);

/// "n" or "n/d" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// |re| + |im|, a rational upper bound for the modulus.
    Rational abs_bound() const { return abs(re_) + abs(im_); }
    /// Throws std::domain_error on zero.
    GaussianRational reciprocal() const;

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
    friend GaussianRational operator-(const GaussianRational& v) { return {-v.re_, -v.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Accepts "3", "-1/2", "2i", "-i", "1/2+3/4i", "1-2i", "3/4i".
GaussianRational parse_gaussian(std::string_view text);
std::string to_string(const GaussianRational& value);
std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

} // namespace bergman
