#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

/// Base for every domain error raised by the library.
class BergmanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1/P has no Taylor expansion at the origin.
class ZeroConstantTerm : public BergmanError {
public:
    ZeroConstantTerm() : BergmanError("polynomial has zero constant term") {}
};

class DegreeTooSmall : public BergmanError {
public:
    explicit DegreeTooSmall(std::size_t degree)
        : BergmanError("polynomial degree " + std::to_string(degree) + " is below 2"), degree_(degree)
    {
    }
    std::size_t degree() const noexcept { return degree_; }

private:
    std::size_t degree_;
};

/// |P| fell below the zero threshold at a quadrature node. The node is an
/// approximate root of P.
class NearZeroDetected : public BergmanError {
public:
    explicit NearZeroDetected(std::complex<double> point)
        : BergmanError("polynomial vanishes (numerically) near a quadrature node"), point_(point)
    {
    }
    std::complex<double> point() const noexcept { return point_; }

private:
    std::complex<double> point_;
};

class OutOfRange : public BergmanError {
public:
    using BergmanError::BergmanError;
};

/// An exponent is covered zero or several times by a partition. Always a bug.
class PartitionViolation : public BergmanError {
public:
    PartitionViolation(std::uint64_t exponent, std::vector<std::string> labels);
    std::uint64_t exponent() const noexcept { return exponent_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::uint64_t exponent_;
    std::vector<std::string> labels_;
};

/// A rough number is missing from the deduplicated decomposition.
class CoverageGap : public BergmanError {
public:
    explicit CoverageGap(std::uint64_t exponent)
        : BergmanError("rough number " + std::to_string(exponent) + " not covered"), exponent_(exponent)
    {
    }
    std::uint64_t exponent() const noexcept { return exponent_; }

private:
    std::uint64_t exponent_;
};

/// The prime tail sum is not below 1, so the geometric majorant diverges.
class TailNotSmall : public BergmanError {
public:
    explicit TailNotSmall(Rational tail)
        : BergmanError("prime tail sum " + std::to_string(to_double(tail)) + " is not below 1"), tail_(std::move(tail))
    {
    }
    const Rational& tail() const noexcept { return tail_; }

private:
    Rational tail_;
};

} // namespace bergman
