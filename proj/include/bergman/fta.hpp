#pragma once

// Root localisation through the Bergman projection of conj(1/P).
//
// For a zero-free P with P(0) = a_0, the projection of conj(1/P) onto the
// Bergman space of every disc D_R is the constant conj(1/a_0). Hence
//
//     pi R^2 / |a_0|^2  <=  integral over D_R of |1/P|^2  <=  M
//
// where M = (integral over |z| < R0) + 4 pi / (R0^(2n-2) |a_n|^2 (n-1)).
// Read contrapositively: P has a root in |z| <= R* = |a_0| sqrt(M / pi).
// Everything up to M is exact; the inner integral is a quadrature estimate.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/series.hpp"

namespace bergman {

class Polynomial {
public:
    /// coeffs[k] is a_k. Throws std::invalid_argument when empty or when the
    /// leading coefficient is zero.
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    /// Monic polynomial with the given roots.
    static Polynomial from_roots(const std::vector<GaussianRational>& roots);

    const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const GaussianRational& operator[](std::size_t k) const { return coeffs_[k]; }
    const GaussianRational& leading() const { return coeffs_.back(); }

    GaussianRational evaluate(const GaussianRational& z) const;
    std::complex<double> evaluate(std::complex<double> z) const;

private:
    std::vector<GaussianRational> coeffs_;
};

struct ReciprocalExpansion {
    SparseSeries series; ///< b_0 .. b_D of 1/P, degree_bound = D
    Polynomial source;
};

/// Taylor coefficients of 1/P up to degree D. Throws ZeroConstantTerm.
ReciprocalExpansion reciprocal_taylor(const Polynomial& p, Exponent degree);

/// True iff sum_k a_k b_(j-k) is 1 for j = 0 and 0 for 1 <= j <= D.
bool convolution_identity_holds(const ReciprocalExpansion& expansion);

/// conj(1/a_0): the Bergman projection of conj(1/P) on any disc.
GaussianRational bergman_projection_constant(const Polynomial& p);

/// R0 = max(1, 2n * max_(k<n) |a_k / a_n|') with |x|' = |re| + |im|.
/// Throws DegreeTooSmall (n < 2) or ZeroConstantTerm.
Rational r0_bound(const Polynomial& p);

/// Exact upper bound sum_(k<n) |a_k/a_n|' / r^(n-k) for
/// |a_(n-1)/(a_n z) + ... + a_0/(a_n z^n)| on |z| >= r.
Rational tail_ratio_bound(const Polynomial& p, const Rational& r);

/// 4 pi / (r0^(2n-2) |a_n|^2 (n-1)) as an exact pi-multiple.
PiRational annulus_l2_bound_exact(const Polynomial& p, const Rational& r0);
double annulus_l2_bound(const Polynomial& p, const Rational& r0);

/// Polar midpoint grid. Radial cells: the first covers [0, r_inner]; the
/// rest are geometrically spaced from r_inner to the outer radius. With
/// r_inner >= outer radius (or no inner radius) the radial spacing is
/// uniform.
struct QuadratureGrid {
    std::size_t radial = 512;
    std::size_t angular = 512;

    /// "NRxNT". Throws std::invalid_argument.
    static QuadratureGrid parse(const std::string& text);
    std::string to_string() const;
};

/// Midpoint-rule estimate of the area integral of f over |z| < radius on the
/// given grid. `inner_radius`, if set and smaller than radius, makes the
/// radial cells geometric between inner_radius and radius. Deterministic:
/// rows are summed in a fixed order whatever the thread count.
std::complex<double> polar_quadrature(const std::function<std::complex<double>(std::complex<double>)>& f,
                                      double radius, const QuadratureGrid& grid,
                                      std::optional<double> inner_radius = std::nullopt);

/// |P| below this at a node counts as a root: 1e-9 * (1 + max_k |a_k|).
double zero_threshold(const Polynomial& p);

/// Lower bound on the modulus of every root: |a_0| / (|a_0| + max_(k>=1) |a_k|).
double root_modulus_lower_bound(const Polynomial& p);

/// Quadrature estimate of the integral of |1/P|^2 over |z| < r0. The radial
/// grid is graded from root_modulus_lower_bound(P) outwards.
/// Throws NearZeroDetected when |P| < zero_threshold(P) at a node.
double inner_disc_l2(const Polynomial& p, const Rational& r0, const QuadratureGrid& grid);

struct CertificateReport {
    Rational r0;
    double annulus_bound = 0.0;
    /// Absent when a grid node hit a root.
    std::optional<double> inner_integral;
    std::optional<double> m_constant;
    /// P has a root in |z| <= certified_radius.
    double certified_radius = 0.0;
    std::optional<std::complex<double>> root_witness;
    QuadratureGrid grid;
    /// Cauchy's bound 1 + max |a_k / a_n|, for comparison.
    double cauchy_bound = 0.0;
    std::string comment;
};

/// Throws DegreeTooSmall or ZeroConstantTerm. A near-zero grid node is
/// reported as a root witness with certified_radius = |witness|.
CertificateReport root_disc_certificate(const Polynomial& p, const QuadratureGrid& grid = {});

} // namespace bergman
