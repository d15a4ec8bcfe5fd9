#include "bergman/fta.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "bergman/errors.hpp"

namespace bergman {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    if (coeffs_.back().is_zero()) {
        throw std::invalid_argument("leading coefficient is zero");
    }
}

Polynomial Polynomial::from_roots(const std::vector<GaussianRational>& roots)
{
    std::vector<GaussianRational> c{GaussianRational(1)};
    for (const auto& r : roots) {
        // c(z) * (z - r)
        std::vector<GaussianRational> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * r;
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

GaussianRational Polynomial::evaluate(const GaussianRational& z) const
{
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> z) const
{
    std::complex<double> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + it->to_complex();
    }
    return acc;
}

ReciprocalExpansion reciprocal_taylor(const Polynomial& p, Exponent degree)
{
    if (p[0].is_zero()) {
        throw ZeroConstantTerm();
    }
    const GaussianRational inv_a0 = p[0].reciprocal();
    const std::size_t n = p.degree();
    std::vector<GaussianRational> b(degree + 1);
    b[0] = inv_a0;
    for (Exponent j = 1; j <= degree; ++j) {
        GaussianRational acc;
        const std::size_t top = std::min<std::size_t>(j, n);
        for (std::size_t k = 1; k <= top; ++k) {
            if (!p[k].is_zero() && !b[j - k].is_zero()) {
                acc += p[k] * b[j - k];
            }
        }
        b[j] = -(inv_a0 * acc);
    }
    SparseSeries::Terms terms;
    for (Exponent j = 0; j <= degree; ++j) {
        terms.emplace_hint(terms.end(), j, std::move(b[j]));
    }
    return {SparseSeries(std::move(terms), degree), p};
}

bool convolution_identity_holds(const ReciprocalExpansion& expansion)
{
    const Polynomial& p = expansion.source;
    const Exponent degree = expansion.series.degree_bound().value_or(
        expansion.series.max_exponent().value_or(0));
    for (Exponent j = 0; j <= degree; ++j) {
        GaussianRational acc;
        const std::size_t top = std::min<std::size_t>(j, p.degree());
        for (std::size_t k = 0; k <= top; ++k) {
            acc += p[k] * expansion.series.coefficient(j - k);
        }
        if (acc != GaussianRational(j == 0 ? 1 : 0)) {
            return false;
        }
    }
    return true;
}

GaussianRational bergman_projection_constant(const Polynomial& p)
{
    if (p[0].is_zero()) {
        throw ZeroConstantTerm();
    }
    return p[0].reciprocal().conj();
}

namespace {

void require_certifiable(const Polynomial& p)
{
    if (p.degree() < 2) {
        throw DegreeTooSmall(p.degree());
    }
    if (p[0].is_zero()) {
        throw ZeroConstantTerm();
    }
}

} // namespace

Rational r0_bound(const Polynomial& p)
{
    require_certifiable(p);
    const std::size_t n = p.degree();
    const GaussianRational inv_lead = p.leading().reciprocal();
    Rational max_ratio(0);
    for (std::size_t k = 0; k < n; ++k) {
        Rational r = (p[k] * inv_lead).abs_bound();
        if (r > max_ratio) {
            max_ratio = std::move(r);
        }
    }
    Rational r0 = Rational(2 * static_cast<long>(n)) * max_ratio;
    return r0 < 1 ? Rational(1) : r0;
}

Rational tail_ratio_bound(const Polynomial& p, const Rational& r)
{
    if (sgn(r) <= 0) {
        throw std::invalid_argument("radius must be positive");
    }
    const std::size_t n = p.degree();
    const GaussianRational inv_lead = p.leading().reciprocal();
    std::vector<Rational> terms;
    for (std::size_t k = 0; k < n; ++k) {
        terms.push_back((p[k] * inv_lead).abs_bound() / pow(r, n - k));
    }
    return sum(std::move(terms));
}

PiRational annulus_l2_bound_exact(const Polynomial& p, const Rational& r0)
{
    const std::size_t n = p.degree();
    if (n < 2) {
        throw DegreeTooSmall(n);
    }
    if (sgn(r0) <= 0) {
        throw std::invalid_argument("r0 must be positive");
    }
    Rational denom = pow(r0, 2 * n - 2) * p.leading().norm() * Rational(static_cast<long>(n - 1));
    return PiRational(Rational(Rational(4) / denom));
}

double annulus_l2_bound(const Polynomial& p, const Rational& r0)
{
    return annulus_l2_bound_exact(p, r0).to_double();
}

QuadratureGrid QuadratureGrid::parse(const std::string& text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) {
        throw std::invalid_argument("grid must look like NRxNT, got '" + text + "'");
    }
    auto dim = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("grid must look like NRxNT, got '" + text + "'");
        }
        return static_cast<std::size_t>(std::stoull(s));
    };
    QuadratureGrid g{dim(text.substr(0, x)), dim(text.substr(x + 1))};
    if (g.radial == 0 || g.angular == 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    return g;
}

std::string QuadratureGrid::to_string() const
{
    return std::to_string(radial) + "x" + std::to_string(angular);
}

namespace {

// Radial cell edges t_0 = 0 < t_1 < ... < t_n = radius.
std::vector<double> radial_edges(double radius, std::size_t cells, std::optional<double> inner_radius)
{
    std::vector<double> edges(cells + 1);
    const bool graded = inner_radius && *inner_radius > 0 && *inner_radius < radius && cells >= 2;
    if (!graded) {
        for (std::size_t i = 0; i <= cells; ++i) {
            edges[i] = radius * static_cast<double>(i) / static_cast<double>(cells);
        }
        edges[cells] = radius;
        return edges;
    }
    const double r_in = *inner_radius;
    const std::size_t inner_cells = std::max<std::size_t>(1, cells / 8);
    const std::size_t outer_cells = cells - inner_cells;
    for (std::size_t i = 0; i <= inner_cells; ++i) {
        edges[i] = r_in * static_cast<double>(i) / static_cast<double>(inner_cells);
    }
    const double log_ratio = std::log(radius / r_in);
    for (std::size_t i = 1; i <= outer_cells; ++i) {
        edges[inner_cells + i] = r_in * std::exp(log_ratio * static_cast<double>(i) / static_cast<double>(outer_cells));
    }
    edges[cells] = radius;
    return edges;
}

} // namespace

std::complex<double> polar_quadrature(const std::function<std::complex<double>(std::complex<double>)>& f,
                                      double radius, const QuadratureGrid& grid,
                                      std::optional<double> inner_radius)
{
    if (!(radius > 0) || grid.radial == 0 || grid.angular == 0) {
        throw std::invalid_argument("quadrature needs a positive radius and a nonempty grid");
    }
    const std::vector<double> edges = radial_edges(radius, grid.radial, inner_radius);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(grid.angular);

    std::vector<std::complex<double>> row_sums(grid.radial);
    std::vector<std::exception_ptr> row_errors(grid.radial);
    auto do_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < grid.radial; i += stride) {
            try {
                const double r = 0.5 * (edges[i] + edges[i + 1]);
                const double weight = r * (edges[i + 1] - edges[i]) * dtheta;
                std::complex<double> acc;
                for (std::size_t j = 0; j < grid.angular; ++j) {
                    const double theta = (static_cast<double>(j) + 0.5) * dtheta;
                    acc += f(std::polar(r, theta));
                }
                row_sums[i] = acc * weight;
            } catch (...) {
                row_errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(grid.radial, 16));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(do_rows, w, workers);
    }
    do_rows(0, workers);
    for (auto& t : pool) {
        t.join();
    }

    for (const auto& e : row_errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::complex<double> total;
    for (const auto& s : row_sums) {
        total += s;
    }
    return total;
}

double zero_threshold(const Polynomial& p)
{
    double max_abs = 0.0;
    for (const auto& c : p.coeffs()) {
        max_abs = std::max(max_abs, std::abs(c.to_complex()));
    }
    return 1e-9 * (1.0 + max_abs);
}

double root_modulus_lower_bound(const Polynomial& p)
{
    const double a0 = std::abs(p[0].to_complex());
    double max_rest = 0.0;
    for (std::size_t k = 1; k <= p.degree(); ++k) {
        max_rest = std::max(max_rest, std::abs(p[k].to_complex()));
    }
    return a0 / (a0 + max_rest);
}

double inner_disc_l2(const Polynomial& p, const Rational& r0, const QuadratureGrid& grid)
{
    const double eps = zero_threshold(p);
    auto integrand = [&](std::complex<double> z) {
        const double modulus = std::abs(p.evaluate(z));
        if (modulus < eps) {
            throw NearZeroDetected(z);
        }
        return std::complex<double>(1.0 / (modulus * modulus));
    };
    std::optional<double> inner;
    if (p.degree() >= 1 && !p[0].is_zero()) {
        inner = root_modulus_lower_bound(p);
    }
    return polar_quadrature(integrand, to_double(r0), grid, inner).real();
}

CertificateReport root_disc_certificate(const Polynomial& p, const QuadratureGrid& grid)
{
    require_certifiable(p);
    CertificateReport report;
    report.r0 = r0_bound(p);
    report.annulus_bound = annulus_l2_bound(p, report.r0);
    report.grid = grid;

    const std::size_t n = p.degree();
    const std::complex<double> lead = p.leading().to_complex();
    double max_ratio = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        max_ratio = std::max(max_ratio, std::abs(p[k].to_complex() / lead));
    }
    report.cauchy_bound = 1.0 + max_ratio;

    try {
        const double inner = inner_disc_l2(p, report.r0, grid);
        report.inner_integral = inner;
        report.m_constant = inner + report.annulus_bound;
        report.certified_radius = std::abs(p[0].to_complex()) * std::sqrt(*report.m_constant / std::numbers::pi);
        report.comment = "a root lies in |z| <= certified_radius; the Cauchy bound is usually sharper";
    } catch (const NearZeroDetected& hit) {
        report.root_witness = hit.point();
        report.certified_radius = std::abs(hit.point());
        report.comment = "quadrature node hit a numerical root; certified_radius is its modulus";
    }
    return report;
}

} // namespace bergman
