#include "bergman/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bergman {

SparseSeries::SparseSeries(Terms terms, std::optional<Exponent> degree_bound)
    : degree_bound_(degree_bound)
{
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.is_zero()) {
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    if (degree_bound_ && !terms.empty() && terms.rbegin()->first > *degree_bound_) {
        throw std::invalid_argument("exponent " + std::to_string(terms.rbegin()->first) +
                                    " exceeds degree bound " + std::to_string(*degree_bound_));
    }
    terms_ = std::move(terms);
}

SparseSeries::SparseSeries(std::initializer_list<std::pair<const Exponent, GaussianRational>> terms)
    : SparseSeries(Terms(terms))
{
}

SparseSeries SparseSeries::monomial(Exponent exponent, GaussianRational coefficient)
{
    Terms t;
    t.emplace(exponent, std::move(coefficient));
    return SparseSeries(std::move(t));
}

SparseSeries SparseSeries::geometric(Exponent degree)
{
    Terms t;
    for (Exponent e = 0; e <= degree; ++e) {
        t.emplace_hint(t.end(), e, GaussianRational(1));
    }
    return SparseSeries(std::move(t), degree);
}

SparseSeries SparseSeries::indicator(const std::vector<Exponent>& exponents, std::optional<Exponent> degree_bound)
{
    Terms t;
    for (Exponent e : exponents) {
        t[e] += GaussianRational(1);
    }
    return SparseSeries(std::move(t), degree_bound);
}

GaussianRational SparseSeries::coefficient(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

std::vector<Exponent> SparseSeries::support() const
{
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        out.push_back(e);
    }
    return out;
}

std::optional<Exponent> SparseSeries::max_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

Disc::Disc(Rational radius) : radius_(std::move(radius))
{
    if (sgn(radius_) <= 0) {
        throw std::invalid_argument("disc radius must be positive");
    }
}

const Rational& PiRational::real_coefficient() const
{
    if (!coeff_.is_real()) {
        throw std::domain_error("pi-multiple has a nonzero imaginary part");
    }
    return coeff_.re();
}

double PiRational::to_double() const
{
    return bergman::to_double(coeff_.re()) * std::numbers::pi;
}

std::strong_ordering operator<=>(const PiRational& a, const PiRational& b)
{
    const int c = cmp(a.real_coefficient(), b.real_coefficient());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace {

// R^(2n+2) / (n+1)
Rational bergman_weight(const Rational& radius, Exponent n)
{
    Rational w = make_rational(Integer(1), Integer(std::to_string(n + 1)));
    if (radius != 1) {
        w *= pow(radius, static_cast<unsigned long>(2 * n + 2));
    }
    return w;
}

} // namespace

PiRational inner_product(const SparseSeries& f, const SparseSeries& g, const Disc& disc)
{
    std::vector<Rational> re;
    std::vector<Rational> im;
    auto fi = f.terms().begin();
    auto gi = g.terms().begin();
    while (fi != f.terms().end() && gi != g.terms().end()) {
        if (fi->first < gi->first) {
            ++fi;
        } else if (gi->first < fi->first) {
            ++gi;
        } else {
            const GaussianRational term = fi->second * gi->second.conj() * GaussianRational(bergman_weight(disc.radius(), fi->first));
            re.push_back(term.re());
            if (!term.is_real()) {
                im.push_back(term.im());
            }
            ++fi;
            ++gi;
        }
    }
    return PiRational(GaussianRational(sum(std::move(re)), sum(std::move(im))));
}

PiRational norm_sq(const SparseSeries& f, const Disc& disc)
{
    std::vector<Rational> terms;
    terms.reserve(f.size());
    for (const auto& [n, c] : f.terms()) {
        terms.push_back(c.norm() * bergman_weight(disc.radius(), n));
    }
    return PiRational(sum(std::move(terms)));
}

SparseSeries compose_power(const SparseSeries& f, Exponent m)
{
    if (m == 0) {
        throw std::invalid_argument("power substitution needs m >= 1");
    }
    constexpr Exponent max = std::numeric_limits<Exponent>::max();
    auto scaled = [&](Exponent e) {
        if (e > max / m) {
            throw std::overflow_error("exponent overflow in power substitution");
        }
        return e * m;
    };
    SparseSeries::Terms t;
    for (const auto& [e, c] : f.terms()) {
        t.emplace_hint(t.end(), scaled(e), c);
    }
    std::optional<Exponent> bound;
    if (f.degree_bound()) {
        bound = scaled(*f.degree_bound());
    }
    return SparseSeries(std::move(t), bound);
}

bool disjoint_support(const SparseSeries& f, const SparseSeries& g)
{
    auto fi = f.terms().begin();
    auto gi = g.terms().begin();
    while (fi != f.terms().end() && gi != g.terms().end()) {
        if (fi->first < gi->first) {
            ++fi;
        } else if (gi->first < fi->first) {
            ++gi;
        } else {
            return false;
        }
    }
    return true;
}

SparseSeries add(const SparseSeries& f, const SparseSeries& g)
{
    SparseSeries::Terms t = f.terms();
    for (const auto& [e, c] : g.terms()) {
        t[e] += c;
    }
    std::optional<Exponent> bound;
    if (f.degree_bound() && g.degree_bound()) {
        bound = std::max(*f.degree_bound(), *g.degree_bound());
    }
    return SparseSeries(std::move(t), bound);
}

SparseSeries scale(const SparseSeries& f, const GaussianRational& c)
{
    SparseSeries::Terms t;
    if (!c.is_zero()) {
        for (const auto& [e, v] : f.terms()) {
            t.emplace_hint(t.end(), e, v * c);
        }
    }
    return SparseSeries(std::move(t), f.degree_bound());
}

SparseSeries truncate(const SparseSeries& f, Exponent degree)
{
    const auto& src = f.terms();
    SparseSeries::Terms t(src.begin(), src.upper_bound(degree));
    return SparseSeries(std::move(t), degree);
}

} // namespace bergman
