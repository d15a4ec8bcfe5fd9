#include "bergman/decomposition.hpp"

#include <set>
#include <stdexcept>

#include "bergman/errors.hpp"

namespace bergman {

PartitionViolation::PartitionViolation(std::uint64_t exponent, std::vector<std::string> labels)
    : BergmanError([&] {
          std::string msg = "exponent " + std::to_string(exponent) + " covered " +
                            std::to_string(labels.size()) + " times";
          for (std::size_t i = 0; i < labels.size(); ++i) {
              msg += (i == 0 ? ": " : ", ") + labels[i];
          }
          return msg;
      }()),
      exponent_(exponent), labels_(std::move(labels))
{
}

std::string PartitionBlock::label() const
{
    switch (kind) {
    case BlockKind::Constant:
        return "1";
    case BlockKind::Linear:
        return "z";
    case BlockKind::RoughF:
        return "F(z)";
    case BlockKind::SmoothMono:
        return "z^" + std::to_string(k);
    case BlockKind::ShiftedRough:
        return "F(z^" + std::to_string(k) + ")";
    }
    return "?";
}

SparseSeries rough_series(const PrimePartition& part, Exponent degree)
{
    return SparseSeries::indicator(rough_numbers(part, degree), degree);
}

namespace {

std::vector<std::size_t> checked_coverage(const PartitionReport& report)
{
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> coverage(report.degree + 1, unset);
    for (std::size_t b = 0; b < report.blocks.size(); ++b) {
        for (const auto& [e, c] : report.blocks[b].series.terms()) {
            if (e > report.degree) {
                throw PartitionViolation(e, {report.blocks[b].label()});
            }
            if (coverage[e] != unset) {
                throw PartitionViolation(e, {report.blocks[coverage[e]].label(), report.blocks[b].label()});
            }
            coverage[e] = b;
        }
    }
    for (Exponent e = 0; e <= report.degree; ++e) {
        if (coverage[e] == unset) {
            throw PartitionViolation(e, {});
        }
    }
    return coverage;
}

} // namespace

PartitionReport geometric_partition(Natural pk, Exponent degree)
{
    if (degree < 1) {
        throw std::invalid_argument("geometric partition needs degree >= 1");
    }
    const PrimePartition part(pk, degree);
    const SparseSeries f = rough_series(part, degree);

    PartitionReport report{pk, degree, {}, {}};
    report.blocks.push_back({BlockKind::Constant, 0, SparseSeries::monomial(0)});
    report.blocks.push_back({BlockKind::Linear, 0, SparseSeries::monomial(1)});
    if (degree >= 2) { // F lives on [2, D]
        report.blocks.push_back({BlockKind::RoughF, 0, f});
    }
    for (Natural k : smooth_numbers(part, degree)) {
        report.blocks.push_back({BlockKind::SmoothMono, k, SparseSeries::monomial(k)});
        report.blocks.push_back({BlockKind::ShiftedRough, k, truncate(compose_power(f, k), degree)});
    }

    report.coverage = checked_coverage(report);
    verify_partition(report);
    return report;
}

void verify_partition(const PartitionReport& report)
{
    const std::vector<std::size_t> coverage = checked_coverage(report);
    if (!report.coverage.empty() && report.coverage != coverage) {
        throw std::logic_error("stored coverage map disagrees with the blocks");
    }

    SparseSeries total;
    for (const auto& block : report.blocks) {
        total = add(total, block.series);
    }
    if (!(total == SparseSeries::geometric(report.degree))) {
        // Exact single coverage with a non-unit coefficient somewhere.
        for (const auto& [e, c] : total.terms()) {
            if (c != GaussianRational(1)) {
                throw PartitionViolation(e, {report.blocks[coverage[e]].label()});
            }
        }
        throw std::logic_error("partition blocks do not sum to the geometric series");
    }
}

DedupReport rough_dedup(Natural pk, Exponent degree, Natural p2_limit)
{
    if (degree < 1) {
        throw std::invalid_argument("rough dedup needs degree >= 1");
    }
    if (p2_limit < degree) {
        throw std::invalid_argument("p2_limit must be at least the degree");
    }
    const PrimePartition part(pk, p2_limit);
    std::vector<Exponent> q_exponents;
    for (Natural p : part.p2()) {
        if (p <= degree) {
            q_exponents.push_back(p);
        }
    }

    DedupReport report{pk, degree, p2_limit, SparseSeries::indicator(q_exponents, degree), {}};
    std::set<Exponent> seen(q_exponents.begin(), q_exponents.end());
    for (Natural l : rough_numbers(part, degree)) {
        SparseSeries h = truncate(compose_power(report.q_block, l), degree);
        SparseSeries::Terms kept;
        for (const auto& [e, c] : h.terms()) {
            if (seen.insert(e).second) {
                kept.emplace_hint(kept.end(), e, c);
            }
        }
        report.g_blocks.push_back({l, SparseSeries(std::move(kept), degree), norm_sq(h, Disc::unit())});
    }

    verify_dedup(report);
    return report;
}

void verify_dedup(const DedupReport& report)
{
    const PrimePartition part(report.pk, report.p2_limit);
    const SparseSeries f = rough_series(part, report.degree);

    std::set<Exponent> seen;
    auto absorb = [&](const SparseSeries& block, const std::string& what) {
        for (const auto& [e, c] : block.terms()) {
            if (!seen.insert(e).second) {
                throw std::logic_error("exponent " + std::to_string(e) + " repeated in " + what);
            }
            if (!f.contains(e)) {
                throw std::logic_error("exponent " + std::to_string(e) + " in " + what + " is not rough");
            }
        }
    };
    absorb(report.q_block, "Q");
    for (const auto& block : report.g_blocks) {
        absorb(block.g, "G_" + std::to_string(block.l));
    }
    for (const auto& [e, c] : f.terms()) {
        if (!seen.count(e)) {
            throw CoverageGap(e);
        }
    }

    SparseSeries total = report.q_block;
    for (const auto& block : report.g_blocks) {
        total = add(total, block.g);
    }
    if (!(total == f)) {
        throw std::logic_error("Q + sum G_l differs from F");
    }

    const Disc unit = Disc::unit();
    const PiRational q_norm = norm_sq(report.q_block, unit);
    for (const auto& block : report.g_blocks) {
        const PiRational g_norm = norm_sq(block.g, unit);
        const PiRational cap = make_rational(2, static_cast<long>(block.l)) * q_norm;
        if (g_norm > block.h_norm || block.h_norm > cap) {
            throw std::logic_error("norm chain fails for l = " + std::to_string(block.l));
        }
    }
}

NormComparison step_one_norm_bound(Natural pk, Exponent degree)
{
    if (degree < 1) {
        throw std::invalid_argument("step one bound needs degree >= 1");
    }
    const PrimePartition part(pk, degree);
    const Disc unit = Disc::unit();
    const PiRational lhs = norm_sq(SparseSeries::geometric(degree), unit);
    const PiRational f_norm = norm_sq(rough_series(part, degree), unit);
    const Rational harmonic = smooth_reciprocal_sum(part, degree);

    const PiRational rhs = PiRational(make_rational(3, 2)) + f_norm +
                           harmonic * (PiRational(Rational(1)) + Rational(2) * f_norm);
    return {lhs, rhs, lhs <= rhs};
}

NormComparison step_two_norm_bound(Natural pk, Exponent degree, Natural p2_limit)
{
    const DedupReport report = rough_dedup(pk, degree, p2_limit);
    const Disc unit = Disc::unit();
    const PiRational q_norm = norm_sq(report.q_block, unit);
    PiRational lhs = q_norm;
    for (const auto& block : report.g_blocks) {
        lhs += norm_sq(block.g, unit);
    }
    const PrimePartition part(pk, p2_limit);
    const Rational factor = Rational(2) * (Rational(1) + rough_reciprocal_sum(part, degree));
    const PiRational rhs = factor * q_norm;
    return {lhs, rhs, lhs <= rhs};
}

TailBound rough_tail_geometric_bound(const PrimePartition& part)
{
    return rough_tail_geometric_bound(part, part.p2_limit());
}

TailBound rough_tail_geometric_bound(const PrimePartition& part, Natural partial_limit)
{
    if (partial_limit > part.p2_limit()) {
        throw std::invalid_argument("partial_limit exceeds the partition's p2_limit");
    }
    Rational s = tail_sum(part);
    if (s >= 1) {
        throw TailNotSmall(s);
    }
    Rational majorant = s / (Rational(1) - s);
    Rational partial = rough_reciprocal_sum(part, partial_limit);
    const bool holds = partial <= majorant;
    return {std::move(s), std::move(majorant), partial_limit, std::move(partial), holds};
}

SparseSeries binomial_series(const Rational& t, Exponent degree)
{
    SparseSeries::Terms terms;
    Rational c(1);
    for (Exponent n = 0; n <= degree; ++n) {
        if (n > 0) {
            const Rational nn(static_cast<unsigned long>(n));
            c *= (nn - 1 - t) / nn;
        }
        terms.emplace_hint(terms.end(), n, GaussianRational(c));
    }
    return SparseSeries(std::move(terms), degree);
}

double binomial_norm_partial(double t, Exponent degree)
{
    double c = 1.0;
    double total = 1.0;
    for (Exponent n = 1; n <= degree; ++n) {
        const double nn = static_cast<double>(n);
        c *= (nn - 1.0 - t) / nn;
        total += c * c / (nn + 1.0);
    }
    return total;
}

} // namespace bergman
