#pragma once

// Orthogonal monomial decompositions behind the divergence of sum 1/p, built
// as degree-D truncations.
//
// Geometric partition: with F(z) = sum over rough n of z^n,
//
//     1 + z + ... + z^D = 1 + z + F(z) + sum over smooth k of (z^k + F(z^k))
//
// because every n >= 2 is uniquely (smooth part) * (rough part).
//
// Rough deduplication: with Q(z) = sum over p in P2 of z^p and H_l = Q(z^l),
// G_l is H_l with every monomial already present in Q or an earlier G
// removed (l ascending). Then F = Q + sum_l G_l with all blocks disjoint.

#include <cstdint>
#include <string>
#include <vector>

#include "bergman/primes.hpp"
#include "bergman/series.hpp"

namespace bergman {

enum class BlockKind { Constant, Linear, RoughF, SmoothMono, ShiftedRough };

struct PartitionBlock {
    BlockKind kind;
    Natural k = 0; ///< the smooth index for SmoothMono / ShiftedRough
    SparseSeries series;

    /// "1", "z", "F(z)", "z^k", "F(z^k)".
    std::string label() const;
};

struct PartitionReport {
    Natural pk;
    Exponent degree;
    std::vector<PartitionBlock> blocks;
    /// coverage[e] is the index into `blocks` of the block holding z^e.
    std::vector<std::size_t> coverage;
};

/// Throws std::invalid_argument for degree < 1 or non-prime pk, and
/// PartitionViolation if verification fails.
PartitionReport geometric_partition(Natural pk, Exponent degree);

/// Recomputes coverage from the blocks and checks that every exponent in
/// 0..degree is covered exactly once and that the blocks sum to the
/// truncated geometric series. Throws PartitionViolation.
void verify_partition(const PartitionReport& report);

struct DedupBlock {
    Natural l;
    SparseSeries g;    ///< G_l
    PiRational h_norm; ///< ||H_l||^2 with H_l = Q(z^l) truncated at the degree
};

struct DedupReport {
    Natural pk;
    Exponent degree;
    Natural p2_limit;
    SparseSeries q_block;
    /// One entry per rough l in [2, degree], ascending; G_l may be zero.
    std::vector<DedupBlock> g_blocks;
};

/// Requires degree >= 1 and p2_limit >= degree. Throws CoverageGap if a rough
/// number is left uncovered.
DedupReport rough_dedup(Natural pk, Exponent degree, Natural p2_limit);

/// Checks disjointness, Q + sum G_l = F (truncated), and
/// ||G_l||^2 <= ||H_l||^2 <= (2/l) ||Q||^2 for every l. Throws CoverageGap for
/// a missing rough number and std::logic_error for any other failure.
void verify_dedup(const DedupReport& report);

/// F truncated at degree: sum of z^n over rough n in [2, degree].
SparseSeries rough_series(const PrimePartition& part, Exponent degree);

struct NormComparison {
    PiRational lhs;
    PiRational rhs;
    bool holds;
};

/// lhs = ||1 + z + ... + z^D||^2,
/// rhs = 3pi/2 + ||F_D||^2 + (pi + 2 ||F_D||^2) * sum over smooth k <= D of 1/k.
NormComparison step_one_norm_bound(Natural pk, Exponent degree);

/// lhs = ||Q||^2 + sum ||G_l||^2 (Parseval over the dedup blocks),
/// rhs = 2 ||Q||^2 (1 + sum over rough l <= D of 1/l).
NormComparison step_two_norm_bound(Natural pk, Exponent degree, Natural p2_limit);

struct TailBound {
    Rational tail;         ///< s = sum over P2 of 1/p
    Rational majorant;     ///< s / (1 - s)
    Natural partial_limit; ///< rough numbers up to here are summed
    Rational partial_sum;  ///< sum over rough l <= partial_limit of 1/l
    bool holds;            ///< partial_sum <= majorant
};

/// Throws TailNotSmall when s >= 1 and std::invalid_argument when
/// partial_limit exceeds the partition's p2_limit.
TailBound rough_tail_geometric_bound(const PrimePartition& part, Natural partial_limit);
TailBound rough_tail_geometric_bound(const PrimePartition& part);

/// Taylor coefficients of (1 - z)^t up to degree D, exact.
SparseSeries binomial_series(const Rational& t, Exponent degree);
/// ||(1 - z)^t truncated at D||^2 / pi in floating point, coefficients by the
/// recurrence c_n = c_(n-1) (n - 1 - t) / n.
double binomial_norm_partial(double t, Exponent degree);

} // namespace bergman
