#pragma once

// Primes, the prime series sum_p z^p and its relatives, and the split of the
// integers >= 2 into p_k-smooth numbers (all prime factors < p_k) and p_k-rough
// numbers (all prime factors >= p_k).
//
// The integer 1 belongs to neither class; callers that need it (the Euler
// product, the geometric partition) handle it explicitly.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/series.hpp"

namespace bergman {

using Natural = std::uint64_t;

class PrimeSet {
public:
    PrimeSet() = default;
    PrimeSet(Natural limit, std::vector<Natural> primes) : limit_(limit), primes_(std::move(primes)) {}

    Natural limit() const noexcept { return limit_; }
    const std::vector<Natural>& primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }
    /// Only meaningful for n <= limit().
    bool contains(Natural n) const;
    /// Primes p with lo <= p <= hi (clipped to the sieved range).
    std::vector<Natural> in_range(Natural lo, Natural hi) const;

private:
    Natural limit_ = 0;
    std::vector<Natural> primes_;
};

/// Sieve of Eratosthenes.
PrimeSet sieve(Natural limit);

/// Text cache: first line the limit, then one prime per line. load returns
/// an empty set with limit 0 if the file is absent or malformed.
void save_prime_set(const PrimeSet& set, const std::filesystem::path& path);
PrimeSet load_prime_set(const std::filesystem::path& path);

/// sum_(p <= limit) z^p, degree_bound = limit.
SparseSeries prime_series(Natural limit);
/// pi * sum_(p <= limit) 1/(p+1), summed directly from the primes.
PiRational prime_norm_partial(Natural limit);
PiRational prime_norm_partial(const PrimeSet& primes, Natural limit);
/// sum_(p <= limit) 1/p.
Rational prime_reciprocal_sum(const PrimeSet& primes, Natural limit);

/// Cutoff prime p_k with P1 = primes < p_k and P2 = primes in [p_k, p2_limit].
class PrimePartition {
public:
    /// Throws std::invalid_argument unless pk is prime.
    PrimePartition(Natural pk, Natural p2_limit);
    PrimePartition(Natural pk, Natural p2_limit, const PrimeSet& primes);

    Natural pk() const noexcept { return pk_; }
    Natural p2_limit() const noexcept { return p2_limit_; }
    const std::vector<Natural>& p1() const noexcept { return p1_; }
    const std::vector<Natural>& p2() const noexcept { return p2_; }

private:
    void init(const PrimeSet& primes);

    Natural pk_;
    Natural p2_limit_;
    std::vector<Natural> p1_;
    std::vector<Natural> p2_;
};

enum class Smoothness { Smooth, Rough, Mixed };

const char* to_string(Smoothness s);

/// Throws OutOfRange for n < 2.
Smoothness classify(Natural n, const PrimePartition& part);

/// N1 and N2 restricted to [2, limit], ascending.
std::vector<Natural> smooth_numbers(const PrimePartition& part, Natural limit);
std::vector<Natural> rough_numbers(const PrimePartition& part, Natural limit);

/// prod_(p in P1) 1/(1 - 1/p).
Rational euler_product_smooth(const PrimePartition& part);
/// sum over N1 intersected with [2, limit] of 1/k.
Rational smooth_reciprocal_sum(const PrimePartition& part, Natural limit);
/// sum over N2 intersected with [2, limit] of 1/l.
Rational rough_reciprocal_sum(const PrimePartition& part, Natural limit);

/// sum_(p in P2) 1/p.
Rational tail_sum(const PrimePartition& part);

struct BertrandWitness {
    PiRational value;
    bool prime_exists;
};

/// <g_N, q_N> on the unit disc with g_N = z^(N+1) + ... + z^(2N) and q_N the
/// primes up to 2N; evaluated from the primes in (N, 2N].
BertrandWitness bertrand_witness(Natural n);
BertrandWitness bertrand_witness(Natural n, const PrimeSet& primes);
/// The two polynomials (g_N, q_N) themselves.
std::pair<SparseSeries, SparseSeries> bertrand_series(Natural n);

/// sum_(p <= limit, p+2 prime) z^p.
SparseSeries twin_prime_series(Natural limit);
/// pi * sum_(p <= limit, p+2 prime) 1/(p+1).
PiRational twin_prime_norm_partial(Natural limit);
PiRational twin_prime_norm_partial(const PrimeSet& primes, Natural limit);

} // namespace bergman
