#include "bergman/primes.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>

#include "bergman/errors.hpp"

namespace bergman {

bool PrimeSet::contains(Natural n) const
{
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::vector<Natural> PrimeSet::in_range(Natural lo, Natural hi) const
{
    if (lo > hi) {
        return {};
    }
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto last = std::upper_bound(first, primes_.end(), hi);
    return {first, last};
}

PrimeSet sieve(Natural limit)
{
    std::vector<Natural> primes;
    if (limit < 2) {
        return PrimeSet(limit, {});
    }
    std::vector<bool> composite(limit + 1, false);
    for (Natural i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        if (i <= limit / i) {
            for (Natural j = i * i; j <= limit; j += i) {
                composite[j] = true;
            }
        }
    }
    return PrimeSet(limit, std::move(primes));
}

void save_prime_set(const PrimeSet& set, const std::filesystem::path& path)
{
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write prime cache " + tmp);
        }
        out << set.limit() << '\n';
        for (Natural p : set.primes()) {
            out << p << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

PrimeSet load_prime_set(const std::filesystem::path& path)
{
    std::ifstream in(path);
    Natural limit = 0;
    if (!in || !(in >> limit)) {
        return {};
    }
    std::vector<Natural> primes;
    Natural p = 0;
    while (in >> p) {
        if (p > limit || (!primes.empty() && p <= primes.back())) {
            return {};
        }
        primes.push_back(p);
    }
    return PrimeSet(limit, std::move(primes));
}

namespace {

Rational reciprocal(Natural n)
{
    return make_rational(Integer(1), Integer(std::to_string(n)));
}

void require_sieved(const PrimeSet& primes, Natural limit)
{
    if (primes.limit() < limit) {
        throw std::invalid_argument("prime set sieved to " + std::to_string(primes.limit()) +
                                    " but " + std::to_string(limit) + " is needed");
    }
}

} // namespace

SparseSeries prime_series(Natural limit)
{
    return SparseSeries::indicator(sieve(limit).primes(), limit);
}

PiRational prime_norm_partial(Natural limit)
{
    return prime_norm_partial(sieve(limit), limit);
}

PiRational prime_norm_partial(const PrimeSet& primes, Natural limit)
{
    require_sieved(primes, limit);
    std::vector<Rational> terms;
    for (Natural p : primes.in_range(2, limit)) {
        terms.push_back(reciprocal(p + 1));
    }
    return PiRational(sum(std::move(terms)));
}

Rational prime_reciprocal_sum(const PrimeSet& primes, Natural limit)
{
    require_sieved(primes, limit);
    std::vector<Rational> terms;
    for (Natural p : primes.in_range(2, limit)) {
        terms.push_back(reciprocal(p));
    }
    return sum(std::move(terms));
}

PrimePartition::PrimePartition(Natural pk, Natural p2_limit) : pk_(pk), p2_limit_(p2_limit)
{
    init(sieve(std::max(pk, p2_limit)));
}

PrimePartition::PrimePartition(Natural pk, Natural p2_limit, const PrimeSet& primes) : pk_(pk), p2_limit_(p2_limit)
{
    init(primes);
}

void PrimePartition::init(const PrimeSet& primes)
{
    require_sieved(primes, std::max(pk_, p2_limit_));
    if (!primes.contains(pk_)) {
        throw std::invalid_argument("cutoff " + std::to_string(pk_) + " is not prime");
    }
    p1_ = primes.in_range(2, pk_ - 1);
    p2_ = primes.in_range(pk_, p2_limit_);
}

const char* to_string(Smoothness s)
{
    switch (s) {
    case Smoothness::Smooth:
        return "Smooth";
    case Smoothness::Rough:
        return "Rough";
    case Smoothness::Mixed:
        return "Mixed";
    }
    return "?";
}

Smoothness classify(Natural n, const PrimePartition& part)
{
    if (n < 2) {
        throw OutOfRange("classify needs n >= 2, got " + std::to_string(n));
    }
    Natural rest = n;
    bool has_small_factor = false;
    for (Natural p : part.p1()) {
        while (rest % p == 0) {
            rest /= p;
            has_small_factor = true;
        }
    }
    if (!has_small_factor) {
        return Smoothness::Rough;
    }
    return rest == 1 ? Smoothness::Smooth : Smoothness::Mixed;
}

std::vector<Natural> smooth_numbers(const PrimePartition& part, Natural limit)
{
    std::vector<Natural> out;
    const auto& primes = part.p1();
    // Depth-first over exponent vectors; `from` keeps factors non-decreasing.
    auto extend = [&](auto&& self, Natural value, std::size_t from) -> void {
        for (std::size_t i = from; i < primes.size(); ++i) {
            if (value > limit / primes[i]) {
                break;
            }
            const Natural next = value * primes[i];
            out.push_back(next);
            self(self, next, i);
        }
    };
    extend(extend, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Natural> rough_numbers(const PrimePartition& part, Natural limit)
{
    if (limit < 2) {
        return {};
    }
    std::vector<bool> struck(limit + 1, false);
    for (Natural p : part.p1()) {
        for (Natural m = p; m <= limit; m += p) {
            struck[m] = true;
        }
    }
    std::vector<Natural> out;
    for (Natural n = 2; n <= limit; ++n) {
        if (!struck[n]) {
            out.push_back(n);
        }
    }
    return out;
}

Rational euler_product_smooth(const PrimePartition& part)
{
    Rational product(1);
    for (Natural p : part.p1()) {
        product *= make_rational(Integer(std::to_string(p)), Integer(std::to_string(p - 1)));
    }
    return product;
}

Rational smooth_reciprocal_sum(const PrimePartition& part, Natural limit)
{
    std::vector<Rational> terms;
    for (Natural k : smooth_numbers(part, limit)) {
        terms.push_back(reciprocal(k));
    }
    return sum(std::move(terms));
}

Rational rough_reciprocal_sum(const PrimePartition& part, Natural limit)
{
    std::vector<Rational> terms;
    for (Natural l : rough_numbers(part, limit)) {
        terms.push_back(reciprocal(l));
    }
    return sum(std::move(terms));
}

Rational tail_sum(const PrimePartition& part)
{
    std::vector<Rational> terms;
    for (Natural p : part.p2()) {
        terms.push_back(reciprocal(p));
    }
    return sum(std::move(terms));
}

BertrandWitness bertrand_witness(Natural n)
{
    return bertrand_witness(n, sieve(2 * n));
}

BertrandWitness bertrand_witness(Natural n, const PrimeSet& primes)
{
    if (n < 1) {
        throw std::invalid_argument("Bertrand witness needs N >= 1");
    }
    require_sieved(primes, 2 * n);
    // Only exponents in (N, 2N] are shared by g_N and q_N, each with weight
    // 1/(p+1) on the unit disc.
    std::vector<Rational> terms;
    for (Natural p : primes.in_range(n + 1, 2 * n)) {
        terms.push_back(reciprocal(p + 1));
    }
    PiRational value(sum(std::move(terms)));
    const bool exists = !value.is_zero();
    return {std::move(value), exists};
}

std::pair<SparseSeries, SparseSeries> bertrand_series(Natural n)
{
    std::vector<Exponent> block;
    for (Natural k = n + 1; k <= 2 * n; ++k) {
        block.push_back(k);
    }
    return {SparseSeries::indicator(block), SparseSeries::indicator(sieve(2 * n).primes())};
}

namespace {

std::vector<Natural> twin_lower_members(const PrimeSet& primes, Natural limit)
{
    require_sieved(primes, limit + 2);
    std::vector<Natural> out;
    for (Natural p : primes.in_range(2, limit)) {
        if (primes.contains(p + 2)) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

SparseSeries twin_prime_series(Natural limit)
{
    return SparseSeries::indicator(twin_lower_members(sieve(limit + 2), limit), limit);
}

PiRational twin_prime_norm_partial(Natural limit)
{
    return twin_prime_norm_partial(sieve(limit + 2), limit);
}

PiRational twin_prime_norm_partial(const PrimeSet& primes, Natural limit)
{
    std::vector<Rational> terms;
    for (Natural p : twin_lower_members(primes, limit)) {
        terms.push_back(reciprocal(p + 1));
    }
    return PiRational(sum(std::move(terms)));
}

} // namespace bergman
