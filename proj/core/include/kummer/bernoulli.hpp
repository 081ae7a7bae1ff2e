#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>

#include "kummer/arith.hpp"
#include "kummer/padic.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// In-memory store of B_n for even n >= 2, optionally backed by a file of
// "n<TAB>numerator<TAB>denominator" lines. Reads may run concurrently; writes
// are serialized.
class BernoulliCache {
public:
    BernoulliCache() = default;
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;

    std::optional<Rational> get(std::uint64_t n) const;
    // Rejects zero values, odd indices and denominators that contradict von Staudt-Clausen.
    void put(std::uint64_t n, const Rational& value);

    // Merges records from a file; a missing file is an empty cache.
    std::size_t load(const std::filesystem::path& file);
    // Writes all records (sorted by n) atomically via a temporary file.
    void save(const std::filesystem::path& file) const;

    std::size_t size() const;
    bool dirty() const;
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::map<std::uint64_t, Rational> entries_;
    bool dirty_ = false;
};

BernoulliCache& global_cache();

// Exact B_n with B_1 = -1/2. Small indices use the tangent-number recurrence,
// larger ones the zeta rounding method; results go through the cache.
Rational bernoulli(std::uint64_t n);
Rational bernoulli(std::uint64_t n, BernoulliCache& cache);

// B_n from tangent numbers, O(n^2) big-integer steps.
Rational bernoulli_recurrence(std::uint64_t n);
// B_n = (-1)^(n/2+1) U_n / V_n with U_n from numerator_via_zeta.
Rational bernoulli_via_zeta(std::uint64_t n, unsigned guard_digits = 10);

// B_n / n for even n >= 2.
Rational divided_bernoulli(std::uint64_t n);

// prod_{p-1 | n} p
Integer vsc_denominator(std::uint64_t n);
// prod_{p-1 does not divide n} p^{ord_p n}
Integer trivial_factor(std::uint64_t n);

// S_n(m) = sum_{nu=0}^{m-1} nu^n. Direct summation for moderate m, Faulhaber otherwise.
Integer power_sum(std::uint64_t n, const Integer& m);
Integer power_sum_faulhaber(std::uint64_t n, const Integer& m);

// B_n / n mod p^k for p-1 not dividing n.
PadicApprox divided_bernoulli_mod(std::uint64_t n, std::uint64_t p, int k);

// |numerator(B_n)| obtained by rounding tau_n * zeta(n). Throws PrecisionError
// when the certified error bound does not pin down a unique integer.
Integer numerator_via_zeta(std::uint64_t n, unsigned guard_digits = 10);

// Leading decimal digits shared by U_n and floor(tau_n).
int tau_digit_agreement(std::uint64_t n);
Integer tau_floor(std::uint64_t n);

}  // namespace kummer
