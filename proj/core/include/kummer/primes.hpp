#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kummer/arith.hpp"

namespace kummer {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
bool is_prime(std::uint64_t n);
bool is_probable_prime(const Integer& n);

enum class CofactorKind { One, ProbablePrime, Composite };

struct Factorization {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> small;  // (prime, exponent), ascending
    Integer cofactor = 1;  // part left after trial division
    CofactorKind cofactor_kind = CofactorKind::One;
    bool complete() const { return cofactor_kind != CofactorKind::Composite; }
};

// Trial division by primes <= bound, then a probable-prime test on what is left.
Factorization trial_factor(Integer n, std::uint64_t bound = 1000000);

}  // namespace kummer
