#include "kummer/primes.hpp"

#include <memory>
#include <mutex>

#include "kummer/errors.hpp"

namespace kummer {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

bool is_prime(std::uint64_t n) { return is_probable_prime(from_u64(n)); }

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

std::shared_ptr<const std::vector<std::uint64_t>> sieve_for(std::uint64_t bound) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::uint64_t>> cached;
    static std::uint64_t cached_bound = 0;
    std::lock_guard lock(mu);
    if (!cached || cached_bound < bound) {
        cached = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(bound));
        cached_bound = bound;
    }
    return cached;
}

}  // namespace

Factorization trial_factor(Integer n, std::uint64_t bound) {
    require(n >= 1, "trial_factor needs n >= 1");
    Factorization f;
    auto sieve = sieve_for(bound);
    for (std::uint64_t q : *sieve) {
        if (q > bound) break;
        if (Integer(q) * q > n) break;
        std::uint64_t e = strip_p(n, q);
        if (e > 0) f.small.emplace_back(q, e);
    }
    if (n > 1 && n <= bound) {
        f.small.emplace_back(to_u64(n), 1);
        n = 1;
    }
    f.cofactor = n;
    if (n == 1) {
        f.cofactor_kind = CofactorKind::One;
    } else if (Integer(bound) * bound >= n || is_probable_prime(n)) {
        // below bound^2 a cofactor without small factors is prime
        f.cofactor_kind = CofactorKind::ProbablePrime;
    } else {
        f.cofactor_kind = CofactorKind::Composite;
    }
    return f;
}

}  // namespace kummer
