#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kummer {

using Integer = mpz_class;

// p-adic valuation, with +inf for zero.
class Valuation {
public:
    explicit constexpr Valuation(std::int64_t v) : v_(v), inf_(false) {}
    static constexpr Valuation infinite() { return Valuation(); }

    constexpr bool is_infinite() const { return inf_; }
    std::int64_t value() const;
    std::string str() const;

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        return a.v_ <=> b.v_;
    }

private:
    constexpr Valuation() : v_(0), inf_(true) {}
    std::int64_t v_;
    bool inf_;
};

Integer from_u64(std::uint64_t v);
std::uint64_t to_u64(const Integer& v);
bool fits_u64(const Integer& v);

Integer pow_u(std::uint64_t base, std::uint64_t exp);
Integer pow_u(const Integer& base, std::uint64_t exp);

// Least nonnegative residue.
Integer mod_floor(const Integer& a, const Integer& m);
std::uint64_t mod_u64(const Integer& a, std::uint64_t m);
Integer mod_inverse(const Integer& a, const Integer& m);

// C(n, k) for any integer n (falling factorial over k!).
Integer binomial(const Integer& n, std::uint64_t k);

Valuation ord_p(const Integer& a, std::uint64_t p);
// Removes all factors p from a, returning the count.
std::uint64_t strip_p(Integer& a, std::uint64_t p);
std::uint64_t ord_p_factorial(std::uint64_t j, std::uint64_t p);

// phi(p^n) = (p-1) p^(n-1), n >= 1.
Integer phi_prime_power(std::uint64_t p, std::uint64_t n);

// Base-p digits of a >= 0, least significant first, padded or truncated to `count`.
std::vector<std::uint64_t> base_p_digits(const Integer& a, std::uint64_t p, std::size_t count);
Integer from_base_p_digits(const std::vector<std::uint64_t>& digits, std::uint64_t p);

std::string to_string(const Integer& v);

}  // namespace kummer
