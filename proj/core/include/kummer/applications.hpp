#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kummer/arith.hpp"
#include "kummer/padic.hpp"
#include "kummer/pairs.hpp"
#include "kummer/zeta.hpp"

namespace kummer {

enum class AdamsCase { Regular, IrregularNonpair, Nonsingular, Singular };
std::string to_string(AdamsCase c);

struct AdamsOptions {
    int max_chi_depth = 30;        // chi digits beyond this are not computed
    unsigned max_tree_depth = 6;   // singular tree depth
    std::uint64_t exact_limit = 20000;  // compare with exact ord_p B_n up to this n
};

struct AdamsDelta {
    std::uint64_t n;
    std::uint64_t p;
    std::uint64_t l;
    unsigned r;                          // ord_p n
    AdamsCase kind;
    std::optional<std::int64_t> delta;   // empty when the needed depth exceeds the limits
    std::optional<Valuation> exact_ord;  // ord_p B_n, when it was computed

    bool determinate() const { return delta.has_value(); }
    // The prediction p^(r+delta) || B_n agrees with the exact valuation (true when none was computed).
    bool consistent() const;
};

// Exact p-power in B_n beyond ord_p n, for p | n with p-1 not dividing n.
AdamsDelta adams_delta(std::uint64_t n, std::uint64_t p, const AdamsOptions& options = {},
                       const BernoulliModOracle& oracle = exact_oracle());

struct AdamsSample {
    std::uint64_t n;
    std::uint64_t p;
};

// Deterministic, distinct (n, p) with p^r || n, r >= 1, p-1 not dividing n, 5 <= p <= pmax, n <= nmax.
// Roughly half the draws sit on irregular pairs so the nonsingular case is exercised.
std::vector<AdamsSample> adams_samples(std::size_t count, std::uint64_t seed, std::uint64_t pmax = 997,
                                       std::uint64_t nmax = 20000);

// p -> tau(p, n) for primes 5 <= p <= P with p-1 not dividing n; zero entries omitted.
// tau counts the chain (p, n mod phi(p^v)), v = 1, 2, ... while it stays irregular of order v.
std::map<std::uint64_t, unsigned> tau_structure(std::uint64_t n, std::uint64_t prime_bound,
                                                const BernoulliModOracle& oracle = exact_oracle());

// S_n(m) mod `mod` by modular exponentiation.
Integer power_sum_mod(std::uint64_t n, std::uint64_t m, const Integer& mod);

// B(n)/n == S_n(p) / (n p) mod p^2 for p >= 5, p not dividing n, p-1 dividing neither n nor n-2.
PadicApprox divided_bernoulli_from_power_sum(std::uint64_t n, std::uint64_t p);

// Delta from p^-2 (S_{l+p-1}(p)/(l-1) - S_l(p)/l) mod p. Requires (p, l) irregular.
std::uint64_t delta_via_power_sums(std::uint64_t p, std::uint64_t l);

struct DeltaS1S2 {
    std::uint64_t l;
    std::uint64_t delta;
    std::uint64_t s2;
    std::uint64_t lhs;  // Delta l s2 mod p
    std::uint64_t rhs;  // -p^-2 S_l(p) mod p
    bool holds() const { return lhs == rhs; }
};

// One entry per irregular l of p; requires Delta != 0 for each.
std::vector<DeltaS1S2> delta_s1_s2_check(std::uint64_t p, const BernoulliModOracle& oracle = exact_oracle());

struct B1OmegaCheck {
    std::uint64_t p;
    std::uint64_t l;
    Integer b1;         // B_{1, omega^(l-1)} mod p^2
    Integer bernoulli;  // B_{l + (p-1)(l-1)} mod p^2
    bool special_pair;  // (p, l, l-1) is irregular of order 2
    bool holds() const { return b1 == bernoulli && (b1 == 0) == special_pair; }
};

B1OmegaCheck b1_omega_check(std::uint64_t p, std::uint64_t l, const BernoulliModOracle& oracle = exact_oracle());

struct IwasawaPair {
    std::uint64_t l;
    bool delta_nonzero;     // condition (2')
    bool no_special_pair;   // condition (3'): (p, l, l-1) not irregular of order 2
    bool system_first;      // l S_{l+p-1}(p) - (l-1) S_l(p) != 0 mod p^3
    bool system_second;     // l S_{l+p-1}(p) - (l-2) S_l(p) != 0 mod p^3
    bool holds() const { return delta_nonzero && no_special_pair && system_first && system_second; }
    bool equivalent() const { return delta_nonzero == system_first && no_special_pair == system_second; }
};

// Conditions (2') and (3') and the power-sum system for every irregular l of p.
// The class-number condition is outside the scope of this check. Regular p is rejected.
std::vector<IwasawaPair> iwasawa_conditions(std::uint64_t p, const BernoulliModOracle& oracle = hybrid_oracle());

struct GcdReport {
    std::uint64_t n;
    std::uint64_t k;
    Integer d;  // gcd(numerator B_n, denominator B_{n-k})
    std::vector<std::uint64_t> primes;
    bool divides_n;
    bool squarefree;
    bool coprime_to_vk;      // no prime of d divides denominator B_k
    bool not_dividing_bhat;  // no prime of d divides numerator B_n / n
    bool holds() const { return divides_n && squarefree && coprime_to_vk && not_dividing_bhat; }
};

// k must be one of 2, 4, 6, 8, 10, 14 (|numerator(B_k / k)| = 1); n even, n - k >= 2.
GcdReport gcd_numer_denom(std::uint64_t n, std::uint64_t k);

struct PowerSumDivisibility {
    bool sum_side;        // m^(r+1) | S_n(m)
    bool bernoulli_side;  // m^r | numerator(B_n)
    bool equivalent() const { return sum_side == bernoulli_side; }
};

PowerSumDivisibility power_sum_divisibility_equiv(std::uint64_t n, const Integer& m, unsigned r);

struct LocalFactor {
    std::uint64_t p;
    std::uint64_t l;  // n mod (p-1)
    std::int64_t predicted;     // predicted ord_p B(n)/n
    std::int64_t actual;        // ord_p of the exact B(n)/n
    bool determinate = true;    // false when chi ran out of digits
    bool matches() const { return determinate && predicted == actual; }
};

struct ProductReport {
    std::uint64_t n;
    std::vector<LocalFactor> factors;
    // Set when the numerator of B(n)/n factors completely and all its primes are inside the bound:
    // whether the predicted p-powers multiply out to that numerator.
    std::optional<bool> numerator_verified;
    bool holds() const;
};

// rho(l) = 1 - 2 sign(l)
int rho(std::uint64_t l);

// Local factors of the product formula for zeta(1-n) at every prime p <= P.
ProductReport verify_zeta_product(std::uint64_t n, std::uint64_t prime_bound,
                                  const BernoulliModOracle& oracle = exact_oracle());

struct PllResult {
    std::uint64_t l;
    std::uint64_t s2;
    bool special;  // s2 == l, i.e. p^3 | B_{lp}
};

std::vector<PllResult> pll_check(std::uint64_t p, const BernoulliModOracle& oracle = exact_oracle());

}  // namespace kummer
