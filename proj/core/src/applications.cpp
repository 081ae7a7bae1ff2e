#include "kummer/applications.hpp"

#include <algorithm>
#include <random>

#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/primes.hpp"
#include "kummer/zeta.hpp"

namespace kummer {

namespace {

bool is_pair(std::uint64_t p, std::uint64_t l, const BernoulliModOracle& oracle) {
    return is_member(IrregularPair(p, from_u64(l), 1), oracle);
}

std::vector<std::uint64_t> irregular_indices(std::uint64_t p, const BernoulliModOracle& oracle) {
    require(p >= 3 && is_prime(p), "expected an odd prime, got " + std::to_string(p));
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 2; l + 3 <= p; l += 2)
        if (is_pair(p, l, oracle)) out.push_back(l);
    return out;
}

std::vector<std::uint64_t> require_irregular(std::uint64_t p, const BernoulliModOracle& oracle) {
    auto ls = irregular_indices(p, oracle);
    require(!ls.empty(), std::to_string(p) + " is a regular prime");
    return ls;
}

std::uint64_t second_digit(std::uint64_t p, std::uint64_t l, const BernoulliModOracle& oracle) {
    IrregularPair pair(p, from_u64(l), 1);
    auto next = next_order(pair, oracle);
    if (auto* u = std::get_if<UniqueChild>(&next)) return u->s;
    throw SingularDeltaError("pair " + pair.str() + " has Delta = 0");
}

// ord_p(chi_(p,l) - x) for an integer x >= 0, or empty if chi agrees with x on every
// digit we are allowed to compute.
std::optional<std::int64_t> chi_distance(std::uint64_t p, std::uint64_t l, const Integer& x, int max_depth,
                                         const BernoulliModOracle& oracle) {
    std::size_t len = 0;
    for (Integer t = x; t > 0; t /= p) ++len;
    const auto xd = base_p_digits(x, p, len);
    int depth = std::min<int>(static_cast<int>(xd.size()) + 2, max_depth);
    for (;;) {
        const ChiZero chi = chi_digits(p, l, depth, oracle);
        for (int i = 0; i < depth; ++i) {
            const std::uint64_t xi = static_cast<std::size_t>(i) < xd.size() ? xd[i] : 0;
            if (chi.digits[i] != xi) return i;
        }
        if (depth >= max_depth) return std::nullopt;
        depth = max_depth;
    }
}

// Exponent of p contributed by the irregular pair (p, l) to B(n)/n.
std::optional<std::int64_t> pair_exponent(std::uint64_t n, std::uint64_t p, std::uint64_t l, bool singular,
                                          const AdamsOptions& opt, const BernoulliModOracle& oracle) {
    if (!singular) {
        auto d = chi_distance(p, l, Integer((n - l) / (p - 1)), opt.max_chi_depth, oracle);
        if (!d) return std::nullopt;
        return 1 + *d;
    }
    const auto tree = build_singular_tree(IrregularPair(p, from_u64(l), 1), opt.max_tree_depth, oracle);
    const unsigned h = singular_height(tree, from_u64(n));
    if (h >= opt.max_tree_depth) return std::nullopt;
    return 1 + static_cast<std::int64_t>(h);
}

}  // namespace

std::string to_string(AdamsCase c) {
    switch (c) {
        case AdamsCase::Regular: return "regular";
        case AdamsCase::IrregularNonpair: return "irregular-nonpair";
        case AdamsCase::Nonsingular: return "nonsingular";
        case AdamsCase::Singular: return "singular";
    }
    return "?";
}

bool AdamsDelta::consistent() const {
    if (!exact_ord) return true;
    return delta && *exact_ord == Valuation(static_cast<std::int64_t>(r) + *delta);
}

AdamsDelta adams_delta(std::uint64_t n, std::uint64_t p, const AdamsOptions& options,
                       const BernoulliModOracle& oracle) {
    require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    require(is_prime(p) && p >= 5, "p must be a prime >= 5 here, got " + std::to_string(p));
    require(n % (p - 1) != 0, "p-1 divides n");
    require(n % p == 0, "p does not divide n");
    Integer nn = from_u64(n);
    AdamsDelta out{n, p, n % (p - 1), static_cast<unsigned>(strip_p(nn, p)), AdamsCase::Regular, std::nullopt,
                   std::nullopt};

    if (is_pair(p, out.l, oracle)) {
        const bool singular = delta(IrregularPair(p, from_u64(out.l), 1), oracle).singular();
        out.kind = singular ? AdamsCase::Singular : AdamsCase::Nonsingular;
        out.delta = pair_exponent(n, p, out.l, singular, options, oracle);
    } else {
        out.kind = irregular_indices(p, oracle).empty() ? AdamsCase::Regular : AdamsCase::IrregularNonpair;
        out.delta = 0;
    }
    if (n <= options.exact_limit) out.exact_ord = ord_p(bernoulli(n), p);
    return out;
}

std::vector<AdamsSample> adams_samples(std::size_t count, std::uint64_t seed, std::uint64_t pmax,
                                       std::uint64_t nmax) {
    require(pmax >= 5 && nmax >= 10, "sampler bounds too small");
    std::mt19937_64 rng(seed);
    // rng() % k rather than std::uniform_int_distribution, whose output is implementation defined.
    auto pick = [&rng](std::uint64_t k) { return rng() % k; };

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : primes_up_to(std::min(pmax, nmax / 2)))
        if (p >= 5) primes.push_back(p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (const auto& pr : irregular_pairs_up_to(pmax)) {
        const std::uint64_t l = to_u64(pr.l);
        if (pr.p * l <= nmax) pairs.emplace_back(pr.p, l);
    }

    std::vector<AdamsSample> out;
    out.reserve(count);
    while (out.size() < count) {
        std::uint64_t p = 0, l = 0;
        if (!pairs.empty() && pick(2) == 0) {
            std::tie(p, l) = pairs[pick(pairs.size())];
        } else {
            p = primes[pick(primes.size())];
            const std::uint64_t lmax = std::min(p - 3, nmax / p);
            if (lmax < 2) continue;
            l = 2 + 2 * pick(lmax / 2);
        }
        const std::uint64_t tmax = (nmax / p - l) / (p - 1);
        const std::uint64_t t = pick(tmax + 1);
        const std::uint64_t n = p * (l + (p - 1) * t);
        if (std::none_of(out.begin(), out.end(), [&](const AdamsSample& s) { return s.n == n && s.p == p; }))
            out.push_back({n, p});
    }
    return out;
}

std::map<std::uint64_t, unsigned> tau_structure(std::uint64_t n, std::uint64_t prime_bound,
                                                const BernoulliModOracle& oracle) {
    require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    require(prime_bound >= 3, "prime bound must be >= 3");
    std::map<std::uint64_t, unsigned> out;
    const Integer nn = from_u64(n);
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        if (p < 5 || n % (p - 1) == 0) continue;
        unsigned tau = 0;
        for (unsigned v = 1;; ++v) {
            const Integer lv = mod_floor(nn, phi_prime_power(p, v));
            if (!oracle.divided_bernoulli_mod(lv, p, static_cast<int>(v)).is_zero()) break;
            ++tau;
        }
        if (tau > 0) out[p] = tau;
    }
    return out;
}

Integer power_sum_mod(std::uint64_t n, std::uint64_t m, const Integer& mod) {
    Integer s = 0, t, a;
    const Integer e = from_u64(n);
    for (std::uint64_t v = 1; v < m; ++v) {
        a = from_u64(v);
        mpz_powm(t.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
        s += t;
    }
    return mod_floor(s, mod);
}

PadicApprox divided_bernoulli_from_power_sum(std::uint64_t n, std::uint64_t p) {
    require(p >= 5 && is_prime(p), "needs a prime p >= 5");
    require(n >= 2 && n % 2 == 0 && n % p != 0 && n % (p - 1) != 0, "needs even n with p and p-1 not dividing n");
    // otherwise p^2 C(n,2) B_{n-2} / 3 in the Faulhaber expansion is only divisible by p
    require((n - 2) % (p - 1) != 0, "needs p-1 not dividing n-2");
    const Integer p3 = pow_u(p, 3);
    const Integer s = power_sum_mod(n, p, p3);
    ensure(s % p == 0, "S_n(p) not divisible by p");
    return PadicApprox(p, 2, s / p) / PadicApprox(p, 2, from_u64(n));
}

std::uint64_t delta_via_power_sums(std::uint64_t p, std::uint64_t l) {
    require(is_pair(p, l, exact_oracle()), "(" + std::to_string(p) + "," + std::to_string(l) + ") is not irregular");
    const Integer p3 = pow_u(p, 3);
    const Integer a = power_sum_mod(l + p - 1, p, p3) * mod_inverse(from_u64(l - 1), p3);
    const Integer b = power_sum_mod(l, p, p3) * mod_inverse(from_u64(l), p3);
    const Integer x = mod_floor(a - b, p3);
    const Integer p2 = pow_u(p, 2);
    ensure(x % p2 == 0, "power-sum difference not divisible by p^2");
    return mod_u64(x / p2, p);
}

std::vector<DeltaS1S2> delta_s1_s2_check(std::uint64_t p, const BernoulliModOracle& oracle) {
    const Integer p3 = pow_u(p, 3), p2 = pow_u(p, 2);
    std::vector<DeltaS1S2> out;
    for (std::uint64_t l : require_irregular(p, oracle)) {
        const std::uint64_t d = delta(IrregularPair(p, from_u64(l), 1), oracle).value;
        const std::uint64_t s2 = second_digit(p, l, oracle);
        const Integer s = power_sum_mod(l, p, p3);
        ensure(s % p2 == 0, "S_l(p) not divisible by p^2 for an irregular pair");
        const std::uint64_t lhs = mod_u64(Integer(d) * l * s2, p);
        const std::uint64_t rhs = mod_u64(-(s / p2), p);
        out.push_back({l, d, s2, lhs, rhs});
    }
    return out;
}

B1OmegaCheck b1_omega_check(std::uint64_t p, std::uint64_t l, const BernoulliModOracle& oracle) {
    require(is_pair(p, l, oracle), "(" + std::to_string(p) + "," + std::to_string(l) + ") is not irregular");
    const Integer p3 = pow_u(p, 3), p2 = pow_u(p, 2);
    const Integer e = from_u64(l - 1);
    Integer sum = 0, w;
    for (std::uint64_t a = 1; a < p; ++a) {
        const Integer t = teichmuller(a, p, 3).residue();
        mpz_powm(w.get_mpz_t(), t.get_mpz_t(), e.get_mpz_t(), p3.get_mpz_t());
        sum += w * a;
    }
    sum = mod_floor(sum, p3);
    ensure(sum % p == 0, "sum a omega^(l-1)(a) not divisible by p");

    const Integer idx = from_u64(l + (p - 1) * (l - 1));
    const Integer bn = mod_floor(oracle.divided_bernoulli_mod(idx, p, 2).residue() * idx, p2);

    bool special;
    auto next = next_order(IrregularPair(p, from_u64(l), 1), oracle);
    if (auto* u = std::get_if<UniqueChild>(&next))
        special = u->s == l - 1;
    else
        special = is_member(IrregularPair(p, idx, 2), oracle);
    return {p, l, sum / p, bn, special};
}

std::vector<IwasawaPair> iwasawa_conditions(std::uint64_t p, const BernoulliModOracle& oracle) {
    const Integer p3 = pow_u(p, 3);
    std::vector<IwasawaPair> out;
    for (std::uint64_t l : require_irregular(p, oracle)) {
        const std::uint64_t l2 = l + (p - 1) * (l - 1);
        const bool nonzero = !delta(IrregularPair(p, from_u64(l), 1), oracle).singular();
        const bool special = is_member(IrregularPair(p, from_u64(l2), 2), oracle);
        const Integer a = power_sum_mod(l + p - 1, p, p3), b = power_sum_mod(l, p, p3);
        const bool first = mod_floor(Integer(l) * a - Integer(l - 1) * b, p3) != 0;
        const bool second = mod_floor(Integer(l) * a - Integer(l - 2) * b, p3) != 0;
        out.push_back({l, nonzero, !special, first, second});
    }
    return out;
}

GcdReport gcd_numer_denom(std::uint64_t n, std::uint64_t k) {
    static constexpr std::uint64_t ks[] = {2, 4, 6, 8, 10, 14};
    require(std::find(std::begin(ks), std::end(ks), k) != std::end(ks),
            "k = " + std::to_string(k) + " is not one of 2, 4, 6, 8, 10, 14");
    require(n % 2 == 0 && n >= k + 2, "n must be even with n - k >= 2");
    const Rational bn = bernoulli(n);
    Integer d = gcd(bn.numerator(), vsc_denominator(n - k));
    if (d < 0) d = -d;

    GcdReport rep{n, k, d, {}, true, true, true, true};
    rep.divides_n = from_u64(n) % d == 0;
    const Factorization f = trial_factor(d);
    ensure(f.cofactor == 1, "gcd has a factor beyond trial division");
    const Integer vk = vsc_denominator(k);
    const Rational bhat = divided_bernoulli(n);
    for (auto [q, e] : f.small) {
        rep.primes.push_back(q);
        if (e > 1) rep.squarefree = false;
        if (vk % q == 0) rep.coprime_to_vk = false;
        if (bhat.numerator() % q == 0) rep.not_dividing_bhat = false;
    }
    return rep;
}

PowerSumDivisibility power_sum_divisibility_equiv(std::uint64_t n, const Integer& m, unsigned r) {
    require(r == 1 || r == 2, "r must be 1 or 2");
    require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    require(m >= 1, "m must be >= 1");
    const Integer s = power_sum(n, m);
    return {s % pow_u(m, r + 1) == 0, bernoulli(n).numerator() % pow_u(m, r) == 0};
}

int rho(std::uint64_t l) { return l == 0 ? 1 : -1; }

bool ProductReport::holds() const {
    for (const auto& f : factors)
        if (!f.matches()) return false;
    return numerator_verified.value_or(true);
}

ProductReport verify_zeta_product(std::uint64_t n, std::uint64_t prime_bound, const BernoulliModOracle& oracle) {
    require(n >= 2 && n % 2 == 0, "n must be even and >= 2");
    const Rational bhat = divided_bernoulli(n);
    const AdamsOptions opt;
    ProductReport rep{n, {}, std::nullopt};
    Integer num = 1, den = 1;
    for (std::uint64_t p : primes_up_to(prime_bound)) {
        LocalFactor f{p, n % (p - 1), 0, ord_p(bhat, p).value()};
        // |chi - (n-l)/(p-1)|_p / p raised to rho(l), with chi_(p,0) = 0.
        if (f.l == 0) {
            f.predicted = -rho(0) * (1 + ord_p(from_u64(n / (p - 1)), p).value());
        } else if (is_pair(p, f.l, oracle)) {
            const bool singular = delta(IrregularPair(p, from_u64(f.l), 1), oracle).singular();
            auto e = pair_exponent(n, p, f.l, singular, opt, oracle);
            f.determinate = e.has_value();
            f.predicted = -rho(f.l) * e.value_or(0);
        }
        if (f.predicted > 0) num *= pow_u(p, f.predicted);
        if (f.predicted < 0) den *= pow_u(p, -f.predicted);
        rep.factors.push_back(f);
    }

    Integer target = bhat.numerator();
    if (target < 0) target = -target;
    const Factorization fac = trial_factor(target);
    bool inside = fac.complete() && (fac.cofactor == 1 || fac.cofactor <= prime_bound);
    for (auto [q, e] : fac.small) inside = inside && q <= prime_bound;
    // The denominator is only fully covered once the bound reaches n + 1.
    if (inside) rep.numerator_verified = num == target && (prime_bound <= n || den == bhat.denominator());
    return rep;
}

std::vector<PllResult> pll_check(std::uint64_t p, const BernoulliModOracle& oracle) {
    std::vector<PllResult> out;
    for (std::uint64_t l : require_irregular(p, oracle)) {
        const std::uint64_t s2 = second_digit(p, l, oracle);
        out.push_back({l, s2, s2 == l});
    }
    return out;
}

}  // namespace kummer
