#include "kummer/bernoulli.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "kummer/errors.hpp"
#include "kummer/primes.hpp"

namespace kummer {

namespace {

constexpr std::uint64_t kRecurrenceLimit = 300;
constexpr std::uint64_t kDirectSumLimit = 200000;
constexpr std::uint64_t kFaulhaberIndexLimit = 5000;

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

void check_even_index(std::uint64_t n) {
    require(n >= 2 && n % 2 == 0, "index must be even and >= 2, got " + std::to_string(n));
}

int expected_sign(std::uint64_t n) { return (n / 2) % 2 == 1 ? 1 : -1; }

}  // namespace

std::optional<Rational> BernoulliCache::get(std::uint64_t n) const {
    std::shared_lock lock(mu_);
    auto it = entries_.find(n);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void BernoulliCache::put(std::uint64_t n, const Rational& value) {
    check_even_index(n);
    require(!value.is_zero(), "B_" + std::to_string(n) + " = 0 cannot be cached");
    require(value.sign() == expected_sign(n), "B_" + std::to_string(n) + " has the wrong sign");
    require(value.denominator() == vsc_denominator(n),
            "B_" + std::to_string(n) + " denominator contradicts von Staudt-Clausen");
    std::unique_lock lock(mu_);
    auto [it, inserted] = entries_.emplace(n, value);
    if (inserted) {
        dirty_ = true;
    } else {
        ensure(it->second == value, "conflicting cache entries for B_" + std::to_string(n));
    }
}

std::size_t BernoulliCache::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return 0;
    std::string line;
    std::size_t count = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n_text, num_text, den_text;
        if (!std::getline(fields, n_text, '\t') || !std::getline(fields, num_text, '\t') ||
            !std::getline(fields, den_text))
            throw PreconditionError(file.string() + ":" + std::to_string(lineno) + ": malformed cache record");
        std::uint64_t n = 0;
        try {
            n = std::stoull(n_text);
        } catch (const std::exception&) {
            throw PreconditionError(file.string() + ":" + std::to_string(lineno) + ": bad index");
        }
        put(n, Rational(Integer(num_text), Integer(den_text)));
        ++count;
    }
    std::unique_lock lock(mu_);
    dirty_ = false;
    return count;
}

void BernoulliCache::save(const std::filesystem::path& file) const {
    std::shared_lock lock(mu_);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw PreconditionError("cannot write cache file " + tmp.string());
        for (const auto& [n, b] : entries_)
            out << n << '\t' << b.numerator().get_str() << '\t' << b.denominator().get_str() << '\n';
    }
    std::filesystem::rename(tmp, file);
}

std::size_t BernoulliCache::size() const {
    std::shared_lock lock(mu_);
    return entries_.size();
}

bool BernoulliCache::dirty() const {
    std::shared_lock lock(mu_);
    return dirty_;
}

void BernoulliCache::clear() {
    std::unique_lock lock(mu_);
    entries_.clear();
    dirty_ = false;
}

BernoulliCache& global_cache() {
    static BernoulliCache cache;
    return cache;
}

Rational bernoulli_recurrence(std::uint64_t n) {
    if (n == 0) return Rational(1);
    if (n == 1) return Rational(Integer(-1), Integer(2));
    if (n % 2 == 1) return Rational(0);
    const std::uint64_t m = n / 2;
    std::vector<Integer> t(m + 1);
    t[1] = 1;
    for (std::uint64_t k = 2; k <= m; ++k) t[k] = t[k - 1] * static_cast<unsigned long>(k - 1);
    for (std::uint64_t k = 2; k <= m; ++k)
        for (std::uint64_t j = k; j <= m; ++j)
            t[j] = t[j - 1] * static_cast<unsigned long>(j - k) + t[j] * static_cast<unsigned long>(j - k + 2);
    // B_2m = (-1)^(m-1) 2m T_m / (4^m (4^m - 1))
    Integer four_m = pow_u(std::uint64_t{4}, m);
    Rational b(Integer(t[m] * static_cast<unsigned long>(n)), four_m * (four_m - 1));
    return m % 2 == 1 ? b : -b;
}

Rational bernoulli_via_zeta(std::uint64_t n, unsigned guard_digits) {
    check_even_index(n);
    Integer u = numerator_via_zeta(n, guard_digits);
    Rational b(u, vsc_denominator(n));
    return expected_sign(n) > 0 ? b : -b;
}

Rational bernoulli(std::uint64_t n) { return bernoulli(n, global_cache()); }

Rational bernoulli(std::uint64_t n, BernoulliCache& cache) {
    if (n < 2 || n % 2 == 1) return bernoulli_recurrence(n);
    if (auto hit = cache.get(n)) return *hit;
    Rational b = n <= kRecurrenceLimit ? bernoulli_recurrence(n) : bernoulli_via_zeta(n);
    cache.put(n, b);
    return b;
}

Rational divided_bernoulli(std::uint64_t n) {
    check_even_index(n);
    return bernoulli(n) / Rational(from_u64(n));
}

Integer vsc_denominator(std::uint64_t n) {
    check_even_index(n);
    Integer d = 1;
    for (std::uint64_t q : divisors(n))
        if (is_prime(q + 1)) d *= from_u64(q + 1);
    return d;
}

Integer trivial_factor(std::uint64_t n) {
    check_even_index(n);
    Integer f = 1;
    auto fac = trial_factor(from_u64(n), 1u << 20);
    for (auto [q, e] : fac.small)
        if (n % (q - 1) != 0) f *= pow_u(q, e);
    if (fac.cofactor > 1) {
        // a u64 index has at most one prime factor above 2^20 left over
        ensure(fac.cofactor_kind == CofactorKind::ProbablePrime, "index factorization incomplete");
        if (n % to_u64(fac.cofactor - 1) != 0) f *= fac.cofactor;
    }
    return f;
}

Integer power_sum(std::uint64_t n, const Integer& m) {
    require(n >= 1, "power_sum needs n >= 1");
    require(m >= 1, "power_sum needs m >= 1");
    if (m > kDirectSumLimit) return power_sum_faulhaber(n, m);
    const std::uint64_t mm = to_u64(m);
    Integer s = 0, term;
    for (std::uint64_t nu = 1; nu < mm; ++nu) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(nu), static_cast<unsigned long>(n));
        s += term;
    }
    return s;
}

Integer power_sum_faulhaber(std::uint64_t n, const Integer& m) {
    require(n >= 1, "power_sum needs n >= 1");
    require(m >= 1, "power_sum needs m >= 1");
    require(n <= kFaulhaberIndexLimit, "Faulhaber evaluation limited to n <= " +
                                           std::to_string(kFaulhaberIndexLimit));
    // S_n(m) = 1/(n+1) sum_{k=0}^n C(n+1,k) B_k m^(n+1-k), with B_1 = -1/2
    Rational acc(0);
    Integer mpow = m;  // m^(n+1-k), built from k = n downwards
    for (std::uint64_t k = n + 1; k-- > 0;) {
        Rational b = bernoulli(k);
        if (!b.is_zero()) acc += b * Rational(Integer(binomial(from_u64(n + 1), k) * mpow));
        mpow *= m;
    }
    acc /= Rational(from_u64(n + 1));
    ensure(acc.is_integer(), "Faulhaber sum is not an integer");
    return acc.numerator();
}

PadicApprox divided_bernoulli_mod(std::uint64_t n, std::uint64_t p, int k) {
    check_even_index(n);
    require(p % 2 == 1 && is_prime(p), "modulus base must be an odd prime, got " + std::to_string(p));
    require(n % (p - 1) != 0, "B_" + std::to_string(n) + "/" + std::to_string(n) + " is not " +
                                  std::to_string(p) + "-integral");
    return PadicApprox::from_rational(divided_bernoulli(n), p, k);
}

}  // namespace kummer
