#include "kummer/padic.hpp"

#include <algorithm>
#include <string>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

void check_compatible(const PadicApprox& a, const PadicApprox& b) {
    require(a.prime() == b.prime(), "p-adic operands with different primes");
}

}  // namespace

PadicApprox::PadicApprox(std::uint64_t p, int precision, const Integer& value)
    : p_(p), k_(precision), m_(pow_u(p, static_cast<std::uint64_t>(std::max(precision, 0)))) {
    require(p >= 2, "p-adic prime must be >= 2");
    require(precision >= 1, "p-adic precision must be >= 1");
    r_ = mod_floor(value, m_);
}

PadicApprox PadicApprox::from_rational(const Rational& q, std::uint64_t p, int precision) {
    Integer den = q.denominator();
    require(den % p != 0, "rational " + q.str() + " is not " + std::to_string(p) + "-integral");
    PadicApprox num(p, precision, q.numerator());
    return PadicApprox(p, precision, num.r_ * mod_inverse(den, num.m_));
}

bool PadicApprox::is_unit() const { return r_ % p_ != 0; }

std::uint64_t PadicApprox::digit(int i) const {
    require(i >= 0 && i < k_, "digit index outside known precision");
    return base_p_digits(r_, p_, static_cast<std::size_t>(i) + 1).back();
}

PadicApprox PadicApprox::truncate(int k) const {
    require(k >= 1 && k <= k_, "cannot truncate to precision " + std::to_string(k) +
                                   " from " + std::to_string(k_));
    return PadicApprox(p_, k, r_);
}

PadicApprox PadicApprox::inverse() const {
    require(is_unit(), "inverse of a non-unit");
    return PadicApprox(p_, k_, mod_inverse(r_, m_));
}

PadicApprox PadicApprox::divide_by_p(int e) const {
    require(e >= 0, "negative exponent");
    if (e == 0) return *this;
    if (e >= k_) throw PrecisionError("dividing by p^" + std::to_string(e) + " exhausts precision " +
                                      std::to_string(k_));
    Integer pe = pow_u(p_, static_cast<std::uint64_t>(e));
    if (r_ % pe != 0)
        throw PrecisionError("residue not divisible by p^" + std::to_string(e));
    Integer q = r_ / pe;
    return PadicApprox(p_, k_ - e, q);
}

PadicApprox PadicApprox::operator-() const { return PadicApprox(p_, k_, -r_); }

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    check_compatible(a, b);
    return PadicApprox(a.p_, std::min(a.k_, b.k_), a.r_ + b.r_);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) {
    check_compatible(a, b);
    return PadicApprox(a.p_, std::min(a.k_, b.k_), a.r_ - b.r_);
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    check_compatible(a, b);
    return PadicApprox(a.p_, std::min(a.k_, b.k_), a.r_ * b.r_);
}

PadicApprox operator*(const PadicApprox& a, const Integer& b) { return PadicApprox(a.p_, a.k_, a.r_ * b); }

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) { return a * b.inverse(); }

Integer psi_project(const PadicApprox& x, int n) {
    require(n >= 1, "psi_n needs n >= 1");
    if (x.precision() < n)
        throw PrecisionError("psi_" + std::to_string(n) + " of a value known to precision " +
                             std::to_string(x.precision()));
    return mod_floor(x.residue(), pow_u(x.prime(), static_cast<std::uint64_t>(n)));
}

PadicApprox teichmuller(std::uint64_t a, std::uint64_t p, int k) {
    require(p % 2 == 1, "teichmuller needs an odd prime");
    require(a > 0 && a < p, "teichmuller argument must lie in (0, p)");
    require(k == 2 || k == 3, "teichmuller precision must be 2 or 3");
    Integer ap = pow_u(a, p);
    if (k == 2) return PadicApprox(p, 2, ap);
    return PadicApprox(p, 3, ap + from_u64(p) * (ap - from_u64(a)));
}

PadicApprox finite_difference(std::span<const PadicApprox> f, unsigned r) {
    require(f.size() >= r + 1, "finite difference of order r needs r+1 values");
    const std::uint64_t p = f[0].prime();
    const int k = f[0].precision();
    Integer acc = 0;
    for (unsigned nu = 0; nu <= r; ++nu) {
        require(f[nu].prime() == p && f[nu].precision() == k,
                "finite difference needs values with equal prime and precision");
        Integer term = binomial(Integer(r), nu) * f[nu].residue();
        if (nu % 2 == 0) acc += term; else acc -= term;
    }
    return PadicApprox(p, k, acc);
}

Integer finite_difference(std::span<const Integer> f, unsigned r) {
    require(f.size() >= r + 1, "finite difference of order r needs r+1 values");
    Integer acc = 0;
    for (unsigned nu = 0; nu <= r; ++nu) {
        Integer term = binomial(Integer(r), nu) * f[nu];
        if (nu % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

PadicApprox padic_binomial(const PadicApprox& x, std::uint64_t j, int m) {
    const std::uint64_t p = x.prime();
    require(m >= 1, "target precision must be >= 1");
    const std::uint64_t e = ord_p_factorial(j, p);
    const int work = m + static_cast<int>(e);
    if (x.precision() < work)
        throw PrecisionError("C(x," + std::to_string(j) + ") mod p^" + std::to_string(m) +
                             " needs x to precision " + std::to_string(work) + ", have " +
                             std::to_string(x.precision()));
    Integer mod_work = pow_u(p, static_cast<std::uint64_t>(work));
    Integer prod = 1, unit_fact = 1;
    for (std::uint64_t i = 0; i < j; ++i) {
        prod = mod_floor(prod * (x.residue() - from_u64(i)), mod_work);
        Integer f = from_u64(i + 1);
        strip_p(f, p);
        unit_fact = mod_floor(unit_fact * f, mod_work);
    }
    // prod = p^e * (unit part of j!) * C(x, j) mod p^work
    Integer pe = pow_u(p, e);
    ensure(prod % pe == 0, "falling factorial lost its p-part");
    PadicApprox q(p, m, prod / pe);
    return q * mod_inverse(unit_fact, q.modulus());
}

}  // namespace kummer
