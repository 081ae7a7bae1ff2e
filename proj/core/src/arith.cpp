#include "kummer/arith.hpp"

#include <limits>

#include "kummer/errors.hpp"

namespace kummer {

std::int64_t Valuation::value() const {
    ensure(!inf_, "value() of infinite valuation");
    return v_;
}

std::string Valuation::str() const { return inf_ ? "inf" : std::to_string(v_); }

Integer from_u64(std::uint64_t v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

bool fits_u64(const Integer& v) { return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& v) {
    require(fits_u64(v), "integer does not fit in 64 bits: " + v.get_str());
    std::uint64_t r = 0;
    mpz_export(&r, nullptr, -1, sizeof r, 0, 0, v.get_mpz_t());
    return r;
}

Integer pow_u(std::uint64_t base, std::uint64_t exp) { return pow_u(from_u64(base), exp); }

Integer pow_u(const Integer& base, std::uint64_t exp) {
    require(exp <= std::numeric_limits<unsigned long>::max(), "exponent too large");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    require(sgn(m) > 0, "modulus must be positive");
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::uint64_t mod_u64(const Integer& a, std::uint64_t m) { return to_u64(mod_floor(a, from_u64(m))); }

Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw PreconditionError(a.get_str() + " is not invertible modulo " + m.get_str());
    return mod_floor(r, m);
}

Integer binomial(const Integer& n, std::uint64_t k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

std::uint64_t strip_p(Integer& a, std::uint64_t p) {
    if (sgn(a) == 0) return 0;
    Integer pp = from_u64(p);
    return mpz_remove(a.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
}

Valuation ord_p(const Integer& a, std::uint64_t p) {
    require(p >= 2, "ord_p needs a prime p >= 2");
    if (sgn(a) == 0) return Valuation::infinite();
    Integer t = a;
    return Valuation(static_cast<std::int64_t>(strip_p(t, p)));
}

std::uint64_t ord_p_factorial(std::uint64_t j, std::uint64_t p) {
    std::uint64_t e = 0;
    for (std::uint64_t q = j / p; q > 0; q /= p) e += q;
    return e;
}

Integer phi_prime_power(std::uint64_t p, std::uint64_t n) {
    require(n >= 1, "phi(p^n) needs n >= 1");
    return from_u64(p - 1) * pow_u(p, n - 1);
}

std::vector<std::uint64_t> base_p_digits(const Integer& a, std::uint64_t p, std::size_t count) {
    require(sgn(a) >= 0, "digits of a negative integer");
    std::vector<std::uint64_t> out;
    out.reserve(count);
    Integer t = a;
    Integer pp = from_u64(p);
    Integer r;
    for (std::size_t i = 0; i < count; ++i) {
        mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t());
        out.push_back(to_u64(r));
    }
    return out;
}

Integer from_base_p_digits(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
    Integer r = 0;
    Integer pp = from_u64(p);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) r = r * pp + from_u64(*it);
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace kummer
