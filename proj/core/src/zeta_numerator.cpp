// Numerator of B_n by rounding tau_n * zeta(n), with tau_n = 2 n! V_n / (2 pi)^n.

#include <cmath>
#include <string>

#include <mpfr.h>

#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/primes.hpp"

namespace kummer {

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

double log2_tau(std::uint64_t n, const Integer& v) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    double log2v = std::log2(mant) + static_cast<double>(exp2);
    double nd = static_cast<double>(n);
    return 1.0 + log2v + (std::lgamma(nd + 1.0) - nd * std::log(2.0 * M_PI)) / std::log(2.0);
}

// tau_n at `prec` bits, with relative error below (n + 8) 2^(1-prec).
void compute_tau(Mpfr& out, std::uint64_t n, const Integer& v, mpfr_prec_t prec) {
    Mpfr two_pi(prec);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
    mpfr_pow_ui(two_pi.get(), two_pi.get(), n, MPFR_RNDN);
    Integer num;
    mpz_fac_ui(num.get_mpz_t(), n);
    num *= v;
    num *= 2;
    mpfr_set_z(out.get(), num.get_mpz_t(), MPFR_RNDN);
    mpfr_div(out.get(), out.get(), two_pi.get(), MPFR_RNDN);
}

// Tail of the Euler product beyond Q: sum_{m > Q} m^-n <= (Q+1)^-n (1 + (Q+1)/(n-1)).
double log2_tail(std::uint64_t n, std::uint64_t q) {
    double qd = static_cast<double>(q) + 1.0;
    return -static_cast<double>(n) * std::log2(qd) + std::log2(1.0 + qd / static_cast<double>(n - 1));
}

}  // namespace

Integer numerator_via_zeta(std::uint64_t n, unsigned guard_digits) {
    require(n >= 2 && n % 2 == 0, "index must be even and >= 2, got " + std::to_string(n));
    const Integer v = vsc_denominator(n);
    const double log2x = std::max(log2_tau(n, v), 1.0) + 1.0;  // zeta(n) <= 2
    const auto prec = static_cast<mpfr_prec_t>(
        std::ceil(log2x + guard_digits * std::log2(10.0) + 2.0 * std::log2(static_cast<double>(n) + 16.0)) + 16);

    std::uint64_t q_max = 2;
    while (log2x + log2_tail(n, q_max) > -4.0) ++q_max;
    const auto primes = primes_up_to(q_max);

    Mpfr x(prec);
    compute_tau(x, n, v, prec);
    Mpfr euler(prec), factor(prec);
    mpfr_set_ui(euler.get(), 1, MPFR_RNDN);
    for (std::uint64_t q : primes) {
        const auto drop = static_cast<mpfr_prec_t>(std::floor(static_cast<double>(n) * std::log2(static_cast<double>(q))));
        const mpfr_prec_t tp = std::max<mpfr_prec_t>(64, prec - drop + 8);
        Mpfr qn(tp);
        mpfr_set_ui(qn.get(), q, MPFR_RNDN);
        mpfr_pow_ui(qn.get(), qn.get(), n, MPFR_RNDN);
        mpfr_ui_div(qn.get(), 1, qn.get(), MPFR_RNDN);
        mpfr_ui_sub(factor.get(), 1, qn.get(), MPFR_RNDN);
        mpfr_mul(euler.get(), euler.get(), factor.get(), MPFR_RNDN);
    }
    mpfr_div(x.get(), x.get(), euler.get(), MPFR_RNDN);

    // Relative error: tau contributes n + 8 roundings, each Euler factor at most 6 more.
    const double k = static_cast<double>(primes.size());
    const double eps_log2 = std::log2(static_cast<double>(n) + 6.0 * k + 16.0) + 1.0 - static_cast<double>(prec);
    const double tail_log2 = log2_tail(n, q_max);
    const double bound = 1.01 * (std::exp2(log2x + eps_log2) + std::exp2(log2x + tail_log2));
    if (!(bound < 0.25))
        throw PrecisionError("zeta rounding for B_" + std::to_string(n) + " not certified (bound " +
                             std::to_string(bound) + ")");

    Integer u;
    mpfr_get_z(u.get_mpz_t(), x.get(), MPFR_RNDN);
    Mpfr dist(prec);
    mpfr_sub_z(dist.get(), x.get(), u.get_mpz_t(), MPFR_RNDN);
    if (std::fabs(mpfr_get_d(dist.get(), MPFR_RNDN)) > bound)
        throw PrecisionError("zeta rounding for B_" + std::to_string(n) + " landed off an integer");
    ensure(u > 0, "rounded numerator is not positive");
    return u;
}

Integer tau_floor(std::uint64_t n) {
    require(n >= 2 && n % 2 == 0, "index must be even and >= 2, got " + std::to_string(n));
    const Integer v = vsc_denominator(n);
    const double log2x = std::max(log2_tau(n, v), 1.0) + 1.0;
    const auto prec = static_cast<mpfr_prec_t>(std::ceil(log2x) + 96);
    Mpfr x(prec);
    compute_tau(x, n, v, prec);
    Integer f;
    mpfr_get_z(f.get_mpz_t(), x.get(), MPFR_RNDD);
    // The floor is wrong only if tau_n sits within the rounding error of an integer.
    Mpfr frac(prec);
    mpfr_sub_z(frac.get(), x.get(), f.get_mpz_t(), MPFR_RNDN);
    const double err = std::exp2(log2x + std::log2(static_cast<double>(n) + 8.0) + 1.0 - static_cast<double>(prec));
    const double fr = mpfr_get_d(frac.get(), MPFR_RNDN);
    if (fr < err || fr > 1.0 - err)
        throw PrecisionError("floor(tau_" + std::to_string(n) + ") is not certified");
    return f;
}

int tau_digit_agreement(std::uint64_t n) {
    const Integer u = numerator_via_zeta(n);
    require(u > 1, "digit agreement needs |numerator(B_n)| > 1");
    const std::string a = u.get_str(), b = tau_floor(n).get_str();
    if (a.size() != b.size()) return 0;
    int k = 0;
    while (static_cast<std::size_t>(k) < a.size() && a[k] == b[k]) ++k;
    return k;
}

}  // namespace kummer
