#include "kummer/zeta.hpp"

#include <string>

#include "kummer/bernoulli.hpp"
#include "kummer/errors.hpp"
#include "kummer/primes.hpp"

namespace kummer {

namespace {

// (1 - p^(n-1)) mod p^k
Integer euler_factor(const Integer& n, std::uint64_t p, int k) {
    if (n - 1 >= k) return 1;
    return 1 - pow_u(p, to_u64(n - 1));
}

}  // namespace

PadicApprox zeta_p_value(const Integer& n, std::uint64_t p, int k, const BernoulliModOracle& oracle) {
    require(p >= 3 && is_prime(p), "zeta_p needs an odd prime");
    require(n >= 2 && n % 2 == 0, "zeta_p(1-n) needs even n >= 2");
    require(mod_u64(n, p - 1) != 0, "p-1 divides n: zeta_p(1-n) is not a p-adic integer");
    PadicApprox b = oracle.divided_bernoulli_mod(n, p, k);
    return -(b * euler_factor(n, p, k));
}

Integer t_polynomial(unsigned r, unsigned k, const Integer& x) {
    require(k <= r, "T_{r,k} needs k <= r");
    Integer acc = 0;
    for (unsigned j = k; j <= r; ++j) {
        Integer term = binomial(Integer(j), k) * binomial(x, j);
        if ((j + k) % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

PadicApprox t_polynomial(unsigned r, unsigned k, const PadicApprox& x, int m) {
    require(k <= r, "T_{r,k} needs k <= r");
    Integer acc = 0;
    for (unsigned j = k; j <= r; ++j) {
        Integer term = binomial(Integer(j), k) * padic_binomial(x, j, m).residue();
        if ((j + k) % 2 == 0) acc += term; else acc -= term;
    }
    return PadicApprox(x.prime(), m, acc);
}

ZetaContext::ZetaContext(std::uint64_t p_, std::uint64_t s1_, int precision_)
    : p(p_), s1(s1_), precision(precision_) {
    require(p >= 5 && is_prime(p), "zeta_{p,s1} needs a prime p >= 5");
    require(s1 >= 2 && s1 + 3 <= p && s1 % 2 == 0, "s1 must be even in [2, p-3]");
    require(precision >= 1, "precision must be >= 1");
}

PadicApprox ZetaContext::value(const Integer& s, const BernoulliModOracle& oracle) const {
    require(s >= 0, "zeta_{p,s1} is sampled at nonnegative integers");
    return zeta_p_value(index(s), p, precision, oracle);
}

std::vector<PadicApprox> ZetaContext::window(unsigned count, const BernoulliModOracle& oracle) const {
    std::vector<PadicApprox> out;
    out.reserve(count);
    for (unsigned j = 0; j < count; ++j) out.push_back(value(Integer(j), oracle));
    return out;
}

namespace {

void check_window(const ZetaContext& ctx, int r, const std::vector<PadicApprox>& window) {
    require(r >= 1, "evaluation precision must be >= 1");
    require(window.size() >= static_cast<std::size_t>(r), "window needs r values");
    for (int k = 0; k < r; ++k) {
        require(window[k].prime() == ctx.p, "window prime mismatch");
        if (window[k].precision() < r) throw PrecisionError("window value known only mod p^" +
                                                            std::to_string(window[k].precision()));
    }
}

}  // namespace

PadicApprox zeta_pl_eval(const ZetaContext& ctx, const Integer& s, int r, const std::vector<PadicApprox>& window) {
    check_window(ctx, r, window);
    Integer acc = 0;
    for (int k = 0; k < r; ++k) acc += window[k].residue() * t_polynomial(r - 1, k, s);
    return PadicApprox(ctx.p, r, acc);
}

PadicApprox zeta_pl_eval(const ZetaContext& ctx, const PadicApprox& s, int r, const std::vector<PadicApprox>& window) {
    check_window(ctx, r, window);
    require(s.prime() == ctx.p, "argument prime mismatch");
    Integer acc = 0;
    for (int k = 0; k < r; ++k) acc += window[k].residue() * t_polynomial(r - 1, k, s, r).residue();
    return PadicApprox(ctx.p, r, acc);
}

ChiZero chi_zero(std::uint64_t p, std::uint64_t l, int n, const BernoulliModOracle& oracle) {
    require(n >= 1, "chi precision must be >= 1");
    ZetaContext ctx(p, l, n + 1);
    // z1[k] = zeta_{p,l}(k) / p mod p^n
    std::vector<Integer> z1;
    z1.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        PadicApprox v = ctx.value(Integer(k), oracle);
        require(!v.is_unit(), "(" + std::to_string(p) + "," + std::to_string(l) + ") is not an irregular pair");
        z1.push_back(v.divide_by_p(1).residue());
    }
    const Integer P(p);
    const std::uint64_t d = mod_u64(z1[0] - z1[1], p);
    if (d == 0) throw SingularDeltaError("Delta of (" + std::to_string(p) + "," + std::to_string(l) + ") is singular");
    const Integer d_inv = mod_inverse(Integer(d), P);

    ChiZero chi{p, l, {}};
    Integer t = 0;
    for (int r = 1; r <= n; ++r) {
        const Integer mod = pow_u(p, static_cast<std::uint64_t>(r));
        Integer xi = 0;
        for (int k = 0; k <= r; ++k) xi += z1[k] * t_polynomial(r, k, t);
        xi = mod_floor(xi, mod);
        const Integer lead = pow_u(p, static_cast<std::uint64_t>(r - 1));
        ensure(xi % lead == 0, "xi_r not divisible by p^(r-1)");
        const std::uint64_t s = to_u64(mod_floor((xi / lead) * d_inv, P));
        chi.digits.push_back(s);
        t += s * lead;
    }
    return chi;
}

ChiZero chi_digits(std::uint64_t p, std::uint64_t l, int n, const BernoulliModOracle& oracle) {
    require(n >= 1, "chi precision must be >= 1");
    const int direct_limit = static_cast<int>(std::min<std::uint64_t>(p - 2, 30));
    if (n <= direct_limit) return chi_zero(p, l, n, oracle);
    DigitPair lifted = lift_with_shift(IrregularPair(p, Integer(l), 1), static_cast<unsigned>(n + 1), oracle);
    return ChiZero{p, l, std::vector<std::uint64_t>(lifted.digits.begin() + 1, lifted.digits.end())};
}

MahlerCoeffs mahler_coeffs(std::uint64_t p, std::uint64_t l, unsigned order, unsigned count, int precision,
                           const BernoulliModOracle& oracle) {
    require(order >= 1 && count >= 1 && precision >= 1, "Mahler coefficients need order, count, precision >= 1");
    IrregularPair root(p, Integer(l), 1);
    Integer base = order == 1 ? root.l : lift_with_shift(root, order, oracle).index();
    const Integer phi = phi_prime_power(p, order);
    const int n = static_cast<int>(order);
    const int work = precision + n * static_cast<int>(count);

    // f(j) = zeta_{p,l,n}(j) = p^-n zeta_p(1 - (l_n + j phi(p^n)))
    std::vector<Integer> f;
    f.reserve(count + 1);
    for (unsigned j = 0; j <= count; ++j) {
        PadicApprox v = zeta_p_value(base + j * phi, p, work, oracle);
        ensure(v.valuation() >= Valuation(n), "zeta value of the order-n pair is not divisible by p^n");
        f.push_back(v.divide_by_p(n).residue());
    }

    MahlerCoeffs out{p, l, order, base, {}};
    const std::uint64_t dp = delta(IrregularPair(p, base, order), oracle).value;
    for (unsigned nu = 1; nu <= count; ++nu) {
        Integer d = finite_difference(std::span<const Integer>(f.data(), nu + 1), nu);
        const int shift = n * static_cast<int>(nu - 1);
        PadicApprox dv(p, precision + shift, d);
        if (shift > 0 && dv.valuation() < Valuation(shift))
            throw ConsistencyError("D^" + std::to_string(nu) + " zeta_{p,l,n}(0) falls short of p^" +
                                   std::to_string(shift));
        PadicApprox z = dv.divide_by_p(shift);
        out.z.push_back(nu % 2 == 0 ? z : -z);
    }
    ensure(mod_u64(out.z[0].residue(), p) == (p - dp) % p, "z_1 does not match -Delta");
    return out;
}

bool mahler_zero_identity(std::uint64_t p, std::uint64_t l, int r, const BernoulliModOracle& oracle) {
    require(r >= 2, "identity needs r >= 2");
    auto mc = mahler_coeffs(p, l, 1, static_cast<unsigned>(r - 1), r - 1, oracle);
    const Integer chi = chi_digits(p, l, r, oracle).value();
    Integer rhs = 0;
    for (int nu = 1; nu < r; ++nu)
        rhs += pow_u(p, static_cast<std::uint64_t>(nu)) * mc.z[nu - 1].residue() * binomial(chi, static_cast<std::uint64_t>(nu));
    PadicApprox lhs = ZetaContext(p, l, r).value(Integer(0), oracle);
    return lhs == PadicApprox(p, r, -rhs);
}

StrongKummer strong_kummer_check(std::uint64_t p, std::uint64_t l, const Integer& s, const Integer& t,
                                 const BernoulliModOracle& oracle) {
    require(s >= 0 && t >= 0, "arguments must be nonnegative integers");
    require(s != t, "strong Kummer check needs s != t");
    const IrregularPair pair(p, Integer(l), 1);
    const std::uint64_t d = delta(pair, oracle).value;
    if (d == 0) throw SingularDeltaError("Delta of " + pair.str() + " is singular");
    const std::int64_t e = ord_p(Integer(s - t), p).value();
    const int k = static_cast<int>(e) + 2;
    ZetaContext ctx(p, l, k);
    PadicApprox diff = ctx.value(s, oracle) - ctx.value(t, oracle);
    StrongKummer out{diff.valuation(), 1 + e, 0, (p - d) % p};
    if (out.difference_ord == Valuation(1 + e)) {
        Integer st = Integer(s - t);
        strip_p(st, p);
        Integer q = diff.divide_by_p(static_cast<int>(1 + e)).residue() * mod_inverse(st, Integer(p));
        out.quotient = mod_u64(q, p);
    }
    return out;
}

Rational zeta_star_p0(std::uint64_t p, std::uint64_t s) {
    require(is_prime(p), "zeta*_{p,0} needs a prime");
    const std::uint64_t n = s * (p - 1);
    // 1 - p^(n-1), with p^-1 at n = 0
    Rational euler = n == 0 ? Rational(1) - Rational(Integer(1), Integer(p)) : Rational(1) - Rational(pow_u(p, n - 1));
    return -(euler * Rational(Integer(p)) * bernoulli(n) / Rational(Integer(p - 1)));
}

Rational zeta_p0(std::uint64_t p, std::uint64_t s) {
    require(is_prime(p), "zeta_{p,0} needs a prime");
    require(s >= 1, "zeta_{p,0} has its pole at s = 0");
    const std::uint64_t n = s * (p - 1);
    return -((Rational(1) - Rational(pow_u(p, n - 1))) * bernoulli(n) / Rational(from_u64(n)));
}

bool PoleCheck::holds() const { return zeta_ord == Valuation(expected_ord) && star_mod_p == p - 1; }

PoleCheck zeta_p0_pole_check(std::uint64_t p, std::uint64_t s) {
    require(s >= 1, "pole check needs s >= 1");
    require(p != 2 || s % 2 == 0, "for p = 2 the pole check needs even s");
    Rational z = zeta_p0(p, s);
    Rational star = zeta_star_p0(p, s);
    const std::int64_t expected = -1 - static_cast<std::int64_t>(ord_p(Integer(from_u64(s)), p).value());
    const std::uint64_t star_res = mod_u64(PadicApprox::from_rational(star, p, 1).residue(), p);
    return PoleCheck{p, ord_p(z, p), expected, star, star_res};
}

CongruenceResult carlitz_congruence_check(std::uint64_t p, std::uint64_t m, unsigned n, unsigned r, unsigned k) {
    require(p >= 3 && is_prime(p), "Carlitz congruence needs an odd prime");
    require(m >= 2 && m % 2 == 0 && m % (p - 1) != 0, "m must be even with p-1 not dividing m");
    require(n >= 1 && r >= 1 && k >= 1, "n, r, k must be positive");
    const int need = static_cast<int>(n * r);
    const std::uint64_t w = k * to_u64(phi_prime_power(p, n));
    Integer acc = 0;
    for (unsigned nu = 0; nu <= r; ++nu) {
        const std::uint64_t idx = m + nu * w;
        PadicApprox term = kummer::divided_bernoulli_mod(idx, p, need) * euler_factor(Integer(idx), p, need);
        Integer c = binomial(Integer(r), nu) * term.residue();
        if (nu % 2 == 0) acc += c; else acc -= c;
    }
    PadicApprox sum(p, need, acc);
    return CongruenceResult{sum.is_zero(), sum.valuation(), need};
}

CongruenceResult carlitz_pair_check(const IrregularPair& pair, std::uint64_t j, unsigned r, unsigned k,
                                    const BernoulliModOracle& oracle) {
    require(r >= 2 && k >= 1, "pair congruence needs r >= 2, k >= 1");
    const Integer phi = pair.phi();
    const Integer m = pair.l + j * phi;
    const Integer w = k * phi;
    const Integer cap = m - 1;
    const int need = static_cast<int>(std::min<Integer>(cap, Integer(pair.order * (r - 1))).get_si());
    if (need <= 0) return CongruenceResult{true, Valuation::infinite(), need};
    std::vector<Integer> terms;
    for (unsigned nu = 0; nu <= r; ++nu) {
        PadicApprox b = oracle.divided_bernoulli_mod(m + nu * w, pair.p, need + static_cast<int>(pair.order));
        require(b.valuation() >= Valuation(pair.order), pair.str() + " is not an irregular pair of the given order");
        terms.push_back(b.divide_by_p(static_cast<int>(pair.order)).residue());
    }
    PadicApprox sum(pair.p, need, finite_difference(std::span<const Integer>(terms), r));
    return CongruenceResult{sum.is_zero(), sum.valuation(), need};
}

PadicApprox InterpolatingOracle::divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const {
    require(p >= 5 && is_prime(p), "interpolation needs a prime p >= 5");
    require(n >= 2 && n % 2 == 0, "index must be even and >= 2");
    require(k >= 1, "precision must be >= 1");
    const std::uint64_t s1 = mod_u64(n, p - 1);
    require(s1 != 0, "p-1 divides n: B(n)/n is not p-integral");
    ZetaContext ctx(p, s1, k);
    const Integer s = (n - s1) / (p - 1);
    std::vector<PadicApprox> window;
    window.reserve(k);
    for (int j = 0; j < k; ++j) window.push_back(zeta_p_value(ctx.index(Integer(j)), p, k, base_));
    PadicApprox zeta = zeta_pl_eval(ctx, s, k, window);
    // B(n)/n = -zeta_p(1-n) / (1 - p^(n-1))
    PadicApprox euler(p, k, euler_factor(n, p, k));
    return -(zeta / euler);
}

PadicApprox HybridOracle::divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const {
    if (n <= exact_limit_) return exact_oracle().divided_bernoulli_mod(n, p, k);
    return interp_.divided_bernoulli_mod(n, p, k);
}

const HybridOracle& hybrid_oracle() {
    static const HybridOracle oracle;
    return oracle;
}

}  // namespace kummer
