#pragma once

#include <cstdint>
#include <vector>

#include "kummer/arith.hpp"
#include "kummer/padic.hpp"
#include "kummer/pairs.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// zeta_p(1-n) = -(1 - p^(n-1)) B(n)/n mod p^k, for p-1 not dividing n.
PadicApprox zeta_p_value(const Integer& n, std::uint64_t p, int k,
                         const BernoulliModOracle& oracle = exact_oracle());

// T_{r,k}(x) = sum_{j=k}^r (-1)^(j+k) C(j,k) C(x,j)
Integer t_polynomial(unsigned r, unsigned k, const Integer& x);
// Result modulo p^m; x needs m + ord_p(r!) digits.
PadicApprox t_polynomial(unsigned r, unsigned k, const PadicApprox& x, int m);

// zeta_{p,s1}(s) = zeta_p(1 - (s1 + (p-1) s)) on nonnegative integers s.
struct ZetaContext {
    std::uint64_t p;
    std::uint64_t s1;  // even, in [2, p-3]
    int precision;

    ZetaContext(std::uint64_t p, std::uint64_t s1, int precision);
    Integer index(const Integer& s) const { return s1 + (p - 1) * s; }
    PadicApprox value(const Integer& s, const BernoulliModOracle& oracle = exact_oracle()) const;
    // zeta_{p,s1}(0 .. count-1), the smallest admissible indices
    std::vector<PadicApprox> window(unsigned count, const BernoulliModOracle& oracle = exact_oracle()) const;
};

// zeta_{p,s1}(s) mod p^r from the first r values: sum_{k<r} zeta(k) T_{r-1,k}(s).
PadicApprox zeta_pl_eval(const ZetaContext& ctx, const Integer& s, int r, const std::vector<PadicApprox>& window);
PadicApprox zeta_pl_eval(const ZetaContext& ctx, const PadicApprox& s, int r, const std::vector<PadicApprox>& window);

// Truncated expansion chi = s_2 + s_3 p + ... of the zero of zeta_{p,l}.
struct ChiZero {
    std::uint64_t p;
    std::uint64_t l;
    std::vector<std::uint64_t> digits;  // s_2 .. s_{n+1}

    int precision() const { return static_cast<int>(digits.size()); }
    Integer value() const { return from_base_p_digits(digits, p); }  // psi_n(chi)
};

// Stepwise Newton-like recursion on the interpolation polynomials; uses only
// zeta_{p,l}(0..n) mod p^(n+1).
ChiZero chi_zero(std::uint64_t p, std::uint64_t l, int n, const BernoulliModOracle& oracle = exact_oracle());
// chi_zero for moderate n, the lifting algorithm beyond min(p-2, 30) digits.
ChiZero chi_digits(std::uint64_t p, std::uint64_t l, int n, const BernoulliModOracle& oracle = exact_oracle());

// Mahler coefficients z_1..z_m of zeta_{p,l,n}, each mod p^precision.
struct MahlerCoeffs {
    std::uint64_t p;
    std::uint64_t l;
    unsigned order;
    Integer base_index;  // l_n, the order-n related pair
    std::vector<PadicApprox> z;
};

MahlerCoeffs mahler_coeffs(std::uint64_t p, std::uint64_t l, unsigned order, unsigned count, int precision,
                           const BernoulliModOracle& oracle = exact_oracle());

// zeta_{p,l}(0) == -sum_{v=1}^{r-1} p^v z_v C(chi, v) mod p^r
bool mahler_zero_identity(std::uint64_t p, std::uint64_t l, int r, const BernoulliModOracle& oracle = exact_oracle());

struct StrongKummer {
    Valuation difference_ord;  // ord_p(zeta(s) - zeta(t))
    std::int64_t expected_ord;  // 1 + ord_p(s - t)
    std::uint64_t quotient;     // (zeta(s) - zeta(t)) / (p (s - t)) mod p
    std::uint64_t expected_quotient;  // -Delta mod p
    bool holds() const {
        return difference_ord == Valuation(expected_ord) && quotient == expected_quotient;
    }
};

StrongKummer strong_kummer_check(std::uint64_t p, std::uint64_t l, const Integer& s, const Integer& t,
                                 const BernoulliModOracle& oracle = exact_oracle());

// zeta*_{p,0}(s) = -(1 - p^(s(p-1)-1)) p B_{s(p-1)} / (p-1), exact for s >= 0.
Rational zeta_star_p0(std::uint64_t p, std::uint64_t s);
// zeta_{p,0}(s) = -(1 - p^(n-1)) B_n / n with n = s (p-1), s >= 1.
Rational zeta_p0(std::uint64_t p, std::uint64_t s);

struct PoleCheck {
    std::uint64_t p;
    Valuation zeta_ord;          // ord_p zeta_{p,0}(s)
    std::int64_t expected_ord;   // -1 - ord_p(s)
    Rational star;               // zeta*_{p,0}(s)
    std::uint64_t star_mod_p;    // residue of zeta*_{p,0}(s)
    bool holds() const;  // orders agree and zeta* == -1 mod p
};

// Requires s >= 1, and s even when p = 2.
PoleCheck zeta_p0_pole_check(std::uint64_t p, std::uint64_t s);

struct CongruenceResult {
    bool holds;
    Valuation ord;   // valuation of the alternating sum
    int required;    // exponent it must reach
};

// sum_{v=0}^r C(r,v) (-1)^v (1 - p^(m+v w-1)) B(m+v w)/(m+v w) == 0 mod p^(n r), w = k phi(p^n)
CongruenceResult carlitz_congruence_check(std::uint64_t p, std::uint64_t m, unsigned n, unsigned r, unsigned k);
// Without Euler factors, for an order-n pair: m = l + j phi(p^n), modulus p^min(m-1, n(r-1)).
CongruenceResult carlitz_pair_check(const IrregularPair& pair, std::uint64_t j, unsigned r, unsigned k,
                                   const BernoulliModOracle& oracle = exact_oracle());

// B(n)/n mod p^k by evaluating the interpolation formula at s = (n - s1)/(p-1)
// from the first k values of zeta_{p,s1}. Needs p >= 5 and p-1 not dividing n.
class InterpolatingOracle final : public BernoulliModOracle {
public:
    explicit InterpolatingOracle(const BernoulliModOracle& base = exact_oracle()) : base_(base) {}
    PadicApprox divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const override;

private:
    const BernoulliModOracle& base_;
};

// Exact reduction up to a threshold index, interpolation above it.
class HybridOracle final : public BernoulliModOracle {
public:
    explicit HybridOracle(std::uint64_t exact_limit = 20000) : exact_limit_(exact_limit) {}
    PadicApprox divided_bernoulli_mod(const Integer& n, std::uint64_t p, int k) const override;

private:
    std::uint64_t exact_limit_;
    InterpolatingOracle interp_;
};

const HybridOracle& hybrid_oracle();

}  // namespace kummer
