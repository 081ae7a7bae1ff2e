#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kummer/arith.hpp"
#include "kummer/rational.hpp"

namespace kummer {

// A p-adic integer known modulo p^k, stored as its residue in [0, p^k).
class PadicApprox {
public:
    PadicApprox(std::uint64_t p, int precision, const Integer& value);
    // Requires q to be p-integral.
    static PadicApprox from_rational(const Rational& q, std::uint64_t p, int precision);

    std::uint64_t prime() const { return p_; }
    int precision() const { return k_; }
    const Integer& residue() const { return r_; }
    const Integer& modulus() const { return m_; }

    // Valuation of the residue; infinite when the value is 0 mod p^k.
    Valuation valuation() const { return ord_p(r_, p_); }
    bool is_zero() const { return sgn(r_) == 0; }
    bool is_unit() const;
    std::uint64_t digit(int i) const;

    PadicApprox truncate(int k) const;
    PadicApprox inverse() const;
    // Exact division by p^e; the result is known to precision k - e.
    PadicApprox divide_by_p(int e = 1) const;

    PadicApprox operator-() const;
    friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator*(const PadicApprox& a, const Integer& b);
    // Divisor must be a unit.
    friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);

    friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.r_ == b.r_;
    }

private:
    std::uint64_t p_;
    int k_;
    Integer m_;
    Integer r_;
};

// psi_n(x): least nonnegative residue of x modulo p^n.
Integer psi_project(const PadicApprox& x, int n);

// Teichmueller representative of a modulo p^k, k in {2, 3}.
PadicApprox teichmuller(std::uint64_t a, std::uint64_t p, int k);

// D^r f(0) = sum_nu C(r,nu) (-1)^nu f(nu).
PadicApprox finite_difference(std::span<const PadicApprox> f, unsigned r);
Integer finite_difference(std::span<const Integer> f, unsigned r);

// C(x, j) mod p^m. x must carry m + ord_p(j!) digits.
PadicApprox padic_binomial(const PadicApprox& x, std::uint64_t j, int m);

}  // namespace kummer
