#pragma once

#include <compare>
#include <string>

#include "kummer/arith.hpp"

namespace kummer {

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q);

    // Parses "a" or "a/b".
    static Rational parse(const std::string& text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    const mpq_class& mpq() const { return q_; }
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Valuation ord_p(const Rational& q, std::uint64_t p);

// q with its p-adic valuation attached.
struct ValuedRational {
    ValuedRational(Rational v, std::uint64_t prime);
    Rational value;
    std::uint64_t p;
    Valuation ord;
};

}  // namespace kummer
