#include "kummer/rational.hpp"

#include "kummer/errors.hpp"

namespace kummer {

Rational::Rational(const Integer& num, const Integer& den) {
    require(sgn(den) != 0, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    require(sgn(q_.get_den()) != 0, "zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    Integer num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = Integer(text);
        } else {
            num = Integer(text.substr(0, slash));
            den = Integer(text.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw PreconditionError("not a rational number: '" + text + "'");
    }
    return Rational(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), "division by zero");
    q_ /= o.q_;
    return *this;
}

Valuation ord_p(const Rational& q, std::uint64_t p) {
    if (q.is_zero()) return Valuation::infinite();
    return Valuation(ord_p(q.numerator(), p).value() - ord_p(q.denominator(), p).value());
}

ValuedRational::ValuedRational(Rational v, std::uint64_t prime)
    : value(std::move(v)), p(prime), ord(ord_p(value, prime)) {}

}  // namespace kummer
