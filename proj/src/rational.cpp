#include "cubinv/rational.hpp"

#include <stdexcept>

namespace cubinv {

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s, 10));
        }
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace cubinv
