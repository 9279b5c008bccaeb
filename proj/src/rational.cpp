#include "ccn/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace ccn {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational operator+(Rational a, Rational b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(Rational a, Rational b) {
    return make_rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(Rational a, Rational b) {
    return make_rational(a.num * b.num, a.den * b.den);
}

bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
}

bool operator!=(Rational a, Rational b) { return !(a == b); }

std::string to_string(Rational r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

} // namespace ccn
