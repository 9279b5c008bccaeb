#pragma once

#include <string>

namespace ccn {

// Exact rational, always reduced with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational make_rational(long long num, long long den = 1);

Rational operator+(Rational a, Rational b);
Rational operator-(Rational a, Rational b);
Rational operator*(Rational a, Rational b);
bool operator==(Rational a, Rational b);
bool operator!=(Rational a, Rational b);

inline bool is_integral(Rational r) { return r.den == 1; }

// "p" when integral, "p/q" otherwise.
std::string to_string(Rational r);

} // namespace ccn
