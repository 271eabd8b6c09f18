#pragma once

#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "blockcrit/error.hpp"

namespace blockcrit::exactalg {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt numerator_of(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRational& q) { return boost::multiprecision::denominator(q); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const BigRational& q) {
    BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

inline std::string to_string(const BigInt& z) { return z.str(); }

inline BigInt parse_int(const std::string& s) {
    if (s.empty()) throw ValidationError("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw ValidationError("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ValidationError("bad integer literal '" + s + "'");
    return BigInt(s);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("zero denominator");
    // mpq does not canonicalize a negative denominator on construction
    return den < 0 ? BigRational(BigInt(-num), BigInt(-den)) : BigRational(num, den);
}

inline BigRational parse_rational(const std::string& num, const std::string& den) {
    return make_rational(parse_int(num), parse_int(den));
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace blockcrit::exactalg
