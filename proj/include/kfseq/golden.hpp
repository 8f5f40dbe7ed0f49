#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace kfseq {

using BigInt = boost::multiprecision::cpp_int;

// An element a + b*alpha of the ring Z[alpha], where alpha = (sqrt(5)-1)/2
// is the inverse golden ratio, the root in (0,1) of alpha^2 = 1 - alpha.
//
// The pair (a, b) is the canonical representation: two values are equal
// iff their coefficient pairs are equal, so equality is the defaulted
// pairwise comparison and needs no normalization. Coefficients are
// arbitrary precision; along orbits they grow like Fibonacci numbers and
// leave the 64-bit range near step 92.
//
// Ordering is the real order of a + b*(sqrt(5)-1)/2, decided by integer
// case analysis only (see signum), never by floating point.
struct GoldenNumber {
    BigInt a{}; // unit coefficient
    BigInt b{}; // alpha coefficient

    GoldenNumber() = default;
    GoldenNumber(BigInt unit) : a(std::move(unit)) {}
    GoldenNumber(int unit) : a(unit) {}
    GoldenNumber(long long unit) : a(unit) {}
    GoldenNumber(BigInt unit, BigInt alpha_coeff)
        : a(std::move(unit)), b(std::move(alpha_coeff)) {}

    static GoldenNumber alpha() { return {0, 1}; }

    // Sign of the embedded real value: -1, 0 or +1.
    //
    // 2(a + b*alpha) = s + b*sqrt(5) with s = 2a - b, so the sign follows
    // from the signs of s and b, comparing s^2 against 5 b^2 when they
    // disagree. s^2 = 5 b^2 forces s = b = 0 (sqrt(5) is irrational).
    int signum() const {
        BigInt s = 2 * a - b;
        const int ss = s.sign();
        const int bs = b.sign();
        if (ss == 0 && bs == 0) return 0;
        if (ss >= 0 && bs >= 0) return 1;
        if (ss <= 0 && bs <= 0) return -1;
        const bool s_wins = s * s > 5 * b * b;
        if (ss > 0) return s_wins ? 1 : -1;
        return s_wins ? -1 : 1;
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const GoldenNumber&, const GoldenNumber&) = default;

    friend std::strong_ordering operator<=>(const GoldenNumber& lhs,
                                            const GoldenNumber& rhs) {
        const int s = GoldenNumber{lhs.a - rhs.a, lhs.b - rhs.b}.signum();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    GoldenNumber& operator+=(const GoldenNumber& rhs) {
        a += rhs.a;
        b += rhs.b;
        return *this;
    }
    GoldenNumber& operator-=(const GoldenNumber& rhs) {
        a -= rhs.a;
        b -= rhs.b;
        return *this;
    }
    // (a1 + b1 A)(a2 + b2 A) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 - b1 b2) A,
    // reducing A^2 = 1 - A.
    GoldenNumber& operator*=(const GoldenNumber& rhs) {
        BigInt na = a * rhs.a + b * rhs.b;
        BigInt nb = a * rhs.b + rhs.a * b - b * rhs.b;
        a = std::move(na);
        b = std::move(nb);
        return *this;
    }

    friend GoldenNumber operator+(GoldenNumber lhs, const GoldenNumber& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GoldenNumber operator-(GoldenNumber lhs, const GoldenNumber& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend GoldenNumber operator*(GoldenNumber lhs, const GoldenNumber& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend GoldenNumber operator-(const GoldenNumber& x) {
        return {-x.a, -x.b};
    }
};

// (F_n, F_{n+1}) with F_0 = 0, F_1 = 1, by fast doubling.
std::pair<BigInt, BigInt> fibonacci_pair(std::uint64_t n);

// alpha^n in closed form: alpha^n = (-1)^n (F_{n-1} - F_n alpha).
// Agrees with the n-fold product of alpha (tested exhaustively).
GoldenNumber alpha_pow(std::uint64_t n);

// Correctly rounded (half-even) decimal rendering with `digits` fractional
// digits; alpha is evaluated with guard precision that covers the
// coefficient magnitudes. Display only -- nothing downstream consumes it.
std::string to_decimal(const GoldenNumber& x, unsigned digits);

// Double approximation via 192-bit fixed point; cancellation between the
// two coefficients happens exactly before the final conversion.
double to_double(const GoldenNumber& x);

// Canonical text form `a+b*alpha` (e.g. `-1+2*alpha`, `0+0*alpha`).
// Round-trips bit-exactly through parse_exact_text.
std::string to_exact_text(const GoldenNumber& x);

// Accepts the canonical form plus the abbreviations `a` and `[+-]b*alpha`.
// Throws std::invalid_argument on malformed input.
GoldenNumber parse_exact_text(std::string_view text);

// A value (num / den) in Q + Q*alpha with a common integer denominator;
// normalized so den > 0 and gcd(num.a, num.b, den) = 1. Discrepancy values
// live here: counts are integers, lengths are in Z[alpha], so N*D is a
// GoldenNumber and D itself has denominator N.
struct GoldenFraction {
    GoldenNumber num;
    BigInt den = 1;

    friend bool operator==(const GoldenFraction&, const GoldenFraction&) = default;
    friend std::strong_ordering operator<=>(const GoldenFraction& lhs,
                                            const GoldenFraction& rhs) {
        // denominators are positive, so cross-multiplication preserves order
        return GoldenNumber{lhs.num.a * rhs.den, lhs.num.b * rhs.den} <=>
               GoldenNumber{rhs.num.a * lhs.den, rhs.num.b * lhs.den};
    }
};

GoldenFraction make_golden_fraction(GoldenNumber num, BigInt den);
double to_double(const GoldenFraction& f);
std::string to_decimal(const GoldenFraction& f, unsigned digits);
std::string to_exact_text(const GoldenFraction& f); // "(a+b*alpha)/den"

} // namespace kfseq
