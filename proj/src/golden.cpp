#include "kfseq/golden.hpp"

#include "kfseq/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace kfseq {

namespace mp = boost::multiprecision;

unsigned level_cap() {
    if (const char* env = std::getenv("KFSEQ_MAX_LEVEL")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 25;
}

std::pair<BigInt, BigInt> fibonacci_pair(std::uint64_t n) {
    if (n == 0) return {0, 1};
    auto [f, g] = fibonacci_pair(n >> 1); // (F_k, F_{k+1})
    BigInt c = f * (2 * g - f);           // F_{2k}
    BigInt d = f * f + g * g;             // F_{2k+1}
    if (n & 1) return {d, c + d};
    return {c, d};
}

GoldenNumber alpha_pow(std::uint64_t n) {
    if (n == 0) return GoldenNumber{1};
    auto [f_nm1, f_n] = fibonacci_pair(n - 1); // (F_{n-1}, F_n)
    if (n % 2 == 0) return {f_nm1, -f_n};
    return {-f_nm1, f_n};
}

namespace {

BigInt pow10(unsigned p) {
    return mp::pow(BigInt(10), p);
}

// floor(alpha * 10^p). With S = floor(sqrt(5) * 10^p) the value
// (S - 10^p) >> 1 is the exact floor of (sqrt(5)-1)/2 * 10^p.
BigInt alpha_scaled_pow10(unsigned p) {
    BigInt s = mp::sqrt(BigInt(5) * pow10(2 * p));
    return (s - pow10(p)) >> 1;
}

unsigned decimal_digits(const BigInt& v) {
    unsigned d = 1;
    BigInt t = mp::abs(v);
    while (t >= 10) {
        t /= 10;
        ++d;
    }
    return d;
}

// Renders magnitude/10^p (magnitude >= 0 up to small negative noise from
// the guard approximation) to `digits` fractional digits, half-even.
std::string render_scaled(BigInt magnitude, unsigned p, unsigned digits, bool negative) {
    if (magnitude < 0) magnitude = 0;
    const BigInt step = pow10(p - digits);
    BigInt q = magnitude / step;
    const BigInt r = magnitude % step;
    const BigInt twice = 2 * r;
    if (twice > step || (twice == step && mp::bit_test(q, 0))) ++q;

    std::string body = q.str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, 1, '.');
    if (negative && q != 0) body.insert(0, 1, '-');
    return body;
}

// Guarded integer scaling of a + b*alpha by 10^p; error below |b| + 1 units.
BigInt scale_value(const GoldenNumber& x, unsigned p) {
    return x.a * pow10(p) + x.b * alpha_scaled_pow10(p);
}

} // namespace

std::string to_decimal(const GoldenNumber& x, unsigned digits) {
    if (digits == 0) throw std::invalid_argument("to_decimal: digits must be >= 1");
    const bool negative = x.signum() < 0;
    const GoldenNumber mag = negative ? -x : x;
    const unsigned p = digits + 8 + decimal_digits(mag.b);
    return render_scaled(scale_value(mag, p), p, digits, negative);
}

double to_double(const GoldenNumber& x) {
    // floor(alpha * 2^192); same floor-shift identity as the decimal scale
    static const BigInt alpha_fixed = [] {
        BigInt s = mp::sqrt(BigInt(5) << 384);
        return (s - (BigInt(1) << 192)) >> 1;
    }();
    BigInt fixed = (x.a << 192) + x.b * alpha_fixed;
    return std::ldexp(fixed.convert_to<double>(), -192);
}

std::string to_exact_text(const GoldenNumber& x) {
    std::string out = x.a.str();
    out += x.b < 0 ? '-' : '+';
    out += mp::abs(x.b).str();
    out += "*alpha";
    return out;
}

namespace {

BigInt parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("non-digit in integer");
    BigInt v{std::string(s.substr(i))};
    return s[0] == '-' ? BigInt(-v) : v;
}

} // namespace

GoldenNumber parse_exact_text(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty exact value");

    constexpr std::string_view suffix = "*alpha";
    if (s.size() >= suffix.size() &&
        std::string_view(s).substr(s.size() - suffix.size()) == suffix) {
        std::string_view body = std::string_view(s).substr(0, s.size() - suffix.size());
        // split at the last sign that separates two terms (never position 0)
        std::size_t split = std::string_view::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos)
            return {0, parse_int(body)};
        return {parse_int(body.substr(0, split)), parse_int(body.substr(split))};
    }
    return {parse_int(s), 0};
}

GoldenFraction make_golden_fraction(GoldenNumber num, BigInt den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    BigInt g = mp::gcd(mp::gcd(mp::abs(num.a), mp::abs(num.b)), den);
    if (g > 1) {
        num.a /= g;
        num.b /= g;
        den /= g;
    }
    return {std::move(num), std::move(den)};
}

double to_double(const GoldenFraction& f) {
    return to_double(f.num) / f.den.convert_to<double>();
}

std::string to_decimal(const GoldenFraction& f, unsigned digits) {
    if (digits == 0) throw std::invalid_argument("to_decimal: digits must be >= 1");
    const int s = f.num.signum();
    const GoldenNumber mag = s < 0 ? -f.num : f.num;
    const unsigned p = digits + 8 + decimal_digits(mag.b);
    // nearest division keeps the guard error within one unit
    BigInt scaled = (scale_value(mag, p) + f.den / 2) / f.den;
    return render_scaled(std::move(scaled), p, digits, s < 0);
}

std::string to_exact_text(const GoldenFraction& f) {
    return "(" + to_exact_text(f.num) + ")/" + f.den.str();
}

} // namespace kfseq
