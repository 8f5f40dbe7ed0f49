#include "kfseq/iet.hpp"

#include <stdexcept>
#include <utility>

namespace kfseq::iet {

namespace {

GoldenNumber branch_shift(std::uint64_t k) {
    GoldenNumber s = alpha_pow(k);
    s += s;
    return k % 2 == 0 ? s - GoldenNumber{1} : s - GoldenNumber::alpha();
}

// Shared branch search over any exact comparison oracle.
// cmp(g) must return the sign of (x - g).
template <class CmpVs>
std::uint64_t locate_impl(CmpVs&& cmp) {
    if (cmp(GoldenNumber{0}) < 0 || cmp(GoldenNumber{1}) >= 0)
        throw std::domain_error("point outside [0,1)");
    if (cmp(alpha_pow(2)) < 0) return 1;

    const bool even_side = cmp(GoldenNumber::alpha()) >= 0;
    // Left endpoints increase with j on either side; x lies in the branch
    // of the largest j >= 1 whose left endpoint is <= x.
    auto at_or_right_of = [&](std::uint64_t j) {
        const GoldenNumber left =
            even_side ? GoldenNumber{1} - alpha_pow(2 * j)
                      : GoldenNumber::alpha() - alpha_pow(2 * j + 1);
        return cmp(left) >= 0;
    };
    std::uint64_t hi = 2;
    while (at_or_right_of(hi)) hi *= 2;
    std::uint64_t lo = hi / 2; // at_or_right_of(1) holds inside the region
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (at_or_right_of(mid) ? lo : hi) = mid;
    }
    return even_side ? 2 * lo : 2 * lo + 1;
}

// Smallest k >= 1 with alpha^k <= y locates y in the image tiling.
template <class CmpVs>
std::uint64_t locate_image_impl(CmpVs&& cmp) {
    if (cmp(GoldenNumber{0}) < 0 || cmp(GoldenNumber{1}) >= 0)
        throw std::domain_error("point outside [0,1)");
    if (cmp(GoldenNumber{0}) == 0)
        throw std::domain_error("0 has no preimage under the exchange");
    std::uint64_t hi = 1;
    while (cmp(alpha_pow(hi)) < 0) hi *= 2;
    if (hi == 1) return 1;
    std::uint64_t lo = hi / 2; // cmp(alpha^lo) < 0 here
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (cmp(alpha_pow(mid)) < 0 ? lo : hi) = mid;
    }
    return hi;
}

} // namespace

Branch branch_at(std::uint64_t k) {
    if (k == 0) throw std::domain_error("branch index starts at 1");
    if (k % 2 == 1)
        return {k, GoldenNumber::alpha() - alpha_pow(k),
                GoldenNumber::alpha() - alpha_pow(k + 2), branch_shift(k)};
    return {k, GoldenNumber{1} - alpha_pow(k), GoldenNumber{1} - alpha_pow(k + 2),
            branch_shift(k)};
}

bool endpoints_self_check(std::uint64_t max_k) {
    GoldenNumber odd_sum;  // sum of alpha^(2(j+1)), grows with the odd side
    GoldenNumber even_sum; // sum of alpha^(2j+1)
    for (std::uint64_t k = 1; k <= max_k; ++k) {
        const Branch br = branch_at(k);
        GoldenNumber lit_left, lit_right;
        if (k % 2 == 1) {
            lit_left = odd_sum;
            lit_right = odd_sum + alpha_pow(k + 1);
            odd_sum = lit_right;
        } else {
            lit_left = even_sum;
            lit_right = even_sum + alpha_pow(k + 1);
            even_sum = lit_right;
        }
        if (br.left != lit_left || br.right != lit_right) return false;
        // image law from the proof of the branch formulas
        const GoldenNumber img_left = br.left + br.shift;
        const GoldenNumber img_right = br.right + br.shift;
        if (img_left != alpha_pow(k)) return false;
        if (img_right != alpha_pow(k) + alpha_pow(k + 1)) return false;
    }
    return true;
}

std::uint64_t locate_branch(const GoldenNumber& x) {
    return locate_impl([&](const GoldenNumber& g) { return (x <=> g) == std::strong_ordering::less ? -1
                                                         : (x == g ? 0 : 1); });
}

GoldenNumber apply(const GoldenNumber& x) {
    return x + branch_shift(locate_branch(x));
}

GoldenNumber apply_inverse(const GoldenNumber& y) {
    const std::uint64_t k = locate_image_impl(
        [&](const GoldenNumber& g) { return (y - g).signum(); });
    return y - branch_shift(k);
}

namespace {

// sign of (num/den - g) with den > 0
int scaled_cmp(const ScaledPoint& x, const GoldenNumber& g) {
    return GoldenNumber{x.num.a - g.a * x.den, x.num.b - g.b * x.den}.signum();
}

} // namespace

std::uint64_t locate_branch(const ScaledPoint& x) {
    return locate_impl([&](const GoldenNumber& g) { return scaled_cmp(x, g); });
}

ScaledPoint apply(const ScaledPoint& x) {
    const GoldenNumber shift = branch_shift(locate_branch(x));
    return {{x.num.a + shift.a * x.den, x.num.b + shift.b * x.den}, x.den};
}

ScaledPoint apply_inverse(const ScaledPoint& y) {
    const std::uint64_t k =
        locate_image_impl([&](const GoldenNumber& g) { return scaled_cmp(y, g); });
    const GoldenNumber shift = branch_shift(k);
    return {{y.num.a - shift.a * y.den, y.num.b - shift.b * y.den}, y.den};
}

} // namespace kfseq::iet
