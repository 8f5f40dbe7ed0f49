#pragma once

#include "kfseq/golden.hpp"

#include <cstdint>

namespace kfseq::iet {

// One translation branch of the exchange: T(x) = x + shift on
// [left, right). Closed forms (k >= 1):
//   odd k:  [alpha - alpha^k, alpha - alpha^(k+2)),  shift = 2 alpha^k - alpha
//   even k: [1 - alpha^k,     1 - alpha^(k+2)),      shift = 2 alpha^k - 1
// Branch 1 is the odd form: [0, alpha^2) with shift alpha. Every branch
// has width alpha^(k+1) and image exactly [alpha^k, alpha^(k-1)).
struct Branch {
    std::uint64_t k = 0;
    GoldenNumber left;
    GoldenNumber right;
    GoldenNumber shift;
};

Branch branch_at(std::uint64_t k);

// Verifies the closed-form endpoints against the literal partial sums
// sum alpha^(2j+1) / sum alpha^(2j+2) for every k <= max_k.
bool endpoints_self_check(std::uint64_t max_k);

// Index of the branch containing x in [0,1). The domains accumulate at
// alpha (odd) and 1 (even); after the three-way region split the index is
// found by exponential plus binary search on the exact closed-form left
// endpoints, so the cost is logarithmic in the distance to the
// accumulation point. Throws std::domain_error outside [0,1).
std::uint64_t locate_branch(const GoldenNumber& x);

GoldenNumber apply(const GoldenNumber& x);

// Inverse via the image tiling [alpha^k, alpha^(k-1)). y = 0 has no
// preimage (the map is a bijection onto (0,1)) and is rejected.
GoldenNumber apply_inverse(const GoldenNumber& y);

// Exact orbit x, T(x), T^2(x), ...; constant memory beyond the current
// point.
class Orbit {
public:
    explicit Orbit(GoldenNumber start) : current_(std::move(start)) {}

    const GoldenNumber& value() const { return current_; }
    void advance() { current_ = apply(current_); }

private:
    GoldenNumber current_;
};

// A point num/den with a fixed positive integer denominator. Branch
// shifts have integer coefficients, so an orbit started at a rational
// point keeps its denominator; this gives exact orbits of arbitrary
// dyadic starting points without rational coefficient types.
struct ScaledPoint {
    GoldenNumber num;
    BigInt den = 1;

    friend bool operator==(const ScaledPoint&, const ScaledPoint&) = default;
};

std::uint64_t locate_branch(const ScaledPoint& x);
ScaledPoint apply(const ScaledPoint& x);
ScaledPoint apply_inverse(const ScaledPoint& y);

} // namespace kfseq::iet
