#pragma once

#include "dhm/cyclotomy.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dhm {

// Residue in Z_(2^N - 1) for even N. The representatives 0 and 2^N - 1 name
// the same class; 0 is canonical, so value always lies in [0, 2^N - 2].
class RingElement {
public:
    RingElement() = default;
    RingElement(std::uint64_t n, const Nat& canonical_value);

    // Reduction by folding high bits onto low bits (2^N == 1 in this ring).
    // Bit-exact equal to the naive remainder; the test suite holds it to that.
    static Nat fold(std::uint64_t n, Nat value);

    // Canonicalize a non-negative value.
    static RingElement reduce(std::uint64_t n, const Nat& value);

    // Canonicalize any signed integer.
    static RingElement from_signed(std::uint64_t n, const Nat& value);

    std::uint64_t n() const { return n_; }
    const Nat& value() const { return value_; }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend bool operator==(const RingElement& a, const RingElement& b) = default;

private:
    std::uint64_t n_ = 0;
    Nat value_;
};

// 2^N - 1.
Nat ring_modulus(std::uint64_t n);

// The four Gauss periods eta_lambda = sum of 4^i over i in D_lambda, taken in
// Z_(2^N - 1) with N = 2q, plus the quadratic Gauss sum
// G = eta_0 - eta_1 + eta_2 - eta_3.
struct GaussPeriodSet {
    PrimeParams params;
    std::array<RingElement, 4> eta;
    RingElement gauss_sum;
};

GaussPeriodSet gauss_periods(const PrimeParams& params, const CyclotomicTable& table);

// One failed exact identity; lambda/mu/shift are -1 when not applicable.
struct RingCheckFailure {
    std::string identity;
    int lambda = -1;
    int mu = -1;
    int shift = -1;
};

// G^2 == q - (4^q - 1)/3.
std::vector<RingCheckFailure> gauss_sum_square_failures(const GaussPeriodSet& gps);

// eta_lambda * eta_mu == (q-1)/4 * [lambda == mu+2]
//                        + sum_nu (lambda-nu+2, mu-nu) * eta_nu
// over all 16 pairs, using the brute-force counts. With include_shifts, the
// same relation is re-checked with every eta index advanced by i = 1..3.
std::vector<RingCheckFailure> period_product_failures(const GaussPeriodSet& gps,
                                                      const CyclotomicTable& table,
                                                      bool include_shifts = false);

// The four 16-scaled product families (square, next, opposite, previous
// neighbor), expressed through the closed-form constants and (s,t).
std::vector<RingCheckFailure> scaled_product_failures(const GaussPeriodSet& gps,
                                                      const PrimeParams& params);

// The four difference-square identities tying (eta_i - eta_j)^2 to s, t and G.
std::vector<RingCheckFailure> difference_square_failures(const GaussPeriodSet& gps,
                                                         const PrimeParams& params);

bool check_gauss_sum_square(const GaussPeriodSet& gps);
bool check_period_products(const GaussPeriodSet& gps, const CyclotomicTable& table);
bool check_scaled_products(const GaussPeriodSet& gps, const PrimeParams& params);
bool check_difference_squares(const GaussPeriodSet& gps, const PrimeParams& params);

}  // namespace dhm
