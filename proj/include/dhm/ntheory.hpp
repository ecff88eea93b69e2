#pragma once

#include "dhm/nat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dhm {

// Arithmetic context for one prime q with q = 5 (mod 8).
//
// q decomposes as q = s^2 + 4t^2, uniquely up to the signs of s and t.
// We pin s = 1 (mod 4), and force t >= 1 by relabeling the quartic classes
// (swapping D1 and D3, i.e. replacing theta by a power congruent to
// 3 mod 4) whenever the recovered t comes out negative.
struct PrimeParams {
    std::uint64_t q = 0;
    std::uint64_t f = 0;      // (q-1)/4, the size of each quartic class
    std::uint64_t m = 0;      // (q+3)/8, so q = 8m-3
    std::uint64_t theta = 0;  // primitive root fixing the class labels
    long long s = 0;          // q = s^2 + 4t^2 with s = 1 (mod 4)
    long long t = 0;          // normalized to t >= 1
    int k = 0;                // class index of 2, always 1 or 3
    bool relabeled = false;   // D1/D3 were swapped to make t positive
};

// Exact for n < 2^64 (Miller-Rabin with a witness set proven deterministic
// there). Above that the test is probabilistic with error < 2^-128.
// Throws std::domain_error for n < 2.
bool is_prime(const Nat& n);

// base^exp mod modulus. Throws std::domain_error if modulus < 2.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

// Throws std::domain_error if both arguments are zero.
Nat big_gcd(const Nat& a, const Nat& b);

// Smallest primitive root of F_q. Throws std::domain_error if q is not prime.
std::uint64_t find_generator(std::uint64_t q);

// Full parameter discovery for q = 5 (mod 8): generator, (s,t) recovered from
// the brute-force cyclotomic table with t normalized positive, and the class
// index k of 2. An explicit theta pins the class labels for reproducibility;
// it must be a primitive root (validated), and is still subject to the
// t-normalization swap.
PrimeParams build_params(std::uint64_t q,
                         std::optional<std::uint64_t> theta_override = std::nullopt);

// Primes q = 5 (mod 8) with q <= limit, ascending.
std::vector<std::uint64_t> primes_5_mod_8(std::uint64_t limit);

}  // namespace dhm
