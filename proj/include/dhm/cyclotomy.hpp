#pragma once

#include "dhm/ntheory.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace dhm {

// Quartic cyclotomic structure of F_q: the four classes D_lambda = theta^lambda <theta^4>,
// a dense residue -> class map, and the 4x4 table of counts
// (i,j) = |(D_i + 1) n D_j|, tallied by brute force.
struct CyclotomicTable {
    std::uint64_t q = 0;
    std::uint64_t theta = 0;
    std::vector<int> class_of;  // indexed by residue; class_of[0] = -1
    std::array<std::vector<std::uint64_t>, 4> classes;
    std::array<std::array<std::uint64_t, 4>, 4> numbers;
};

// The five distinct values the count table takes, scaled by 16:
//   A    = q - 7 + 2s        at (0,0), (2,2), (2,0)
//   B    = q + 1 + 2s - 8t   at (0,1), (1,3), (3,2)
//   Bbar = q + 1 + 2s + 8t   at (1,2), (0,3), (3,1)
//   C    = q + 1 - 6s        at (0,2)
//   Dnum = q - 3 - 2s        at the remaining six slots
struct ClosedFormConstants {
    long long A = 0;
    long long B = 0;
    long long Bbar = 0;
    long long C = 0;
    long long Dnum = 0;
};

// Classes, inverse map and brute-force counts for an arbitrary primitive
// root theta (no t-normalization applied).
CyclotomicTable build_table(std::uint64_t q, std::uint64_t theta);

// Same, driven by validated params (uses params.theta).
CyclotomicTable build_classes(const PrimeParams& params);

// |(D_i + 1) n D_j| counted directly; a + 1 = 0 contributes nothing.
std::uint64_t cyclotomic_number_bruteforce(const CyclotomicTable& table, int i, int j);

// Requires q = s^2 + 4t^2 with s = 1 (mod 4); every constant must come out
// non-negative and divisible by 16 (consistency_error otherwise).
ClosedFormConstants closed_form_numbers(std::uint64_t q, long long s, long long t);

// Which of the five constants sits at slot (i,j), as the 16-scaled value.
long long expected_scaled_number(const ClosedFormConstants& c, int i, int j);

// Inverts the closed form against the brute-force counts:
//   s = (16*(0,0) - q + 7) / 2,   t = (0,3) - (0,1).
// t may be negative (it depends on the generator); callers normalize.
std::pair<long long, long long> recover_st(const CyclotomicTable& table);

// +1 if x lies in D_0 u D_2, -1 otherwise. Throws std::domain_error on x = 0 (mod q).
int quadratic_character(const CyclotomicTable& table, std::uint64_t x);

}  // namespace dhm
