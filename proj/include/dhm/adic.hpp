#pragma once

#include "dhm/sequence.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace dhm {

// Exact 2-adic complexity data for one sequence: the complexity is
// log2(modulus / d) with modulus = 2^N - 1 and d = gcd(S(2), 2^N - 1).
// The pair (modulus, d) is the exact value; approx_bits is derived from it
// with relative error below 1e-9.
struct ComplexityReport {
    std::uint64_t n = 0;  // period
    Nat s2;               // the sequence evaluated at 2
    Nat modulus;          // 2^N - 1
    Nat d;                // gcd(s2, modulus)
    Nat d1;               // gcd(s2, 2^q - 1)
    Nat d2;               // gcd(s2, 2^q + 1)
    double approx_bits = 0.0;
};

// Divisor bounds for a condition-matched sequence: the plain variant pins
// d2 = 3 and d1 | gcd(q^2+3q+4, 2^q-1); the tilde variant pins d1 = 1 and
// d2 | gcd(q^2+3q+4, 2^q+1).
struct DivisorBounds {
    Nat d1;
    Nat d2;
    Nat bound;  // the gcd(q^2+3q+4, 2^q -+ 1) cap
    bool ok = false;
};

// The dichotomy data deciding whether gcd(q^2+3q+4, 2^q -+ 1) exceeds 1:
// it does exactly when the candidate 2mq+1 = (q^2+3q+4)/4 is prime and the
// matching power condition on 2 holds.
struct DivisorCriterion {
    Nat candidate;  // 2mq + 1
    bool candidate_prime = false;
    bool power_ok = false;  // 2^q == 1 (plain) or 2^q == -1 (tilde) mod candidate
};

// Closed-form prediction vs. direct gcd computation for one matched sequence.
struct TheoremVerdict {
    std::uint64_t q = 0;
    std::array<int, 3> triple{};
    bool tilde = false;
    ConditionTag tag{};
    std::uint64_t m = 0;
    Nat l_candidate;  // 2mq + 1 = (q^2+3q+4)/4
    bool l_prime = false;
    bool power_residue_ok = false;
    bool divides_s2 = false;
    Nat dbound;  // gcd(q^2+3q+4, 2^q - 1) plain, gcd(q^2+3q+4, 2^q + 1) tilde
    Nat predicted_d;
    Nat observed_d;
    Nat modulus;
    double c2_bits = 0.0;
    bool agree = false;
};

// Throws std::domain_error if the sequence evaluates to zero (impossible for
// DHM sequences, whose weight is at least q-1).
ComplexityReport complexity(const DhmSequence& seq);

// Require the respective condition list to match (std::domain_error otherwise).
DivisorBounds verify_plain_bounds(const DhmSequence& seq);
DivisorBounds verify_tilde_bounds(const DhmSequence& seq);

// The power condition is evaluated as 2^q mod candidate (==1 resp. ==-1),
// the form equivalent to 2 being a (2m)-th resp. m-th power.
DivisorCriterion divisor_criterion_plain(std::uint64_t q);
DivisorCriterion divisor_criterion_tilde(std::uint64_t q);

// Predicts d from the two-case dichotomy (3 or 3*l plain; 1 or l tilde),
// computes the observed d directly, and records every criterion flag.
// Throws std::domain_error when (triple, tilde) matches no condition list.
TheoremVerdict determine_exact(const PrimeParams& params, const CyclotomicTable& table,
                               std::array<int, 3> triple, bool tilde);

struct ScanOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Full verdict for every prime q = 5 (mod 8) up to q_max and every
// condition-matched (triple, tilde), ordered by (q, tilde, triple)
// regardless of thread schedule.
std::vector<TheoremVerdict> scan(std::uint64_t q_max, const ScanOptions& options = {});

// log2 of an exact positive integer, good to ~1e-15 relative error.
double log2_exact(const Nat& x);

}  // namespace dhm
