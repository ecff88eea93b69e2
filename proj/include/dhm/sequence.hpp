#pragma once

#include "dhm/gaussring.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace dhm {

// Which optimal-autocorrelation condition list a triple sits on. The lists
// come in two families per sequence variant: one active when t = 1, one when
// s = 1.
enum class ConditionKind { t_one, s_one };

const char* condition_name(ConditionKind kind);  // "t=1" / "s=1"

struct ConditionTag {
    ConditionKind kind;
    bool tilde;
    std::array<int, 3> triple;

    friend bool operator==(const ConditionTag&, const ConditionTag&) = default;
};

// One period of a DHM sequence with its defining data. bits[0] = 1 exactly
// when tilde is set; Hamming weight is q-1 (plain) or q (tilde).
struct DhmSequence {
    PrimeParams params;
    std::array<int, 3> triple{};  // (i, j, l), pairwise distinct, each in 0..3
    bool tilde = false;
    std::vector<std::uint8_t> bits;  // length 2q
};

// The ring isomorphism Z_2 x Z_q -> Z_2q, (a,b) -> (q+1)b + qa, and its
// inverse lambda -> (lambda mod 2, lambda mod q).
std::uint64_t crt_forward(std::uint64_t q, int a, std::uint64_t b);
std::pair<int, std::uint64_t> crt_inverse(std::uint64_t q, std::uint64_t lambda);

// bits[lambda] = 1 iff lambda is the image of {0} x (D_i u D_j) or
// {1} x (D_l u D_j); tilde additionally sets bit 0. Throws std::domain_error
// on a non-distinct or out-of-range triple.
DhmSequence build_sequence(const PrimeParams& params, const CyclotomicTable& table,
                           std::array<int, 3> triple, bool tilde);

// Agreements minus disagreements between the sequence and its tau-shift over
// one period.
int autocorrelation(const DhmSequence& seq, std::uint64_t tau);

// All N shift values, tau = 0..N-1.
std::vector<int> autocorr_spectrum(const DhmSequence& seq);

// max |A(tau)| over 1 <= tau <= N-1.
int max_offpeak(const DhmSequence& seq);

// sum of bits[lambda] * 2^lambda, exact.
Nat evaluate_at_2(const DhmSequence& seq);

// Every condition list entry matching (triple, tilde) under the normalized
// (s,t) of params. Empty when the triple is on no active list (the sequence
// is still constructible; optimality is just not claimed for it).
std::vector<ConditionTag> condition_match(const PrimeParams& params,
                                          std::array<int, 3> triple, bool tilde);

// The literal triple lists for one (kind, tilde) family.
const std::vector<std::array<int, 3>>& condition_triples(ConditionKind kind, bool tilde);

// S(2) == eta_(i-k) + eta_(j-k) + 2^q * (eta_(l-k) + eta_(j-k)) in the ring,
// with the tilde variant adding 1. Holds for every triple, matched or not.
bool check_evaluation_congruence(const DhmSequence& seq, const GaussPeriodSet& gps);

}  // namespace dhm
