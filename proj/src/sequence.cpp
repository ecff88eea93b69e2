#include "dhm/sequence.hpp"

#include <algorithm>
#include <cstdlib>

namespace dhm {
namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

void require_triple(std::array<int, 3> triple) {
    for (int v : triple)
        if (v < 0 || v > 3)
            throw std::domain_error("triple entries must be in 0..3");
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
        throw std::domain_error("triple entries must be pairwise distinct");
}

using TripleList = std::vector<std::array<int, 3>>;

const TripleList kPlainT1 = {{0, 1, 3}, {0, 2, 1}};
const TripleList kPlainS1 = {{1, 0, 3}, {0, 1, 2}};
const TripleList kTildeT1 = {{0, 1, 3}, {0, 2, 3}, {1, 2, 0}, {1, 3, 0}};
const TripleList kTildeS1 = {{0, 1, 2}, {0, 3, 2}, {1, 0, 3}, {1, 2, 3}};

}  // namespace

const char* condition_name(ConditionKind kind) {
    return kind == ConditionKind::t_one ? "t=1" : "s=1";
}

const TripleList& condition_triples(ConditionKind kind, bool tilde) {
    if (tilde) return kind == ConditionKind::t_one ? kTildeT1 : kTildeS1;
    return kind == ConditionKind::t_one ? kPlainT1 : kPlainS1;
}

std::uint64_t crt_forward(std::uint64_t q, int a, std::uint64_t b) {
    return ((q + 1) * (b % q) + q * static_cast<std::uint64_t>(a & 1)) % (2 * q);
}

std::pair<int, std::uint64_t> crt_inverse(std::uint64_t q, std::uint64_t lambda) {
    if (lambda >= 2 * q) throw std::domain_error("crt_inverse: index out of range");
    return {static_cast<int>(lambda % 2), lambda % q};
}

DhmSequence build_sequence(const PrimeParams& params, const CyclotomicTable& table,
                           std::array<int, 3> triple, bool tilde) {
    require_triple(triple);
    if (table.q != params.q)
        throw std::domain_error("build_sequence: params and table disagree on q");
    const std::uint64_t q = params.q;
    const auto [i, j, l] = triple;

    DhmSequence seq;
    seq.params = params;
    seq.triple = triple;
    seq.tilde = tilde;
    seq.bits.assign(2 * q, 0);
    for (int cls : {i, j})
        for (std::uint64_t b : table.classes[cls]) seq.bits[crt_forward(q, 0, b)] = 1;
    for (int cls : {l, j})
        for (std::uint64_t b : table.classes[cls]) seq.bits[crt_forward(q, 1, b)] = 1;
    if (tilde) seq.bits[0] = 1;
    return seq;
}

int autocorrelation(const DhmSequence& seq, std::uint64_t tau) {
    const std::size_t n = seq.bits.size();
    if (tau >= n) throw std::domain_error("autocorrelation: shift out of range");
    int acc = 0;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t u = t + tau < n ? t + tau : t + tau - n;
        acc += (seq.bits[u] == seq.bits[t]) ? 1 : -1;
    }
    return acc;
}

std::vector<int> autocorr_spectrum(const DhmSequence& seq) {
    std::vector<int> spectrum(seq.bits.size());
    for (std::size_t tau = 0; tau < spectrum.size(); ++tau)
        spectrum[tau] = autocorrelation(seq, tau);
    return spectrum;
}

int max_offpeak(const DhmSequence& seq) {
    int best = 0;
    for (std::size_t tau = 1; tau < seq.bits.size(); ++tau)
        best = std::max(best, std::abs(autocorrelation(seq, tau)));
    return best;
}

Nat evaluate_at_2(const DhmSequence& seq) {
    Nat value = 0;
    for (std::size_t lambda = 0; lambda < seq.bits.size(); ++lambda)
        if (seq.bits[lambda]) boost::multiprecision::bit_set(value, static_cast<unsigned>(lambda));
    return value;
}

std::vector<ConditionTag> condition_match(const PrimeParams& params,
                                          std::array<int, 3> triple, bool tilde) {
    require_triple(triple);
    std::vector<ConditionTag> tags;
    for (ConditionKind kind : {ConditionKind::t_one, ConditionKind::s_one}) {
        const long long have = (kind == ConditionKind::t_one) ? params.t : params.s;
        if (have != 1) continue;
        const auto& list = condition_triples(kind, tilde);
        if (std::find(list.begin(), list.end(), triple) != list.end())
            tags.push_back(ConditionTag{kind, tilde, triple});
    }
    return tags;
}

bool check_evaluation_congruence(const DhmSequence& seq, const GaussPeriodSet& gps) {
    if (gps.params.q != seq.params.q)
        throw std::domain_error("check_evaluation_congruence: mismatched q");
    const std::uint64_t q = seq.params.q;
    const std::uint64_t n = 2 * q;
    const int k = seq.params.k;
    const auto [i, j, l] = seq.triple;

    const RingElement two_q = RingElement::reduce(n, pow2(q));
    RingElement rhs = gps.eta[mod4(i - k)] + gps.eta[mod4(j - k)] +
                      two_q * (gps.eta[mod4(l - k)] + gps.eta[mod4(j - k)]);
    if (seq.tilde) rhs = rhs + RingElement::reduce(n, Nat(1));
    const RingElement lhs = RingElement::reduce(n, evaluate_at_2(seq));
    return lhs == rhs;
}

}  // namespace dhm
