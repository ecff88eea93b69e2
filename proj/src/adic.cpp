#include "dhm/adic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace dhm {
namespace {

Nat quadratic_bound_value(std::uint64_t q) {
    // q^2 + 3q + 4, kept exact for any q.
    const Nat nq(q);
    return nq * nq + 3 * nq + 4;
}

void require_matched(const DhmSequence& seq, bool tilde) {
    if (seq.tilde != tilde)
        throw std::domain_error("divisor bounds: sequence variant does not match the check");
    if (condition_match(seq.params, seq.triple, tilde).empty())
        throw std::domain_error("divisor bounds: sequence matches no condition list");
}

DivisorCriterion divisor_criterion(std::uint64_t q, bool tilde) {
    const std::uint64_t m = (q + 3) / 8;
    DivisorCriterion crit;
    crit.candidate = Nat(2) * m * q + 1;
    if (4 * crit.candidate != quadratic_bound_value(q))
        throw consistency_error("divisor criterion: candidate fails 4l = q^2 + 3q + 4");
    crit.candidate_prime = is_prime(crit.candidate);
    const Nat residue = mod_pow(2, q, crit.candidate);
    crit.power_ok = tilde ? (residue == crit.candidate - 1) : (residue == 1);
    return crit;
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
    unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

}  // namespace

double log2_exact(const Nat& x) {
    if (x <= 0) throw std::domain_error("log2_exact: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(x);
    const unsigned shift = bits > 64 ? bits - 64 : 0;
    const double top = Nat(x >> shift).convert_to<double>();
    return std::log2(top) + static_cast<double>(shift);
}

ComplexityReport complexity(const DhmSequence& seq) {
    ComplexityReport report;
    report.n = seq.bits.size();
    report.s2 = evaluate_at_2(seq);
    if (report.s2 == 0)
        throw std::domain_error("complexity: sequence evaluates to zero at 2");
    const std::uint64_t q = seq.params.q;
    report.modulus = ring_modulus(report.n);
    report.d = big_gcd(report.s2, report.modulus);
    report.d1 = big_gcd(report.s2, pow2(q) - 1);
    report.d2 = big_gcd(report.s2, pow2(q) + 1);
    if (report.d != report.d1 * report.d2)
        throw consistency_error("complexity: gcd split d1*d2 != d");
    report.approx_bits = log2_exact(report.modulus / report.d);
    return report;
}

DivisorBounds verify_plain_bounds(const DhmSequence& seq) {
    require_matched(seq, false);
    const auto report = complexity(seq);
    DivisorBounds bounds;
    bounds.d1 = report.d1;
    bounds.d2 = report.d2;
    bounds.bound = big_gcd(quadratic_bound_value(seq.params.q), pow2(seq.params.q) - 1);
    bounds.ok = (bounds.d2 == 3) && (bounds.bound % bounds.d1 == 0);
    return bounds;
}

DivisorBounds verify_tilde_bounds(const DhmSequence& seq) {
    require_matched(seq, true);
    const auto report = complexity(seq);
    DivisorBounds bounds;
    bounds.d1 = report.d1;
    bounds.d2 = report.d2;
    bounds.bound = big_gcd(quadratic_bound_value(seq.params.q), pow2(seq.params.q) + 1);
    bounds.ok = (bounds.d1 == 1) && (bounds.bound % bounds.d2 == 0);
    return bounds;
}

DivisorCriterion divisor_criterion_plain(std::uint64_t q) { return divisor_criterion(q, false); }

DivisorCriterion divisor_criterion_tilde(std::uint64_t q) { return divisor_criterion(q, true); }

TheoremVerdict determine_exact(const PrimeParams& params, const CyclotomicTable& table,
                               std::array<int, 3> triple, bool tilde) {
    const auto tags = condition_match(params, triple, tilde);
    if (tags.empty())
        throw std::domain_error("determine_exact: (triple, tilde) matches no condition list");

    const auto seq = build_sequence(params, table, triple, tilde);
    const auto report = complexity(seq);
    const auto crit = divisor_criterion(params.q, tilde);

    TheoremVerdict verdict;
    verdict.q = params.q;
    verdict.triple = triple;
    verdict.tilde = tilde;
    verdict.tag = tags.front();
    verdict.m = params.m;
    verdict.l_candidate = crit.candidate;
    verdict.l_prime = crit.candidate_prime;
    verdict.power_residue_ok = crit.power_ok;
    verdict.divides_s2 = (report.s2 % crit.candidate == 0);
    verdict.dbound = big_gcd(quadratic_bound_value(params.q),
                             pow2(params.q) + (tilde ? 1 : -1));
    const bool exceptional =
        verdict.l_prime && verdict.power_residue_ok && verdict.divides_s2;
    if (tilde)
        verdict.predicted_d = exceptional ? crit.candidate : Nat(1);
    else
        verdict.predicted_d = exceptional ? 3 * crit.candidate : Nat(3);
    verdict.observed_d = report.d;
    verdict.modulus = report.modulus;
    verdict.c2_bits = report.approx_bits;
    verdict.agree = (verdict.predicted_d == verdict.observed_d);
    return verdict;
}

std::vector<TheoremVerdict> scan(std::uint64_t q_max, const ScanOptions& options) {
    const auto primes = primes_5_mod_8(q_max);
    std::vector<std::vector<TheoremVerdict>> slots(primes.size());

    const auto work_one = [&](std::size_t idx) {
        const std::uint64_t q = primes[idx];
        const auto params = build_params(q);
        const auto table = build_classes(params);
        for (bool tilde : {false, true}) {
            // Gather matched triples from both lists, then order them so the
            // output is canonical by (q, tilde, triple).
            std::vector<std::array<int, 3>> matched;
            for (ConditionKind kind : {ConditionKind::t_one, ConditionKind::s_one}) {
                if ((kind == ConditionKind::t_one ? params.t : params.s) != 1) continue;
                const auto& list = condition_triples(kind, tilde);
                matched.insert(matched.end(), list.begin(), list.end());
            }
            std::sort(matched.begin(), matched.end());
            for (const auto& triple : matched)
                slots[idx].push_back(determine_exact(params, table, triple, tilde));
        }
    };

    const unsigned threads = resolve_threads(options.threads, primes.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) work_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < primes.size();
                     i = next.fetch_add(1))
                    work_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<TheoremVerdict> verdicts;
    for (auto& slot : slots)
        for (auto& v : slot) verdicts.push_back(std::move(v));
    return verdicts;
}

}  // namespace dhm
