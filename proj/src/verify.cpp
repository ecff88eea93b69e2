#include "dhm/verify.hpp"

#include "dhm/report.hpp"

#include <sstream>

namespace dhm {
namespace {

std::string indices_detail(const RingCheckFailure& f) {
    std::ostringstream out;
    if (f.lambda >= 0) out << "lambda=" << f.lambda;
    if (f.mu >= 0) out << " mu=" << f.mu;
    if (f.shift > 0) out << " shift=" << f.shift;
    return out.str();
}

}  // namespace

SuiteReport run_identity_suites(std::uint64_t q_max, const SuiteOptions& options) {
    SuiteReport report;
    report.q_max = q_max;
    report.primes = primes_5_mod_8(q_max);

    bool fault_pending = options.inject_fault;
    for (std::uint64_t q : report.primes) {
        const auto params = build_params(q);
        auto table = build_classes(params);
        if (fault_pending) {
            ++table.numbers[0][0];
            fault_pending = false;
        }

        const auto constants = closed_form_numbers(q, params.s, params.t);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                ++report.checks;
                const long long scaled = 16 * static_cast<long long>(table.numbers[i][j]);
                if (scaled != expected_scaled_number(constants, i, j)) {
                    std::ostringstream detail;
                    detail << "slot (" << i << "," << j << ")";
                    report.failures.push_back({q, "cyclotomic-closed-form", detail.str()});
                }
            }
        }

        const auto gps = gauss_periods(params, table);
        for (const auto& f : gauss_sum_square_failures(gps))
            report.failures.push_back({q, f.identity, indices_detail(f)});
        ++report.checks;
        for (const auto& f : period_product_failures(gps, table, /*include_shifts=*/true))
            report.failures.push_back({q, f.identity, indices_detail(f)});
        report.checks += 64;
        for (const auto& f : scaled_product_failures(gps, params))
            report.failures.push_back({q, f.identity, indices_detail(f)});
        report.checks += 16;
        for (const auto& f : difference_square_failures(gps, params))
            report.failures.push_back({q, f.identity, indices_detail(f)});
        report.checks += 4;

        for (bool tilde : {false, true}) {
            for (ConditionKind kind : {ConditionKind::t_one, ConditionKind::s_one}) {
                if ((kind == ConditionKind::t_one ? params.t : params.s) != 1) continue;
                for (const auto& triple : condition_triples(kind, tilde)) {
                    ++report.checks;
                    const auto seq = build_sequence(params, table, triple, tilde);
                    if (!check_evaluation_congruence(seq, gps)) {
                        std::ostringstream detail;
                        detail << "triple " << triple_string(triple)
                               << (tilde ? " tilde" : "");
                        report.failures.push_back({q, "evaluation-congruence", detail.str()});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace dhm
