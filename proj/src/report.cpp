#include "dhm/report.hpp"

#include <sstream>

namespace dhm {
namespace {

std::string dec(const Nat& value) { return value.str(); }

std::string bits_string(const DhmSequence& seq) {
    std::string out;
    out.reserve(seq.bits.size());
    for (auto b : seq.bits) out.push_back(b ? '1' : '0');
    return out;
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string triple_string(const std::array<int, 3>& triple) {
    std::ostringstream out;
    out << triple[0] << "," << triple[1] << "," << triple[2];
    return out.str();
}

std::string exact_log_string(const Nat& modulus, const Nat& d) {
    std::ostringstream out;
    out << "log2(" << dec(modulus);
    if (d != 1) out << "/" << dec(d);
    out << ")";
    return out.str();
}

nlohmann::json sequence_record(const DhmSequence& seq, const std::vector<ConditionTag>& tags) {
    nlohmann::json rec{
        {"schema_version", kSchemaVersion},
        {"type", "sequence"},
        {"q", seq.params.q},
        {"theta", seq.params.theta},
        {"s", seq.params.s},
        {"t", seq.params.t},
        {"k", seq.params.k},
        {"relabeled", seq.params.relabeled},
        {"triple", triple_string(seq.triple)},
        {"tilde", seq.tilde},
        {"bits", bits_string(seq)},
    };
    std::size_t weight = 0;
    for (auto b : seq.bits) weight += b;
    rec["weight"] = weight;
    auto names = nlohmann::json::array();
    for (const auto& tag : tags) names.push_back(condition_name(tag.kind));
    rec["tags"] = names;
    return rec;
}

nlohmann::json spectrum_record(const DhmSequence& seq) {
    const auto spectrum = autocorr_spectrum(seq);
    return nlohmann::json{
        {"schema_version", kSchemaVersion},
        {"type", "autocorrelation"},
        {"q", seq.params.q},
        {"triple", triple_string(seq.triple)},
        {"tilde", seq.tilde},
        {"peak", spectrum.empty() ? 0 : spectrum[0]},
        {"spectrum", spectrum},
        {"max_offpeak", max_offpeak(seq)},
    };
}

nlohmann::json complexity_record(const DhmSequence& seq, const ComplexityReport& report) {
    return nlohmann::json{
        {"schema_version", kSchemaVersion},
        {"type", "complexity"},
        {"q", seq.params.q},
        {"triple", triple_string(seq.triple)},
        {"tilde", seq.tilde},
        {"n", report.n},
        {"s2", dec(report.s2)},
        {"modulus", dec(report.modulus)},
        {"d", dec(report.d)},
        {"d1", dec(report.d1)},
        {"d2", dec(report.d2)},
        {"c2_exact", exact_log_string(report.modulus, report.d)},
        {"c2_bits", report.approx_bits},
    };
}

nlohmann::json scan_to_json(const std::vector<TheoremVerdict>& verdicts) {
    auto records = nlohmann::json::array();
    for (const auto& v : verdicts) {
        records.push_back(nlohmann::json{
            {"q", v.q},
            {"triple", triple_string(v.triple)},
            {"tilde", v.tilde},
            {"tag", condition_name(v.tag.kind)},
            {"D", dec(v.l_candidate)},
            {"D_prime", v.l_prime},
            {"pow_ok", v.power_residue_ok},
            {"divides_S2", v.divides_s2},
            {"d", dec(v.observed_d)},
            {"c2_exact", exact_log_string(v.modulus, v.observed_d)},
            {"agree", v.agree},
        });
    }
    return nlohmann::json{{"schema_version", kSchemaVersion}, {"records", records}};
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        out.push_back(c);
        if (c == '"') out.push_back('"');
    }
    out.push_back('"');
    return out;
}

std::string scan_to_csv(const std::vector<TheoremVerdict>& verdicts) {
    std::ostringstream out;
    out << "q,triple,tilde,tag,D,D_prime,pow_ok,divides_S2,d,c2_exact,agree\r\n";
    for (const auto& v : verdicts) {
        const std::string fields[] = {
            std::to_string(v.q),
            triple_string(v.triple),
            bool_string(v.tilde),
            condition_name(v.tag.kind),
            dec(v.l_candidate),
            bool_string(v.l_prime),
            bool_string(v.power_residue_ok),
            bool_string(v.divides_s2),
            dec(v.observed_d),
            exact_log_string(v.modulus, v.observed_d),
            bool_string(v.agree),
        };
        bool first = true;
        for (const auto& f : fields) {
            if (!first) out << ",";
            out << csv_quote(f);
            first = false;
        }
        out << "\r\n";
    }
    return out.str();
}

std::string suite_report_text(const SuiteReport& report) {
    std::ostringstream out;
    if (report.primes.empty()) {
        out << "warning: no primes q = 5 (mod 8) at or below " << report.q_max
            << "; nothing to verify\n";
        return out.str();
    }
    for (const auto& f : report.failures)
        out << "FAIL q=" << f.q << " " << f.identity
            << (f.detail.empty() ? "" : " ") << f.detail << "\n";
    out << (report.ok() ? "OK" : "FAILED") << ": " << report.checks
        << " checks across " << report.primes.size() << " primes (q <= "
        << report.q_max << "), " << report.failures.size() << " failures\n";
    return out.str();
}

}  // namespace dhm
