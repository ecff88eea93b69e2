#pragma once

#include "dhm/adic.hpp"
#include "dhm/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dhm {

// Serialization rules shared by every output record: big naturals go out as
// decimal strings (JSON numbers lose precision past 2^53), triples as the
// "i,j,l" string, and the exact complexity as "log2(M/d)" (or "log2(M)" when
// d = 1) next to a float approximation.
inline constexpr const char* kSchemaVersion = "1";

std::string triple_string(const std::array<int, 3>& triple);
std::string exact_log_string(const Nat& modulus, const Nat& d);

nlohmann::json sequence_record(const DhmSequence& seq, const std::vector<ConditionTag>& tags);
nlohmann::json spectrum_record(const DhmSequence& seq);
nlohmann::json complexity_record(const DhmSequence& seq, const ComplexityReport& report);

// Scan emissions. JSON and CSV carry exactly the same fields per row:
// q, triple, tilde, tag, D, D_prime, pow_ok, divides_S2, d, c2_exact, agree.
nlohmann::json scan_to_json(const std::vector<TheoremVerdict>& verdicts);
std::string scan_to_csv(const std::vector<TheoremVerdict>& verdicts);

// RFC 4180: quote fields containing commas, quotes or newlines; double
// embedded quotes.
std::string csv_quote(const std::string& field);

// Human-readable identity-suite report (one line per finding plus a summary).
std::string suite_report_text(const SuiteReport& report);

}  // namespace dhm
