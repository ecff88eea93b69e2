#include "dhm/report.hpp"

#include <doctest.h>

#include <sstream>

namespace {

// Minimal RFC 4180 reader, enough to round-trip our own emissions.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
        } else {
            field.push_back(c);
        }
    }
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string json_field_as_string(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace

TEST_CASE("exact log strings") {
    CHECK(dhm::exact_log_string(dhm::Nat(1023), dhm::Nat(11)) == "log2(1023/11)");
    CHECK(dhm::exact_log_string(dhm::Nat(1023), dhm::Nat(1)) == "log2(1023)");
}

TEST_CASE("csv quoting") {
    CHECK(dhm::csv_quote("plain") == "plain");
    CHECK(dhm::csv_quote("a,b") == "\"a,b\"");
    CHECK(dhm::csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("json and csv scans carry identical data") {
    const auto verdicts = dhm::scan(29);
    REQUIRE_FALSE(verdicts.empty());

    const auto json = dhm::scan_to_json(verdicts);
    CHECK(json["schema_version"] == dhm::kSchemaVersion);
    const auto& records = json["records"];
    REQUIRE(records.size() == verdicts.size());

    const auto csv = parse_csv(dhm::scan_to_csv(verdicts));
    REQUIRE(csv.size() == verdicts.size() + 1);  // header row first
    const std::vector<std::string> header = {"q",      "triple",     "tilde", "tag",
                                             "D",      "D_prime",    "pow_ok",
                                             "divides_S2", "d",      "c2_exact",
                                             "agree"};
    CHECK(csv[0] == header);

    for (std::size_t r = 0; r < verdicts.size(); ++r) {
        const auto& record = records[r];
        const auto& row = csv[r + 1];
        REQUIRE(row.size() == header.size());
        for (std::size_t col = 0; col < header.size(); ++col)
            CHECK(json_field_as_string(record[header[col]]) == row[col]);
    }
}

TEST_CASE("scan json survives a parse round-trip") {
    const auto verdicts = dhm::scan(13);
    const auto json = dhm::scan_to_json(verdicts);
    const auto reparsed = nlohmann::json::parse(json.dump());
    CHECK(reparsed == json);
    // Big values are strings, immune to double rounding.
    for (const auto& record : reparsed["records"]) {
        CHECK(record["d"].is_string());
        CHECK(record["D"].is_string());
    }
}

TEST_CASE("suite report text") {
    const auto ok = dhm::run_identity_suites(13);
    CHECK(ok.ok());
    const auto text = dhm::suite_report_text(ok);
    CHECK(text.find("OK") != std::string::npos);
    CHECK(text.find("FAIL q=") == std::string::npos);

    const auto empty = dhm::run_identity_suites(4);
    CHECK(empty.ok());
    CHECK(empty.checks == 0);
    CHECK(dhm::suite_report_text(empty).find("warning") != std::string::npos);

    const auto faulty = dhm::run_identity_suites(13, {.inject_fault = true});
    CHECK_FALSE(faulty.ok());
    const auto faulty_text = dhm::suite_report_text(faulty);
    CHECK(faulty_text.find("cyclotomic-closed-form") != std::string::npos);
    CHECK(faulty_text.find("FAILED") != std::string::npos);
}
