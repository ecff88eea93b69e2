// Command-line front end: generation, autocorrelation, 2-adic complexity,
// identity verification and the full prediction-vs-gcd scan.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include "dhm/adic.hpp"
#include "dhm/report.hpp"
#include "dhm/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<int, 3> parse_triple(const std::string& text) {
    std::array<int, 3> triple{};
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%d,%d,%d%n", &triple[0], &triple[1], &triple[2],
                    &consumed) != 3 ||
        consumed != static_cast<int>(text.size()))
        throw std::domain_error("--ijl expects three comma-separated digits, e.g. 1,0,3");
    return triple;
}

// Write-then-rename so a failed run never leaves a truncated file behind.
void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    const std::string tmp = out_path + ".tmp";
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        if (!stream) throw io_error("cannot open " + tmp + " for writing");
        stream << text;
        if (!stream) throw io_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw io_error("cannot move output into place at " + out_path);
}

unsigned threads_from_env() {
    const char* env = std::getenv("DHM_THREADS");
    if (!env || !*env) return 0;
    const long value = std::strtol(env, nullptr, 10);
    return value > 0 ? static_cast<unsigned>(value) : 1;
}

struct SequenceArgs {
    std::uint64_t q = 0;
    std::string ijl;
    bool tilde = false;
    std::optional<std::uint64_t> theta;
};

void add_sequence_options(CLI::App* cmd, SequenceArgs& args) {
    cmd->add_option("--q", args.q, "prime q with q = 5 (mod 8)")->required();
    cmd->add_option("--ijl", args.ijl, "class triple i,j,l (distinct, 0..3)")->required();
    cmd->add_flag("--tilde", args.tilde, "set bit 0 (the tilde variant)");
    cmd->add_option("--theta", args.theta, "primitive root pinning the class labels");
}

dhm::DhmSequence make_sequence(const SequenceArgs& args) {
    const auto triple = parse_triple(args.ijl);
    const auto params = dhm::build_params(args.q, args.theta);
    const auto table = dhm::build_classes(params);
    return dhm::build_sequence(params, table, triple, args.tilde);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DHM binary sequence toolkit: construction, autocorrelation, "
                 "exact 2-adic complexity, and exhaustive identity verification"};
    app.fallthrough();  // let --out trail the subcommand
    app.require_subcommand(1);

    SequenceArgs gen_args, autocorr_args, c2_args;
    std::string out_path;
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    auto* gen = app.add_subcommand("gen", "construct one period of a sequence");
    add_sequence_options(gen, gen_args);

    auto* autocorr = app.add_subcommand("autocorr", "full autocorrelation spectrum");
    add_sequence_options(autocorr, autocorr_args);

    auto* c2 = app.add_subcommand("c2", "exact 2-adic complexity report");
    add_sequence_options(c2, c2_args);

    std::uint64_t verify_qmax = 0;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run every identity suite up to a bound");
    verify->add_option("--qmax", verify_qmax, "largest q to verify")->required();
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

    std::uint64_t scan_qmax = 0;
    std::string scan_format = "json";
    auto* scan = app.add_subcommand("scan", "prediction vs. direct gcd for all matched triples");
    scan->add_option("--qmax", scan_qmax, "largest q to scan")->required();
    scan->add_option("--format", scan_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            const auto seq = make_sequence(gen_args);
            const auto tags = dhm::condition_match(seq.params, seq.triple, seq.tilde);
            emit(dhm::sequence_record(seq, tags).dump(2) + "\n", out_path);
        } else if (*autocorr) {
            const auto seq = make_sequence(autocorr_args);
            emit(dhm::spectrum_record(seq).dump(2) + "\n", out_path);
        } else if (*c2) {
            const auto seq = make_sequence(c2_args);
            emit(dhm::complexity_record(seq, dhm::complexity(seq)).dump(2) + "\n", out_path);
        } else if (*verify) {
            const auto report =
                dhm::run_identity_suites(verify_qmax, {.inject_fault = inject_fault});
            emit(dhm::suite_report_text(report), out_path);
            return report.ok() ? 0 : 1;
        } else if (*scan) {
            const auto verdicts = dhm::scan(scan_qmax, {.threads = threads_from_env()});
            if (scan_format == "csv")
                emit(dhm::scan_to_csv(verdicts), out_path);
            else
                emit(dhm::scan_to_json(verdicts).dump(2) + "\n", out_path);
            for (const auto& v : verdicts)
                if (!v.agree) {
                    std::cerr << "disagreement at q=" << v.q << " triple "
                              << dhm::triple_string(v.triple) << (v.tilde ? " tilde" : "")
                              << "\n";
                    return 1;
                }
        }
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
