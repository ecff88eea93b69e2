#include "dhm/sequence.hpp"

#include <doctest.h>

#include <numeric>

using dhm::Nat;

namespace {

struct Setup {
    dhm::PrimeParams params;
    dhm::CyclotomicTable table;
};

Setup setup_for(std::uint64_t q, std::optional<std::uint64_t> theta = std::nullopt) {
    Setup s;
    s.params = dhm::build_params(q, theta);
    s.table = dhm::build_classes(s.params);
    return s;
}

std::string bit_string(const dhm::DhmSequence& seq) {
    std::string out;
    for (auto b : seq.bits) out.push_back(b ? '1' : '0');
    return out;
}

std::vector<std::array<int, 3>> all_distinct_triples() {
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int l = 0; l < 4; ++l)
                if (i != j && i != l && j != l) triples.push_back({i, j, l});
    return triples;
}

}  // namespace

TEST_CASE("crt maps for q=5") {
    CHECK(dhm::crt_forward(5, 0, 1) == 6);
    CHECK(dhm::crt_forward(5, 0, 0) == 0);
    CHECK(dhm::crt_forward(5, 1, 3) == 3);  // 18 + 5 = 23 = 3 mod 10

    CHECK(dhm::crt_inverse(5, 7) == std::pair<int, std::uint64_t>{1, 2});
    CHECK(dhm::crt_inverse(5, 0) == std::pair<int, std::uint64_t>{0, 0});
    CHECK(dhm::crt_inverse(5, 8) == std::pair<int, std::uint64_t>{0, 3});
}

TEST_CASE("crt_inverse rejects out-of-range indices") {
    CHECK_THROWS_AS(dhm::crt_inverse(5, 10), std::domain_error);
}

TEST_CASE("autocorrelation rejects out-of-range shifts") {
    const auto s = setup_for(5);
    const auto seq = dhm::build_sequence(s.params, s.table, {0, 1, 2}, false);
    CHECK_THROWS_AS(dhm::autocorrelation(seq, 10), std::domain_error);
}

TEST_CASE("crt round-trips") {
    for (std::uint64_t q : {5ULL, 13ULL, 29ULL}) {
        for (int a : {0, 1})
            for (std::uint64_t b = 0; b < q; ++b)
                CHECK(dhm::crt_inverse(q, dhm::crt_forward(q, a, b)) ==
                      std::pair<int, std::uint64_t>{a, b});
        for (std::uint64_t lambda = 0; lambda < 2 * q; ++lambda) {
            const auto [a, b] = dhm::crt_inverse(q, lambda);
            CHECK(dhm::crt_forward(q, a, b) == lambda);
        }
    }
}

TEST_CASE("worked sequences at q=5") {
    const auto s = setup_for(5, 3);
    const auto seq1 = dhm::build_sequence(s.params, s.table, {1, 0, 3}, true);
    CHECK(bit_string(seq1) == "1100001110");
    CHECK(dhm::evaluate_at_2(seq1) == 451);

    const auto seq2 = dhm::build_sequence(s.params, s.table, {1, 2, 3}, true);
    CHECK(bit_string(seq2) == "1000100111");
    CHECK(dhm::evaluate_at_2(seq2) == 913);

    const auto plain = dhm::build_sequence(s.params, s.table, {1, 0, 3}, false);
    CHECK(dhm::evaluate_at_2(plain) == 450);
}

TEST_CASE("sequence weight and bit zero") {
    for (std::uint64_t q : {5ULL, 13ULL, 37ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        for (bool tilde : {false, true}) {
            const auto seq = dhm::build_sequence(s.params, s.table, {0, 1, 2}, tilde);
            const auto weight =
                std::accumulate(seq.bits.begin(), seq.bits.end(), std::uint64_t{0});
            CHECK(weight == (tilde ? q : q - 1));
            CHECK(seq.bits[0] == (tilde ? 1 : 0));
        }
    }
}

TEST_CASE("invalid triples are rejected") {
    const auto s = setup_for(5);
    CHECK_THROWS_AS(dhm::build_sequence(s.params, s.table, {0, 0, 1}, false),
                    std::domain_error);
    CHECK_THROWS_AS(dhm::build_sequence(s.params, s.table, {0, 1, 4}, false),
                    std::domain_error);
}

TEST_CASE("autocorrelation of the worked sequence") {
    const auto s = setup_for(5, 3);
    const auto seq = dhm::build_sequence(s.params, s.table, {1, 0, 3}, true);
    CHECK(dhm::autocorrelation(seq, 0) == 10);
    CHECK(dhm::autocorrelation(seq, 5) == -2);
    CHECK(dhm::max_offpeak(seq) == 2);

    const auto spectrum = dhm::autocorr_spectrum(seq);
    CHECK(spectrum.size() == 10);
    CHECK(spectrum[0] == 10);
    CHECK(spectrum[5] == -2);
}

TEST_CASE("off-peak values stay congruent to the period mod 4") {
    for (std::uint64_t q : {5ULL, 13ULL}) {
        const auto s = setup_for(q);
        for (bool tilde : {false, true}) {
            const auto seq = dhm::build_sequence(s.params, s.table, {0, 2, 1}, tilde);
            for (int a : dhm::autocorr_spectrum(seq)) {
                CHECK(((a % 4) + 4) % 4 == static_cast<int>((2 * q) % 4));
                CHECK((a + static_cast<int>(2 * q)) % 4 == 0);
            }
        }
    }
}

TEST_CASE("matched sequences have optimal autocorrelation") {
    const auto s13 = setup_for(13);
    REQUIRE(s13.params.t == 1);
    const auto seq = dhm::build_sequence(s13.params, s13.table, {0, 1, 3}, false);
    CHECK(dhm::max_offpeak(seq) == 2);
    const auto spectrum = dhm::autocorr_spectrum(seq);
    for (std::size_t tau = 1; tau < spectrum.size(); ++tau)
        CHECK((spectrum[tau] == 2 || spectrum[tau] == -2));
}

TEST_CASE("evaluate_at_2 of an empty sequence") {
    dhm::DhmSequence blank;
    blank.bits.assign(10, 0);
    CHECK(dhm::evaluate_at_2(blank) == 0);
}

TEST_CASE("condition matching") {
    const auto p5 = dhm::build_params(5, 3);
    const auto tags = dhm::condition_match(p5, {1, 0, 3}, true);
    REQUIRE(tags.size() == 1);
    CHECK(tags[0].kind == dhm::ConditionKind::s_one);

    const auto p13 = dhm::build_params(13);
    CHECK(dhm::condition_match(p13, {0, 1, 2}, false).empty());  // wants s=1, has s=-3

    const auto t13 = dhm::condition_match(p13, {0, 1, 3}, false);
    REQUIRE(t13.size() == 1);
    CHECK(t13[0].kind == dhm::ConditionKind::t_one);
    CHECK_FALSE(t13[0].tilde);

    // q=5 has s = t = 1, so both families fire across the tilde lists.
    std::size_t matches = 0;
    for (const auto& triple : all_distinct_triples())
        matches += dhm::condition_match(p5, triple, true).size();
    CHECK(matches == 8);
}

TEST_CASE("evaluation congruence holds for every triple") {
    for (std::uint64_t q : {5ULL, 13ULL, 29ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        const auto gps = dhm::gauss_periods(s.params, s.table);
        for (const auto& triple : all_distinct_triples()) {
            for (bool tilde : {false, true}) {
                CAPTURE(triple[0] * 100 + triple[1] * 10 + triple[2]);
                CAPTURE(tilde);
                const auto seq = dhm::build_sequence(s.params, s.table, triple, tilde);
                CHECK(dhm::check_evaluation_congruence(seq, gps));
            }
        }
    }
}
