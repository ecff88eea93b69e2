#include "dhm/gaussring.hpp"

#include <doctest.h>

#include <random>

using dhm::Nat;
using dhm::RingElement;

namespace {

struct Setup {
    dhm::PrimeParams params;
    dhm::CyclotomicTable table;
    dhm::GaussPeriodSet gps;
};

Setup setup_for(std::uint64_t q) {
    Setup s;
    s.params = dhm::build_params(q);
    s.table = dhm::build_classes(s.params);
    s.gps = dhm::gauss_periods(s.params, s.table);
    return s;
}

}  // namespace

TEST_CASE("ring arithmetic basics at N=10") {
    const auto a = RingElement::reduce(10, Nat(512));
    const auto four = RingElement::reduce(10, Nat(4));
    CHECK((a * four).value() == 2);  // 2^11 = 2 mod 1023

    const auto g = RingElement::reduce(10, Nat(180));
    CHECK((g * g).value() == 687);  // 32400 mod 1023

    const auto zero = RingElement::reduce(10, Nat(0));
    CHECK((a + zero) == a);
    CHECK((a - a).value() == 0);
    CHECK(RingElement::reduce(10, Nat(1023)).value() == 0);
    CHECK(RingElement::from_signed(10, Nat(-336)).value() == 687);
}

TEST_CASE("mismatched rings are rejected") {
    const auto a = RingElement::reduce(10, Nat(5));
    const auto b = RingElement::reduce(26, Nat(5));
    CHECK_THROWS_AS((void)(a + b), std::domain_error);
    CHECK_THROWS_AS((void)(a * b), std::domain_error);
}

TEST_CASE("fold reduction equals the naive remainder") {
    std::mt19937_64 rng(0xf01df01dULL);
    for (std::uint64_t n : {10ULL, 26ULL, 58ULL}) {
        const Nat modulus = dhm::ring_modulus(n);
        for (int round = 0; round < 1000; ++round) {
            // Up to 2N bits, the widest value a ring product can reach.
            Nat x = (Nat(rng()) << 64) | rng();
            x &= (Nat(1) << static_cast<unsigned>(2 * n)) - 1;
            Nat expected = x % modulus;
            if (expected == modulus) expected = 0;
            CHECK(RingElement::fold(n, x) == expected);
        }
        // Boundary representatives.
        CHECK(RingElement::fold(n, modulus) == 0);
        CHECK(RingElement::fold(n, modulus + 1) == 1);
        CHECK(RingElement::fold(n, Nat(0)) == 0);
    }
}

TEST_CASE("gauss periods for q=5") {
    const auto s = setup_for(5);
    CHECK(s.gps.eta[0].value() == 4);
    CHECK(s.gps.eta[1].value() == 64);
    CHECK(s.gps.eta[2].value() == 256);
    CHECK(s.gps.eta[3].value() == 16);
    CHECK(s.gps.gauss_sum.value() == 180);
}

TEST_CASE("periods sum to the full geometric sum minus one") {
    for (std::uint64_t q : {5ULL, 13ULL, 29ULL, 61ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        const auto total = s.gps.eta[0] + s.gps.eta[1] + s.gps.eta[2] + s.gps.eta[3];
        const Nat expected = (dhm::pow2(2 * q) - 1) / 3 - 1;
        CHECK(total == RingElement::reduce(2 * q, expected));
    }
}

TEST_CASE("gauss sum square identity") {
    for (std::uint64_t q : {5ULL, 13ULL, 29ULL}) {
        CAPTURE(q);
        CHECK(dhm::check_gauss_sum_square(setup_for(q).gps));
    }
}

TEST_CASE("period product expansion, all pairs and shifts") {
    for (std::uint64_t q : {5ULL, 13ULL, 37ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        CHECK(dhm::check_period_products(s.gps, s.table));
        CHECK(dhm::period_product_failures(s.gps, s.table, /*include_shifts=*/true).empty());
    }
}

TEST_CASE("scaled product families") {
    for (std::uint64_t q : {5ULL, 13ULL, 53ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        CHECK(dhm::check_scaled_products(s.gps, s.params));
    }
}

TEST_CASE("difference square identities") {
    for (std::uint64_t q : {5ULL, 13ULL}) {
        CAPTURE(q);
        const auto s = setup_for(q);
        CHECK(dhm::check_difference_squares(s.gps, s.params));
    }
}

TEST_CASE("difference squares, explicit small value") {
    // (4-64)^2 + (256-16)^2 = 61200 = 843 mod 1023, and -G = 1023 - 180.
    const auto s = setup_for(5);
    const auto lhs = (s.gps.eta[0] - s.gps.eta[1]) * (s.gps.eta[0] - s.gps.eta[1]) +
                     (s.gps.eta[2] - s.gps.eta[3]) * (s.gps.eta[2] - s.gps.eta[3]);
    CHECK(lhs.value() == 843);

    // First and second difference-square identities cancel: -tG + tG = 0.
    const auto rhs = (s.gps.eta[0] - s.gps.eta[3]) * (s.gps.eta[0] - s.gps.eta[3]) +
                     (s.gps.eta[2] - s.gps.eta[1]) * (s.gps.eta[2] - s.gps.eta[1]);
    CHECK((lhs + rhs).value() == 0);
}

TEST_CASE("gauss_periods rejects mismatched inputs") {
    const auto params = dhm::build_params(5);
    const auto table13 = dhm::build_classes(dhm::build_params(13));
    CHECK_THROWS_AS(dhm::gauss_periods(params, table13), std::domain_error);
}

TEST_CASE("a corrupted count table breaks the product expansion") {
    auto s = setup_for(13);
    ++s.table.numbers[0][0];
    CHECK_FALSE(dhm::check_period_products(s.gps, s.table));
}
