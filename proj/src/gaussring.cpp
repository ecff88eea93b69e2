#include "dhm/gaussring.hpp"

namespace dhm {
namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.n() != b.n())
        throw std::domain_error("ring op: operands live in different rings");
}

// (4^q - 1)/3 as an exact integer (3 always divides 4^q - 1). Dividing before
// any reduction matters: 3 need not be invertible mod 2^N - 1.
Nat geometric_sum_4(std::uint64_t q) { return (pow2(2 * q) - 1) / 3; }

RingElement coeff(std::uint64_t n, long long c) {
    return RingElement::from_signed(n, Nat(c));
}

}  // namespace

Nat ring_modulus(std::uint64_t n) { return pow2(n) - 1; }

RingElement::RingElement(std::uint64_t n, const Nat& canonical_value)
    : n_(n), value_(canonical_value) {}

Nat RingElement::fold(std::uint64_t n, Nat value) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("RingElement: N must be a positive even integer");
    if (value < 0) throw std::domain_error("RingElement::fold: negative value");
    const Nat mask = ring_modulus(n);
    while (value > mask) {
        Nat high = value >> static_cast<unsigned>(n);
        value &= mask;
        value += high;
    }
    if (value == mask) value = 0;  // 2^N - 1 and 0 are the same class
    return value;
}

RingElement RingElement::reduce(std::uint64_t n, const Nat& value) {
    return RingElement(n, fold(n, value));
}

RingElement RingElement::from_signed(std::uint64_t n, const Nat& value) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("RingElement: N must be a positive even integer");
    const Nat m = ring_modulus(n);
    Nat r = value % m;
    if (r < 0) r += m;
    return RingElement(n, r);
}

RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::reduce(a.n(), a.value_ + b.value_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::reduce(a.n(), a.value_ + (ring_modulus(a.n()) - b.value_));
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a, b);
    return RingElement::reduce(a.n(), a.value_ * b.value_);
}

GaussPeriodSet gauss_periods(const PrimeParams& params, const CyclotomicTable& table) {
    if (table.q != params.q)
        throw std::domain_error("gauss_periods: params and table disagree on q");
    const std::uint64_t q = params.q;
    const std::uint64_t n = 2 * q;

    // 4^i mod 2^N - 1 for i = 0..q-1; exponents only matter mod q since 4^q == 1.
    std::vector<Nat> pow4(q);
    pow4[0] = 1;
    for (std::uint64_t i = 1; i < q; ++i) pow4[i] = RingElement::fold(n, pow4[i - 1] << 2);

    GaussPeriodSet gps;
    gps.params = params;
    for (int lambda = 0; lambda < 4; ++lambda) {
        Nat sum = 0;
        for (std::uint64_t i : table.classes[lambda]) sum += pow4[i];
        gps.eta[lambda] = RingElement::reduce(n, sum);
    }
    gps.gauss_sum = gps.eta[0] - gps.eta[1] + gps.eta[2] - gps.eta[3];
    return gps;
}

std::vector<RingCheckFailure> gauss_sum_square_failures(const GaussPeriodSet& gps) {
    const std::uint64_t q = gps.params.q;
    const std::uint64_t n = 2 * q;
    std::vector<RingCheckFailure> failures;
    const RingElement lhs = gps.gauss_sum * gps.gauss_sum;
    const RingElement rhs = RingElement::from_signed(n, Nat(q) - geometric_sum_4(q));
    if (!(lhs == rhs)) failures.push_back({"gauss-sum-square"});
    return failures;
}

std::vector<RingCheckFailure> period_product_failures(const GaussPeriodSet& gps,
                                                      const CyclotomicTable& table,
                                                      bool include_shifts) {
    const std::uint64_t q = gps.params.q;
    const std::uint64_t n = 2 * q;
    const long long quarter = static_cast<long long>((q - 1) / 4);
    std::vector<RingCheckFailure> failures;
    const int max_shift = include_shifts ? 4 : 1;
    for (int shift = 0; shift < max_shift; ++shift) {
        for (int lambda = 0; lambda < 4; ++lambda) {
            for (int mu = 0; mu < 4; ++mu) {
                const RingElement lhs =
                    gps.eta[mod4(lambda + shift)] * gps.eta[mod4(mu + shift)];
                RingElement rhs =
                    coeff(n, (mod4(lambda - mu - 2) == 0) ? quarter : 0);
                for (int nu = 0; nu < 4; ++nu) {
                    const auto count = table.numbers[mod4(lambda - nu + 2)][mod4(mu - nu)];
                    rhs = rhs + coeff(n, static_cast<long long>(count)) *
                                    gps.eta[mod4(nu + shift)];
                }
                if (!(lhs == rhs))
                    failures.push_back({"period-products", lambda, mu, shift});
            }
        }
    }
    return failures;
}

std::vector<RingCheckFailure> scaled_product_failures(const GaussPeriodSet& gps,
                                                      const PrimeParams& params) {
    const std::uint64_t q = params.q;
    const std::uint64_t n = 2 * q;
    const auto c = closed_form_numbers(q, params.s, params.t);
    const long long s = params.s;
    const long long t = params.t;

    const RingElement sixteen = coeff(n, 16);
    // (sum of all eta) * q, the constant block shared by three families.
    const RingElement base =
        RingElement::from_signed(n, (geometric_sum_4(q) - 1) * q);
    const auto& eta = gps.eta;
    std::vector<RingCheckFailure> failures;

    for (int lam = 0; lam < 4; ++lam) {
        const auto at = [&](int offset) -> const RingElement& {
            return eta[mod4(lam + offset)];
        };

        // 16 eta^2 = A eta + B eta' + C eta'' + Bbar eta'''
        RingElement rhs = coeff(n, c.A) * at(0) + coeff(n, c.B) * at(1) +
                          coeff(n, c.C) * at(2) + coeff(n, c.Bbar) * at(3);
        if (!(sixteen * at(0) * at(0) == rhs))
            failures.push_back({"scaled-square", lam});

        // 16 eta_l eta_(l+1)
        rhs = base + coeff(n, -3 - 2 * s) * (at(0) + at(1)) +
              coeff(n, 1 + 2 * s + 8 * t) * at(2) + coeff(n, 1 + 2 * s - 8 * t) * at(3);
        if (!(sixteen * at(0) * at(1) == rhs))
            failures.push_back({"scaled-next", lam});

        // 16 eta_l eta_(l+2)
        rhs = base + coeff(n, -7 + 2 * s) * (at(0) + at(2)) +
              coeff(n, -3 - 2 * s) * (at(1) + at(3)) +
              coeff(n, 4 * (static_cast<long long>(q) - 1));
        if (!(sixteen * at(0) * at(2) == rhs))
            failures.push_back({"scaled-opposite", lam});

        // 16 eta_l eta_(l+3) reduces to the adjacent family anchored at l+3.
        rhs = base + coeff(n, -3 - 2 * s) * (at(3) + at(0)) +
              coeff(n, 1 + 2 * s + 8 * t) * at(1) + coeff(n, 1 + 2 * s - 8 * t) * at(2);
        if (!(sixteen * at(0) * at(3) == rhs))
            failures.push_back({"scaled-previous", lam});
    }
    return failures;
}

std::vector<RingCheckFailure> difference_square_failures(const GaussPeriodSet& gps,
                                                         const PrimeParams& params) {
    const std::uint64_t q = params.q;
    const std::uint64_t n = 2 * q;
    const long long s = params.s;
    const long long t = params.t;
    const auto& eta = gps.eta;
    const RingElement& g = gps.gauss_sum;
    const RingElement two = coeff(n, 2);
    const RingElement k_minus_q = RingElement::from_signed(n, geometric_sum_4(q) - q);

    const auto sq = [](const RingElement& x) { return x * x; };
    std::vector<RingCheckFailure> failures;

    if (!(sq(eta[0] - eta[1]) + sq(eta[2] - eta[3]) == coeff(n, -t) * g))
        failures.push_back({"difference-squares[01,23]"});
    if (!(sq(eta[0] - eta[3]) + sq(eta[2] - eta[1]) == coeff(n, t) * g))
        failures.push_back({"difference-squares[03,21]"});
    if (!(two * sq(eta[0] - eta[2]) == coeff(n, -s) * g + k_minus_q))
        failures.push_back({"difference-squares[02]"});
    if (!(two * sq(eta[1] - eta[3]) == coeff(n, s) * g + k_minus_q))
        failures.push_back({"difference-squares[13]"});
    return failures;
}

bool check_gauss_sum_square(const GaussPeriodSet& gps) {
    return gauss_sum_square_failures(gps).empty();
}

bool check_period_products(const GaussPeriodSet& gps, const CyclotomicTable& table) {
    return period_product_failures(gps, table).empty();
}

bool check_scaled_products(const GaussPeriodSet& gps, const PrimeParams& params) {
    return scaled_product_failures(gps, params).empty();
}

bool check_difference_squares(const GaussPeriodSet& gps, const PrimeParams& params) {
    return difference_square_failures(gps, params).empty();
}

}  // namespace dhm
