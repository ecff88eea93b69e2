#include "dhm/ntheory.hpp"

#include "dhm/cyclotomy.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>

namespace dhm {
namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable prime test to base a; n odd, n > 2, n-1 = 2^r * d.
bool sprp_u64(std::uint64_t n, std::uint64_t a) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// This witness set is deterministic for all n < 3.3e24, well past 2^64.
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t a : kWitnesses)
        if (!sprp_u64(n, a)) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) {
            factors.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t q,
                       const std::vector<std::uint64_t>& factors_of_order) {
    if (g % q == 0) return false;
    for (std::uint64_t p : factors_of_order)
        if (powmod_u64(g, (q - 1) / p, q) == 1) return false;
    return true;
}

}  // namespace

bool is_prime(const Nat& n) {
    if (n < 2) throw std::domain_error("is_prime: argument must be at least 2");
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return is_prime_u64(n.convert_to<std::uint64_t>());
    for (std::uint64_t p : kWitnesses)
        if (n % p == 0) return false;
    for (std::uint64_t a : kWitnesses)
        if (mod_pow(a, n - 1, n) != 1) return false;
    // 64 Miller-Rabin rounds: false-positive probability below 4^-64 = 2^-128.
    std::mt19937_64 rng(0x5eedbeefULL);
    return boost::multiprecision::miller_rabin_test(n, 64, rng);
}

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus must be at least 2");
    return boost::multiprecision::powm(base, exp, modulus);
}

Nat big_gcd(const Nat& a, const Nat& b) {
    if (a == 0 && b == 0) throw std::domain_error("big_gcd: gcd(0, 0) is undefined");
    return boost::multiprecision::gcd(a, b);
}

std::uint64_t find_generator(std::uint64_t q) {
    if (!is_prime_u64(q)) throw std::domain_error("find_generator: q must be prime");
    if (q == 2) return 1;
    const auto factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g)
        if (is_primitive_root(g, q, factors)) return g;
    throw consistency_error("find_generator: no generator found");  // unreachable for prime q
}

PrimeParams build_params(std::uint64_t q, std::optional<std::uint64_t> theta_override) {
    if (!is_prime_u64(q) || q % 8 != 5)
        throw std::domain_error("build_params: q must be a prime with q = 5 (mod 8)");

    std::uint64_t theta;
    if (theta_override) {
        theta = *theta_override % q;
        if (!is_primitive_root(theta, q, prime_factors(q - 1)))
            throw std::domain_error("build_params: theta override is not a primitive root");
    } else {
        theta = find_generator(q);
    }

    PrimeParams params;
    params.q = q;
    params.f = (q - 1) / 4;
    params.m = (q + 3) / 8;
    params.theta = theta;

    auto table = build_table(q, theta);
    auto [s, t] = recover_st(table);
    if (t < 0) {
        // Swap D1 and D3 by moving to theta^(q-2): the exponent is coprime to
        // q-1 and congruent to 3 mod 4, so it fixes D0/D2 and flips t's sign.
        params.theta = powmod_u64(theta, q - 2, q);
        params.relabeled = true;
        table = build_table(q, params.theta);
        std::tie(s, t) = recover_st(table);
    }
    if (t < 1 || ((s % 4) + 4) % 4 != 1)
        throw consistency_error("build_params: t-normalization failed");
    if (static_cast<std::uint64_t>(s * s + 4 * t * t) != q)
        throw consistency_error("build_params: recovered (s,t) does not decompose q");
    params.s = s;
    params.t = t;
    params.k = table.class_of[2];
    if (params.k != 1 && params.k != 3)
        throw consistency_error("build_params: 2 must lie in D1 or D3");
    return params;
}

std::vector<std::uint64_t> primes_5_mod_8(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 5; q <= limit; q += 8)
        if (is_prime_u64(q)) out.push_back(q);
    return out;
}

}  // namespace dhm
