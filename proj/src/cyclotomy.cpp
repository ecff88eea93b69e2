#include "dhm/cyclotomy.hpp"

namespace dhm {
namespace {

void require_class_index(int i) {
    if (i < 0 || i > 3) throw std::domain_error("cyclotomy: class index must be in 0..3");
}

}  // namespace

CyclotomicTable build_table(std::uint64_t q, std::uint64_t theta) {
    if (q < 5 || theta < 2 || theta >= q)
        throw std::domain_error("build_table: need q >= 5 and 2 <= theta < q");
    CyclotomicTable table;
    table.q = q;
    table.theta = theta;
    table.class_of.assign(q, -1);

    const std::uint64_t f = (q - 1) / 4;
    std::uint64_t power = 1;  // theta^(lambda + 4i), walked in exponent order
    for (std::uint64_t e = 0; e < q - 1; ++e) {
        const int lambda = static_cast<int>(e % 4);
        table.classes[lambda].push_back(power);
        table.class_of[power] = lambda;
        power = power * theta % q;
    }
    for (const auto& cls : table.classes)
        if (cls.size() != f)
            throw consistency_error("build_table: theta is not a primitive root");

    for (auto& row : table.numbers) row.fill(0);
    for (std::uint64_t a = 1; a < q; ++a) {
        const std::uint64_t b = (a + 1) % q;
        if (b == 0) continue;  // a = q-1: a+1 vanishes, contributes nothing
        ++table.numbers[table.class_of[a]][table.class_of[b]];
    }
    return table;
}

CyclotomicTable build_classes(const PrimeParams& params) {
    return build_table(params.q, params.theta);
}

std::uint64_t cyclotomic_number_bruteforce(const CyclotomicTable& table, int i, int j) {
    require_class_index(i);
    require_class_index(j);
    std::uint64_t count = 0;
    for (std::uint64_t a : table.classes[i]) {
        const std::uint64_t b = (a + 1) % table.q;
        if (b != 0 && table.class_of[b] == j) ++count;
    }
    return count;
}

ClosedFormConstants closed_form_numbers(std::uint64_t q, long long s, long long t) {
    if (static_cast<long long>(q) != s * s + 4 * t * t || ((s % 4) + 4) % 4 != 1)
        throw std::domain_error("closed_form_numbers: require q = s^2 + 4t^2, s = 1 (mod 4)");
    const long long lq = static_cast<long long>(q);
    ClosedFormConstants c;
    c.A = lq - 7 + 2 * s;
    c.B = lq + 1 + 2 * s - 8 * t;
    c.Bbar = lq + 1 + 2 * s + 8 * t;
    c.C = lq + 1 - 6 * s;
    c.Dnum = lq - 3 - 2 * s;
    for (long long v : {c.A, c.B, c.Bbar, c.C, c.Dnum})
        if (v < 0 || v % 16 != 0)
            throw consistency_error("closed_form_numbers: constant not a non-negative multiple of 16");
    return c;
}

long long expected_scaled_number(const ClosedFormConstants& c, int i, int j) {
    require_class_index(i);
    require_class_index(j);
    static constexpr int kSlot[4][4] = {
        // 0 = A, 1 = B, 2 = Bbar, 3 = C, 4 = Dnum
        {0, 1, 3, 2},
        {4, 4, 2, 1},
        {0, 4, 0, 4},
        {4, 2, 1, 4},
    };
    switch (kSlot[i][j]) {
        case 0: return c.A;
        case 1: return c.B;
        case 2: return c.Bbar;
        case 3: return c.C;
        default: return c.Dnum;
    }
}

std::pair<long long, long long> recover_st(const CyclotomicTable& table) {
    const long long lq = static_cast<long long>(table.q);
    const long long s = (16 * static_cast<long long>(table.numbers[0][0]) - lq + 7) / 2;
    // 16*((0,3) - (0,1)) = Bbar - B = 16t
    const long long t = static_cast<long long>(table.numbers[0][3]) -
                        static_cast<long long>(table.numbers[0][1]);
    if (s * s + 4 * t * t != lq)
        throw consistency_error("recover_st: recovered pair does not decompose q");
    return {s, t};
}

int quadratic_character(const CyclotomicTable& table, std::uint64_t x) {
    x %= table.q;
    if (x == 0) throw std::domain_error("quadratic_character: x must be nonzero mod q");
    return (table.class_of[x] % 2 == 0) ? 1 : -1;
}

}  // namespace dhm
