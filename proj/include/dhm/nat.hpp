#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace dhm {

// Arbitrary-precision integer. Used as a natural number unless a signature
// says otherwise; operations that accept signed values say so explicitly.
using Nat = boost::multiprecision::cpp_int;

// An internal invariant was violated (e.g. a recovered quadratic
// decomposition that does not multiply back). Distinct from domain errors,
// which flag bad caller input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Nat pow2(std::uint64_t n) { return Nat(1) << static_cast<unsigned>(n); }

}  // namespace dhm
