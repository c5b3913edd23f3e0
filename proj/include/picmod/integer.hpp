#pragma once

// Exact integer arithmetic. Everything in this library computes over
// arbitrary-precision integers; nothing overflows or rounds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace picmod {

using Integer = mpz_class;

// Thrown when an argument violates a documented precondition
// (bad bounds, invalid cover data, modulus < 2, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an input string (word, cover spec, JSON) cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow2(unsigned long e) {
    return Integer(1) << e;
}

inline bool fits_int64(const Integer& v) {
    static_assert(sizeof(long) == 8, "signed long must be 64-bit");
    return v.fits_slong_p();
}

inline std::int64_t to_int64(const Integer& v) {
    if (!fits_int64(v)) throw DomainError("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

} // namespace picmod
