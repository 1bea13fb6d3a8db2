#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwtrop {

using BigInt = mpz_class;
using Rational = mpq_class;

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegeneracyError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FittingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline BigInt big(std::int64_t v)
{
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline bool fits_int64(const BigInt& v)
{
    return mpz_fits_slong_p(v.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const BigInt& v)
{
    if (!fits_int64(v))
        throw InvalidArgument("integer does not fit in 64 bits: " + v.get_str());
    return mpz_get_si(v.get_mpz_t());
}

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

} // namespace gwtrop
