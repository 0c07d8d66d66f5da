#ifndef RITT_RATIONAL_HPP
#define RITT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include <ritt/error.hpp>

namespace ritt {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator (mpq_class canonicalizes after every arithmetic operation).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw ResourceError("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

} // namespace ritt

#endif // RITT_RATIONAL_HPP
