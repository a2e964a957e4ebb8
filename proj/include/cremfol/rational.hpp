#ifndef CREMFOL_RATIONAL_HPP
#define CREMFOL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cremfol {

/// Exact rational number, always in lowest terms with positive denominator.
/// GMP keeps mpq_class canonical through arithmetic; we only have to
/// canonicalize values we assemble from raw numerator/denominator pairs.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Canonical text form: "p/q" with "/1" omitted (mpq's native format).
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace cremfol

#endif
