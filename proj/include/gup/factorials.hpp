#ifndef GUP_FACTORIALS_HPP
#define GUP_FACTORIALS_HPP

#include <stdexcept>

#include "gup/rational.hpp"

namespace gup {

inline Rational factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// 2^e for any integer e (negative exponents give exact fractions).
inline Rational two_pow(int e) {
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
inline Rational pochhammer(const Rational& a, int k) {
    if (k < 0) throw std::domain_error("pochhammer: negative index");
    Rational prod = 1;
    Rational term = a;
    for (int t = 0; t < k; ++t) {
        prod *= term;
        term += 1;
    }
    return prod;
}

/// Generalized binomial coefficient (z choose k) = (z-k+1)_k / k!.
/// Defined for arbitrary rational z; zero for negative k.
inline Rational gen_binomial(const Rational& z, int k) {
    if (k < 0) return 0;
    return pochhammer(z - k + 1, k) / factorial(k);
}

}  // namespace gup

#endif
