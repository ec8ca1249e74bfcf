#ifndef GUP_ULTRASPHERICAL_HPP
#define GUP_ULTRASPHERICAL_HPP

#include <stdexcept>

#include "gup/factorials.hpp"
#include "gup/unipoly.hpp"

namespace gup {

namespace detail {

inline void require_nonneg(int n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative degree");
}

inline const UniPoly& half_x_minus_one() {
    static const UniPoly p(std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
    return p;
}

inline const UniPoly& one_minus_x_squared() {
    static const UniPoly p(std::vector<Rational>{1, 0, -1});
    return p;
}

}  // namespace detail

/// Symmetric-parameter Jacobi polynomial of degree n, built from the
/// ascending series in (x-1)/2. Valid for every rational parameter,
/// including the negative parameters used by the inversion sums.
inline UniPoly ultra_poly(int n, const Rational& alpha) {
    detail::require_nonneg(n, "ultra_poly");
    UniPoly sum;
    UniPoly power = UniPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
        Rational coeff = pochhammer(2 * alpha + (n + 1), k) / factorial(k) *
                         pochhammer(alpha + (k + 1), n - k) / factorial(n - k);
        sum += power * coeff;
        if (k < n) power *= detail::half_x_minus_one();
    }
    return sum;
}

/// Same polynomial from the series with negated Pochhammer arguments and a
/// global (-1)^n sign. Kept as an independent cross-check of ultra_poly.
inline UniPoly ultra_poly_negseries(int n, const Rational& alpha) {
    detail::require_nonneg(n, "ultra_poly_negseries");
    UniPoly sum;
    UniPoly power = UniPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
        Rational coeff = pochhammer(-2 * alpha - (n + k), k) / factorial(k) *
                         pochhammer(-alpha - n, n - k) / factorial(n - k);
        sum += power * coeff;
        if (k < n) power *= detail::half_x_minus_one();
    }
    if (n % 2 != 0) sum = -sum;
    return sum;
}

/// Same polynomial from the endpoint expansion in (x-1)^k (x+1)^(n-k)
/// with generalized binomial weights. Second independent cross-check.
inline UniPoly ultra_poly_endpoints(int n, const Rational& alpha) {
    detail::require_nonneg(n, "ultra_poly_endpoints");
    const UniPoly xm1(std::vector<Rational>{-1, 1});
    const UniPoly xp1(std::vector<Rational>{1, 1});
    UniPoly sum;
    for (int k = 0; k <= n; ++k) {
        Rational coeff = gen_binomial(alpha + n, n - k) * gen_binomial(alpha + n, k);
        sum += xm1.pow(k) * xp1.pow(n - k) * coeff;
    }
    return sum * two_pow(-n);
}

/// Closed form of the i-th derivative: a scaled polynomial of degree n-i
/// at parameter alpha+i. Requires 0 <= i <= n.
inline UniPoly ultra_derivative_closed(int n, int i, const Rational& alpha) {
    detail::require_nonneg(n, "ultra_derivative_closed");
    if (i < 0 || i > n) {
        throw std::domain_error("ultra_derivative_closed: requires 0 <= i <= n");
    }
    Rational scale = pochhammer(2 * alpha + (n + 1), i) * two_pow(-i);
    return ultra_poly(n - i, alpha + i) * scale;
}

/// Residual of the classical second-order equation:
/// (1-x^2) y'' - 2(alpha+1) x y' + n(n+2 alpha+1) y.
inline UniPoly classical_ode_residual(const UniPoly& y, int n, const Rational& alpha) {
    detail::require_nonneg(n, "classical_ode_residual");
    UniPoly r = detail::one_minus_x_squared() * y.derivative(2);
    r -= UniPoly::x() * y.derivative(1) * (2 * (alpha + 1));
    r += y * (Rational(n) * (2 * alpha + (n + 1)));
    return r;
}

/// The three ladder relations between neighbouring parameter families,
/// valid for n >= 2.
enum class UltraRelation {
    x_derivative,     // 2x P_n' = 2n P_n + (n+alpha) P_{n-2} at parameter+1
    degree_ladder,    // degrees n and n-2 at parameter+1 combine to P_n
    parameter_shift,  // parameter+1 minus parameter gives a (1-x^2) term
};

/// LHS minus RHS of the selected relation; the zero polynomial certifies it.
inline UniPoly relation_residual(UltraRelation rel, int n, const Rational& alpha) {
    if (n < 2) throw std::domain_error("relation_residual: requires n >= 2");
    const UniPoly pn = ultra_poly(n, alpha);
    switch (rel) {
        case UltraRelation::x_derivative: {
            UniPoly lhs = UniPoly::x() * pn.derivative(1) * Rational(2);
            UniPoly rhs = pn * Rational(2 * n) + ultra_poly(n - 2, alpha + 1) * (alpha + n);
            return lhs - rhs;
        }
        case UltraRelation::degree_ladder: {
            Rational c1 = (2 * alpha + (n + 1)) * (2 * alpha + (n + 2));
            Rational c2 = (alpha + n) * (alpha + (n + 1));
            Rational c3 = 2 * (alpha + (n + 1)) * (2 * alpha + (2 * n + 1));
            UniPoly lhs = ultra_poly(n, alpha + 1) * c1 - ultra_poly(n - 2, alpha + 1) * c2;
            return lhs - pn * c3;
        }
        case UltraRelation::parameter_shift: {
            UniPoly lhs = ultra_poly(n, alpha + 1) * (alpha + 1) - pn * (alpha + (n + 1));
            UniPoly rhs = detail::one_minus_x_squared() * ultra_poly(n - 2, alpha + 2) *
                          ((alpha + (n + 1)) / 4);
            return lhs - rhs;
        }
    }
    throw std::logic_error("relation_residual: unknown relation");
}

}  // namespace gup

#endif
