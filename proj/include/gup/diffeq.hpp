#ifndef GUP_DIFFEQ_HPP
#define GUP_DIFFEQ_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gup/inversion.hpp"

namespace gup {

/// An internal identity that must hold by construction failed; carries the
/// counterexample location in the message.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline void require_params(const Rational& alpha, const Rational& M, const char* what) {
    if (!(alpha > Rational(-1))) {
        throw std::domain_error(std::string(what) + ": requires alpha > -1");
    }
    if (M < 0) {
        throw std::domain_error(std::string(what) + ": requires M >= 0");
    }
}

/// pref * p, where a zero polynomial short-circuits the scalar evaluation.
/// This is the continuity reading of prefactors that would otherwise sit on
/// a removable singularity while multiplying the zero polynomial.
inline UniPoly scaled_or_zero(const LinFactorRatio& pref, const UniPoly& p, const Rational& alpha) {
    if (p.is_zero()) return UniPoly();
    return p * pref.eval_at(alpha);
}

}  // namespace detail

/// The two scalars mixing P_n and x P_n' into the generalized polynomial.
/// c1 is computed in its cancelled form, so the removable singularity at
/// 2 alpha + 1 = 0 never appears; c1 at n = 0 is fixed to 0 (it multiplies
/// x P_0' = 0, so the polynomial is unaffected).
struct GenFactors {
    Rational c0;
    Rational c1;
};

inline GenFactors gen_factors(int n, const Rational& alpha, const Rational& M) {
    if (n < 0) throw std::domain_error("gen_factors: negative degree");
    detail::require_params(alpha, M, "gen_factors");
    Rational bin_top = gen_binomial(2 * alpha + (n + 1), n);
    Rational bin_low = gen_binomial(2 * alpha + (n + 1), n - 1);
    Rational c0 = Rational(1) + 2 * M * Rational(n) / (alpha + 1) * bin_top + 4 * M * M * bin_low * bin_low;
    Rational c1 = 0;
    if (n >= 1) {
        c1 = 2 * M * pochhammer(2 * alpha + 2, n - 1) / factorial(n) +
             2 * M * M / (alpha + 1) * gen_binomial(2 * alpha + n, n - 1) * bin_top;
    }
    return {c0, c1};
}

/// Generalized polynomial of degree n: C0 P_n - C1 x P_n'. Reduces to the
/// classical polynomial at M = 0.
inline UniPoly gen_poly(int n, const Rational& alpha, const Rational& M) {
    GenFactors f = gen_factors(n, alpha, M);
    UniPoly p = ultra_poly(n, alpha);
    return p * f.c0 - UniPoly::x() * p.derivative(1) * f.c1;
}

/// Order-zero coefficient in closed form: a01 * b0(n) + c0(n) with
/// b0(n) = [1 - (-1)^n]/2 and c0(n) = 4(2 alpha + 3) (n+2 alpha+2 choose n-2).
inline Rational a0_closed(int n, const Rational& alpha, const Rational& a01) {
    if (n < 0) throw std::domain_error("a0_closed: negative n");
    Rational c0 = 4 * (2 * alpha + 3) * gen_binomial(2 * alpha + (n + 2), n - 2);
    return (n % 2 != 0) ? a01 + c0 : c0;
}

/// Order-zero coefficients for n = 0..N from the two-step recurrence
/// a0(n+2) = a0(n) + 4(2n+2 alpha+3) (n+2 alpha+2 choose n), seeded with
/// a0(0) = 0 and the free a0(1) = a01. Must agree with a0_closed pointwise.
inline std::vector<Rational> a0_recurrence(int N, const Rational& alpha, const Rational& a01) {
    if (N < 1) throw std::domain_error("a0_recurrence: requires N >= 1");
    std::vector<Rational> a(static_cast<std::size_t>(N) + 1);
    a[0] = 0;
    a[1] = a01;
    for (int n = 0; n + 2 <= N; ++n) {
        a[static_cast<std::size_t>(n) + 2] =
            a[static_cast<std::size_t>(n)] +
            4 * (2 * alpha + (2 * n + 3)) * gen_binomial(2 * alpha + (n + 2), n);
    }
    return a;
}

/// b_i(x) = (2^{i-1}/i!) (-x)^i, the part of a_i proportional to a0(1).
inline UniPoly b_coeff(int i) {
    if (i < 1) throw std::domain_error("b_coeff: requires i >= 1");
    Rational coeff = two_pow(i - 1) / factorial(i);
    if (i % 2 != 0) coeff = -coeff;
    return UniPoly::monomial(coeff, i);
}

/// c_1 = 0; c_i(x) = (2 alpha+3)(1-x^2)(2^i/i!) P_{i-2} at parameter
/// alpha - i + 3 for i >= 2.
inline UniPoly c_coeff(int i, const Rational& alpha) {
    if (i < 1) throw std::domain_error("c_coeff: requires i >= 1");
    if (i == 1) return UniPoly();
    Rational scale = (2 * alpha + 3) * two_pow(i) / factorial(i);
    return detail::one_minus_x_squared() * ultra_poly(i - 2, alpha - i + 3) * scale;
}

/// The differential-equation coefficient family with its split into the
/// a0(1)-proportional part b and the fixed part c: a_i = a0_1 b_i + c_i.
struct CoeffSet {
    Rational alpha;
    Rational a0_1;
    int max_i = 0;
    std::vector<UniPoly> b;   // b[i-1] holds b_i, i = 1..max_i
    std::vector<UniPoly> c;   // c[i-1] holds c_i
    std::vector<Rational> a0; // a0[n] for n = 0..max_i+2

    const UniPoly& b_at(int i) const { return b.at(static_cast<std::size_t>(i) - 1); }
    const UniPoly& c_at(int i) const { return c.at(static_cast<std::size_t>(i) - 1); }
    UniPoly a_at(int i) const { return b_at(i) * a0_1 + c_at(i); }
};

/// Coefficient family straight from the closed forms.
inline CoeffSet coeffs_closed(const Rational& alpha, const Rational& a01, int max_i) {
    if (max_i < 1) throw std::domain_error("coeffs_closed: requires max_i >= 1");
    CoeffSet set{alpha, a01, max_i, {}, {}, {}};
    for (int i = 1; i <= max_i; ++i) {
        set.b.push_back(b_coeff(i));
        set.c.push_back(c_coeff(i, alpha));
    }
    for (int n = 0; n <= max_i + 2; ++n) {
        set.a0.push_back(a0_closed(n, alpha, a01));
    }
    return set;
}

/// Coefficient family synthesized by inverting the shifted derivative
/// system. Builds the right-hand sides
///   F_n = [8/(n+alpha+2)] (n+2a+2 choose n) D^2 P_{n+2} - a0(n+2) P_n^{+1},
/// checks F_0 = 0, solves at the shifted parameter, and splits the result
/// into b/c parts by running the linear pipeline at a0(1) = 0 and 1.
inline CoeffSet coeffs_via_inversion(const Rational& alpha, const Rational& a01, int max_i) {
    if (max_i < 1) throw std::domain_error("coeffs_via_inversion: requires max_i >= 1");
    if (!(alpha > Rational(-1))) {
        throw std::domain_error("coeffs_via_inversion: requires alpha > -1");
    }

    auto solve_run = [&](const Rational& a01_run) {
        std::vector<UniPoly> fs;
        for (int n = 0; n <= max_i; ++n) {
            Rational pref = Rational(8) / (alpha + (n + 2)) * gen_binomial(2 * alpha + (n + 2), n);
            UniPoly f = ultra_poly(n + 2, alpha).derivative(2) * pref -
                        ultra_poly(n, alpha + 1) * a0_closed(n + 2, alpha, a01_run);
            fs.push_back(std::move(f));
        }
        if (!fs.front().is_zero()) {
            throw consistency_error("coeffs_via_inversion: F_0 != 0 at alpha=" + alpha.str());
        }
        RhsSequence rhs{alpha + 1, std::vector<UniPoly>(fs.begin() + 1, fs.end())};
        return solve_derivative_system(rhs).entries;
    };

    std::vector<UniPoly> fixed = solve_run(0);
    std::vector<UniPoly> unit = solve_run(1);

    CoeffSet set{alpha, a01, max_i, {}, {}, {}};
    set.c = fixed;
    set.b.reserve(static_cast<std::size_t>(max_i));
    for (int i = 0; i < max_i; ++i) {
        set.b.push_back(unit[static_cast<std::size_t>(i)] - fixed[static_cast<std::size_t>(i)]);
    }
    for (int n = 0; n <= max_i + 2; ++n) {
        set.a0.push_back(a0_closed(n, alpha, a01));
    }
    return set;
}

/// Residual of the full differential equation at y = gen_poly(n, alpha, M):
///   M [a0(n) y + sum_i a_i y^(i)] + (1-x^2) y'' - 2(alpha+1) x y' + n(n+2a+1) y.
/// The i-sum truncates at i = n since y^(i) = 0 beyond the degree.
inline UniPoly ode_residual(const Rational& alpha, const Rational& M, int n, const Rational& a01) {
    if (n < 0) throw std::domain_error("ode_residual: negative degree");
    detail::require_params(alpha, M, "ode_residual");
    UniPoly y = gen_poly(n, alpha, M);
    UniPoly mass_part = y * a0_closed(n, alpha, a01);
    UniPoly d = y;
    for (int i = 1; i <= n && !d.is_zero(); ++i) {
        d = d.derivative(1);
        mass_part += (b_coeff(i) * a01 + c_coeff(i, alpha)) * d;
    }
    return mass_part * M + classical_ode_residual(y, n, alpha);
}

/// Checks the five defining systems at one n, with coefficients from the
/// closed forms. The order-two right-hand prefactor of the first and fourth
/// systems is cancelled in alpha before evaluation.
inline VerifyReport verify_defining_systems(const Rational& alpha, const Rational& a01, int n) {
    if (n < 0) throw std::domain_error("verify_defining_systems: negative n");
    if (!(alpha > Rational(-1))) {
        throw std::domain_error("verify_defining_systems: requires alpha > -1");
    }
    const std::string ctx = " n=" + std::to_string(n) + " alpha=" + alpha.str() + " a01=" + a01.str();
    VerifyReport report("defining-systems" + ctx);

    const UniPoly pn = ultra_poly(n, alpha);
    std::vector<UniPoly> dp;  // dp[i] = D^i P_n
    dp.push_back(pn);
    while (!dp.back().is_zero()) dp.push_back(dp.back().derivative(1));
    auto D = [&](int i) -> const UniPoly& {
        static const UniPoly zero;
        return i < static_cast<int>(dp.size()) ? dp[static_cast<std::size_t>(i)] : zero;
    };

    const Rational a0n = a0_closed(n, alpha, a01);
    std::vector<UniPoly> ai;  // ai[i-1] = a_i, i = 1..n
    for (int i = 1; i <= n; ++i) ai.push_back(b_coeff(i) * a01 + c_coeff(i, alpha));
    auto A = [&](int i) -> const UniPoly& { return ai[static_cast<std::size_t>(i) - 1]; };

    // sum_i a_i D^i P_n with and without the order-zero term
    UniPoly full_sum = pn * a0n;
    UniPoly tail_sum;
    for (int i = 1; i <= n; ++i) tail_sum += A(i) * D(i);
    full_sum += tail_sum;

    LinFactorRatio pref1(Rational(4) / factorial(n));
    pref1.num_pochhammer(2, 1, n).den_factor(2, 1);
    UniPoly rhs1 = detail::scaled_or_zero(pref1, D(2), alpha);

    report.check("sys1" + ctx, full_sum - rhs1);

    // weighted system: sum_i i a_i D^i P_n + x sum_i a_i D^{i+1} P_n
    UniPoly weighted;
    for (int i = 1; i <= n; ++i) weighted += A(i) * D(i) * Rational(i);
    UniPoly shifted = pn.derivative(1) * a0n;
    for (int i = 1; i <= n; ++i) shifted += A(i) * D(i + 1);
    weighted += UniPoly::x() * shifted;
    UniPoly rhs2 = D(2) * (4 * gen_binomial(2 * alpha + (n + 1), n - 1));
    report.check("sys2" + ctx, weighted - rhs2);

    // order-two only from n >= 2 on: the same family against the shifted
    // polynomial Q = P_{n-2} at parameter alpha+1
    if (n >= 2) {
        const UniPoly q = ultra_poly(n - 2, alpha + 1);
        Rational pref3 = Rational(8) / (alpha + n) * gen_binomial(2 * alpha + n, n - 2);
        UniPoly rhs3 = D(2) * pref3;

        UniPoly q_full = q * a0n;
        UniPoly q_tail;
        UniPoly dq = q;
        for (int i = 1; i <= n - 2 && !dq.is_zero(); ++i) {
            dq = dq.derivative(1);
            q_tail += A(i) * dq;
        }
        q_full += q_tail;
        report.check("sys3" + ctx, q_full - rhs3);
        report.check("sys5" + ctx, q_tail - (rhs3 - q * a0n));
    }

    report.check("sys4" + ctx, tail_sum - (rhs1 - pn * a0n));
    return report;
}

enum class Parity { even, odd };

/// Telescoping binomial sums behind the order-zero closed form, plus the
/// stepping identity that powers the telescope, checked for m = 0..n.
inline VerifyReport telescope_check(int n, const Rational& alpha, Parity parity) {
    if (n < 1) throw std::domain_error("telescope_check: requires n >= 1");
    const std::string ctx = " n=" + std::to_string(n) + " alpha=" + alpha.str();
    VerifyReport report(std::string("telescope-") + (parity == Parity::even ? "even" : "odd") + ctx);

    Rational lhs = 0;
    Rational rhs;
    if (parity == Parity::even) {
        for (int k = 0; k < n; ++k) {
            lhs += gen_binomial(2 * alpha + (2 * k + 2), 2 * k) * (2 * alpha + (4 * k + 3));
        }
        rhs = (2 * alpha + 3) * gen_binomial(2 * alpha + (2 * n + 2), 2 * n - 2);
    } else {
        for (int k = 0; k < n; ++k) {
            lhs += gen_binomial(2 * alpha + (2 * k + 3), 2 * k + 1) * (2 * alpha + (4 * k + 5));
        }
        rhs = (2 * alpha + 3) * gen_binomial(2 * alpha + (2 * n + 3), 2 * n - 1);
    }
    report.check("sum" + ctx, UniPoly::constant(lhs - rhs));

    for (int m = 0; m <= n; ++m) {
        Rational step_lhs = (2 * alpha + (2 * m + 3)) * gen_binomial(2 * alpha + (m + 2), m);
        Rational step_rhs = (2 * alpha + 3) * (gen_binomial(2 * alpha + (m + 4), m) -
                                               gen_binomial(2 * alpha + (m + 2), m - 2));
        report.check("step m=" + std::to_string(m) + ctx, UniPoly::constant(step_lhs - step_rhs));
    }
    return report;
}

/// The sum inside the order-i coefficient synthesis must collapse to
/// (1/i!) P_{i-2} at parameter alpha-i+3; this checks it exactly.
inline VerifyReport c_sum_collapse_check(int i, const Rational& alpha) {
    if (i < 2) throw std::domain_error("c_sum_collapse_check: requires i >= 2");
    const std::string ctx = " i=" + std::to_string(i) + " alpha=" + alpha.str();
    const Rational mirror = -alpha - (i + 2);
    UniPoly lhs;
    for (int j = 2; j <= i; ++j) {
        Rational pref = (2 * alpha + (2 * j + 3)) / pochhammer(2 * alpha + (j + 3), i + 1) *
                        gen_binomial(2 * alpha + (j + 4), j);
        lhs += ultra_poly(i - j, mirror) * ultra_poly(j - 2, alpha + 3) * pref;
    }
    UniPoly rhs = ultra_poly(i - 2, alpha - (i - 3)) * (Rational(1) / factorial(i));
    VerifyReport report("c-sum-collapse" + ctx);
    report.check("collapse" + ctx, lhs - rhs);
    return report;
}

struct FiniteOrder {
    int order;
    UniPoly leading;
};

/// For a nonnegative integer parameter the c-family cuts off: c_i = 0 for
/// i > 2 alpha + 4 and the top coefficient is -4(2a+3)/(2a+4)! (x^2-1)^{a+2}.
/// Probes every i up to probe_bound and returns the order with its leading
/// coefficient polynomial.
inline FiniteOrder finite_order(const Rational& alpha, int probe_bound) {
    if (!alpha.is_integer() || alpha.is_negative()) {
        throw std::domain_error("finite_order: alpha must be a nonnegative integer");
    }
    const int a = alpha.to_int();
    const int order = 2 * a + 4;
    if (probe_bound < order + 1) {
        throw std::domain_error("finite_order: probe_bound must be at least 2 alpha + 5");
    }
    const UniPoly x2m1(std::vector<Rational>{-1, 0, 1});
    UniPoly expected = x2m1.pow(a + 2) * (Rational(-4) * (2 * alpha + 3) / factorial(order));
    UniPoly got = c_coeff(order, alpha);
    if (got.is_zero() || !(got == expected)) {
        throw consistency_error("finite_order: top coefficient mismatch at i=" + std::to_string(order) +
                                ", got " + got.str());
    }
    for (int i = order + 1; i <= probe_bound; ++i) {
        UniPoly ci = c_coeff(i, alpha);
        if (!ci.is_zero()) {
            throw consistency_error("finite_order: nonzero coefficient beyond the order, i=" +
                                    std::to_string(i) + ", c_i=" + ci.str());
        }
    }
    return {order, got};
}

/// b_i recomputed by inverting the unshifted system; must equal b_coeff.
inline UniPoly b_coeff_alt(int i, const Rational& alpha) {
    if (i < 1) throw std::domain_error("b_coeff_alt: requires i >= 1");
    const Rational mirror = -alpha - (i + 1);
    UniPoly sum;
    for (int j = 1; j <= i; j += 2) {
        // (-1)^j - 1 = -2 on odd j, 0 otherwise
        Rational pref = detail::solution_prefactor(i, j, alpha) * Rational(-2);
        sum += ultra_poly(i - j, mirror) * ultra_poly(j, alpha) * pref;
    }
    return sum * two_pow(i - 1);
}

/// c_i recomputed by inverting the unshifted system; must equal c_coeff.
inline UniPoly c_coeff_alt(int i, const Rational& alpha) {
    if (i < 1) throw std::domain_error("c_coeff_alt: requires i >= 1");
    const Rational mirror = -alpha - (i + 1);
    UniPoly sum;
    for (int j = 1; j <= i; ++j) {
        UniPoly pj = ultra_poly(j, alpha);
        LinFactorRatio kj(Rational(1) / factorial(j));
        kj.num_pochhammer(2, 1, j).den_factor(2, 1);
        UniPoly bracket = detail::scaled_or_zero(kj, pj.derivative(2), alpha) -
                          pj * ((2 * alpha + 3) * gen_binomial(2 * alpha + (j + 2), j - 2));
        sum += ultra_poly(i - j, mirror) * bracket * detail::solution_prefactor(i, j, alpha);
    }
    return sum * two_pow(i + 2);
}

}  // namespace gup

#endif
