#ifndef GUP_SUITES_HPP
#define GUP_SUITES_HPP

#include <random>
#include <string>
#include <vector>

#include "gup/diffeq.hpp"

namespace gup {

/// Default parameter grid. Deliberately includes the removable-singularity
/// point -1/2 and a non-dyadic rational.
inline const std::vector<Rational>& default_alpha_grid() {
    static const std::vector<Rational> grid = {
        Rational(-1, 2), Rational(-1, 4), Rational(0), Rational(1, 2),
        Rational(1),     Rational(3),     Rational(7, 3)};
    return grid;
}

inline const std::vector<Rational>& default_m_grid() {
    static const std::vector<Rational> grid = {
        Rational(0), Rational(1, 2), Rational(1), Rational(3), Rational(10)};
    return grid;
}

inline const std::vector<Rational>& default_a01_grid() {
    static const std::vector<Rational> grid = {Rational(0), Rational(1), Rational(-2)};
    return grid;
}

/// Kronecker property of the inversion sum over 0 <= j <= i <= max_i.
inline VerifyReport suite_inversion(const std::vector<Rational>& alphas, int max_i = 12) {
    VerifyReport rep("inversion");
    for (const auto& alpha : alphas) {
        for (int i = 0; i <= max_i; ++i) {
            for (int j = 0; j <= i; ++j) {
                UniPoly want = (i == j) ? UniPoly::constant(1) : UniPoly();
                rep.check_equal("inversion i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    " alpha=" + alpha.str(),
                                inversion_sum(i, j, alpha), want);
            }
        }
    }
    return rep;
}

/// Power property of the reflected sum: x^{i-j}/(i-j)!.
inline VerifyReport suite_power(const std::vector<Rational>& alphas, int max_i = 12) {
    VerifyReport rep("spec");
    for (const auto& alpha : alphas) {
        for (int i = 0; i <= max_i; ++i) {
            for (int j = 0; j <= i; ++j) {
                UniPoly want = UniPoly::monomial(Rational(1) / factorial(i - j), i - j);
                rep.check_equal("power i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                    " alpha=" + alpha.str(),
                                reflected_inversion_sum(i, j, alpha), want);
            }
        }
    }
    return rep;
}

/// Classical layer: agreement of the three constructions, symmetry, the
/// derivative closed form, and the second-order equation.
inline VerifyReport suite_definitions(const std::vector<Rational>& alphas, int max_n = 12) {
    VerifyReport rep("definitions");
    for (const auto& alpha : alphas) {
        for (int n = 0; n <= max_n; ++n) {
            const std::string ctx = " n=" + std::to_string(n) + " alpha=" + alpha.str();
            UniPoly p = ultra_poly(n, alpha);
            rep.check_equal("negseries" + ctx, ultra_poly_negseries(n, alpha), p);
            rep.check_equal("endpoints" + ctx, ultra_poly_endpoints(n, alpha), p);
            UniPoly sym = p.reflected();
            if (n % 2 != 0) sym = -sym;
            rep.check_equal("symmetry" + ctx, sym, p);
            UniPoly d = p;
            for (int i = 0; i <= n; ++i) {
                rep.check_equal("derivative" + ctx + " i=" + std::to_string(i), d,
                                ultra_derivative_closed(n, i, alpha));
                d = d.derivative(1);
            }
            rep.check("classical-ode" + ctx, classical_ode_residual(p, n, alpha));
        }
    }
    return rep;
}

/// The three ladder relations for 2 <= n <= max_n.
inline VerifyReport suite_relations(const std::vector<Rational>& alphas, int max_n = 12) {
    VerifyReport rep("relations");
    static constexpr UltraRelation kinds[] = {UltraRelation::x_derivative,
                                              UltraRelation::degree_ladder,
                                              UltraRelation::parameter_shift};
    static const char* names[] = {"x-derivative", "degree-ladder", "parameter-shift"};
    for (const auto& alpha : alphas) {
        for (int n = 2; n <= max_n; ++n) {
            for (int r = 0; r < 3; ++r) {
                rep.check(std::string(names[r]) + " n=" + std::to_string(n) + " alpha=" + alpha.str(),
                          relation_residual(kinds[r], n, alpha));
            }
        }
    }
    return rep;
}

/// Systems layer: the five defining systems, the recurrence/closed-form
/// agreement of the order-zero coefficient, and the synthesis-route
/// agreement of the full coefficient family.
inline VerifyReport suite_systems(const std::vector<Rational>& alphas,
                                  const std::vector<Rational>& a01s, int max_n = 10) {
    VerifyReport rep("systems");
    for (const auto& alpha : alphas) {
        for (const auto& a01 : a01s) {
            for (int n = 0; n <= max_n; ++n) {
                rep.merge(verify_defining_systems(alpha, a01, n));
            }
            std::vector<Rational> rec = a0_recurrence(30, alpha, a01);
            for (int n = 0; n <= 30; ++n) {
                Rational diff = rec[static_cast<std::size_t>(n)] - a0_closed(n, alpha, a01);
                rep.check("a0 n=" + std::to_string(n) + " alpha=" + alpha.str() + " a01=" + a01.str(),
                          UniPoly::constant(diff));
            }
        }
        for (const Rational a01 : {Rational(0), Rational(1)}) {
            CoeffSet synth = coeffs_via_inversion(alpha, a01, 10);
            for (int i = 1; i <= synth.max_i; ++i) {
                const std::string ctx = " i=" + std::to_string(i) + " alpha=" + alpha.str() +
                                        " a01=" + a01.str();
                rep.check_equal("synthesis-b" + ctx, synth.b_at(i), b_coeff(i));
                rep.check_equal("synthesis-c" + ctx, synth.c_at(i), c_coeff(i, alpha));
            }
        }
    }
    return rep;
}

inline VerifyReport suite_telescope(const std::vector<Rational>& alphas, int max_n = 20) {
    VerifyReport rep("telescope");
    for (const auto& alpha : alphas) {
        for (int n = 1; n <= max_n; ++n) {
            rep.merge(telescope_check(n, alpha, Parity::even));
            rep.merge(telescope_check(n, alpha, Parity::odd));
        }
    }
    return rep;
}

inline VerifyReport suite_collapse(const std::vector<Rational>& alphas, int max_i = 12) {
    VerifyReport rep("cc");
    for (const auto& alpha : alphas) {
        for (int i = 2; i <= max_i; ++i) {
            rep.merge(c_sum_collapse_check(i, alpha));
        }
    }
    return rep;
}

/// Alternative-route coefficients must reproduce the closed forms.
inline VerifyReport suite_alt(const std::vector<Rational>& alphas, int max_i = 10) {
    VerifyReport rep("alt");
    for (const auto& alpha : alphas) {
        for (int i = 1; i <= max_i; ++i) {
            const std::string ctx = " i=" + std::to_string(i) + " alpha=" + alpha.str();
            rep.check_equal("alt-b" + ctx, b_coeff_alt(i, alpha), b_coeff(i));
            rep.check_equal("alt-c" + ctx, c_coeff_alt(i, alpha), c_coeff(i, alpha));
        }
    }
    return rep;
}

/// The full differential equation over the (alpha, M, n, a01) grid. The
/// residual is cubic in M for fixed (alpha, n, a01), so passing at the five
/// default M values certifies every M.
inline VerifyReport suite_ode(const std::vector<Rational>& alphas, const std::vector<Rational>& ms,
                              const std::vector<Rational>& a01s, int max_n = 10) {
    VerifyReport rep("ode");
    for (const auto& alpha : alphas) {
        for (const auto& a01 : a01s) {
            for (int n = 0; n <= max_n; ++n) {
                for (const auto& m : ms) {
                    rep.check("ode n=" + std::to_string(n) + " alpha=" + alpha.str() + " m=" +
                                  m.str() + " a01=" + a01.str(),
                              ode_residual(alpha, m, n, a01));
                }
            }
        }
    }
    return rep;
}

/// Finite order at nonnegative integer parameters 0..3.
inline VerifyReport suite_order() {
    VerifyReport rep("order");
    for (int a = 0; a <= 3; ++a) {
        const std::string ctx = " alpha=" + std::to_string(a);
        try {
            FiniteOrder fo = finite_order(Rational(a), 2 * a + 12);
            rep.require("order-value" + ctx, fo.order == 2 * a + 4);
        } catch (const consistency_error& e) {
            rep.require(std::string("order-probe") + ctx + ": " + e.what(), false);
        }
    }
    return rep;
}

/// Randomized build-then-solve round trips: random coefficient families
/// rebuild their right-hand sides and must be recovered exactly.
inline VerifyReport suite_solver_roundtrip(const std::vector<Rational>& alphas, int cases = 25,
                                           unsigned seed = 8675309, int max_i = 6) {
    VerifyReport rep("solver-roundtrip");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num_dist(-20, 20);
    std::uniform_int_distribution<int> den_dist(1, 20);
    for (int t = 0; t < cases; ++t) {
        const Rational& alpha = alphas[static_cast<std::size_t>(t) % alphas.size()];
        std::vector<UniPoly> q;
        for (int i = 1; i <= max_i; ++i) {
            std::uniform_int_distribution<int> deg_dist(0, i);
            int d = deg_dist(rng);
            std::vector<Rational> coeffs;
            coeffs.reserve(static_cast<std::size_t>(d) + 1);
            for (int k = 0; k <= d; ++k) coeffs.emplace_back(num_dist(rng), den_dist(rng));
            q.emplace_back(std::move(coeffs));
        }
        RhsSequence rhs{alpha, {}};
        for (int n = 1; n <= max_i; ++n) {
            UniPoly d = ultra_poly(n, alpha);
            UniPoly f;
            for (int i = 1; i <= n; ++i) {
                d = d.derivative(1);
                f += q[static_cast<std::size_t>(i) - 1] * d;
            }
            rhs.entries.push_back(std::move(f));
        }
        SolutionSequence sol = solve_derivative_system(rhs);
        for (int i = 1; i <= max_i; ++i) {
            rep.check_equal("roundtrip case=" + std::to_string(t) + " i=" + std::to_string(i) +
                                " alpha=" + alpha.str(),
                            sol.a(i), q[static_cast<std::size_t>(i) - 1]);
        }
    }
    return rep;
}

}  // namespace gup

#endif
