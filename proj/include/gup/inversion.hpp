#ifndef GUP_INVERSION_HPP
#define GUP_INVERSION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gup/linfactor.hpp"
#include "gup/report.hpp"
#include "gup/ultraspherical.hpp"

namespace gup {

/// Right-hand sides F_1 ... F_N of an n-indexed derivative system at a
/// fixed parameter; entries[n-1] holds F_n.
struct RhsSequence {
    Rational alpha;
    std::vector<UniPoly> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const UniPoly& f(int n) const { return entries.at(static_cast<std::size_t>(n) - 1); }
};

/// Solution coefficients A_1 ... A_N; entries[i-1] holds A_i.
struct SolutionSequence {
    Rational alpha;
    std::vector<UniPoly> entries;

    int size() const { return static_cast<int>(entries.size()); }
    const UniPoly& a(int i) const { return entries.at(static_cast<std::size_t>(i) - 1); }
};

namespace detail {

/// (2 alpha + 2k + 1) / (2 alpha + k + j + 1)_{i-j+1}, cancelled in alpha
/// before evaluating. The numerator always cancels against the t = k - j
/// denominator factor, so the removable singularity at 2 alpha + 1 = 0
/// evaluates cleanly.
inline Rational inversion_prefactor(int i, int j, int k, const Rational& alpha) {
    LinFactorRatio r;
    r.num_factor(2, 2 * k + 1);
    r.den_pochhammer(2, k + j + 1, i - j + 1);
    return r.eval_at(alpha);
}

/// (2 alpha + 2j + 1) / (2 alpha + j + 1)_{i+1}, cancelled likewise.
inline Rational solution_prefactor(int i, int j, const Rational& alpha) {
    LinFactorRatio r;
    r.num_factor(2, 2 * j + 1);
    r.den_pochhammer(2, j + 1, i + 1);
    return r.eval_at(alpha);
}

}  // namespace detail

/// The biorthogonality sum pairing the mirror family at parameter
/// -alpha-i-1 with the family at parameter alpha+j. Contract: the constant
/// polynomial delta_{ij}.
inline UniPoly inversion_sum(int i, int j, const Rational& alpha) {
    if (i < 0 || j < 0 || j > i) {
        throw std::domain_error("inversion_sum: requires 0 <= j <= i");
    }
    const Rational mirror = -alpha - (i + 1);
    UniPoly sum;
    for (int k = j; k <= i; ++k) {
        UniPoly term = ultra_poly(i - k, mirror) * ultra_poly(k - j, alpha + j);
        sum += term * detail::inversion_prefactor(i, j, k, alpha);
    }
    return sum;
}

/// Same sum with the mirror factor reflected through x -> -x.
/// Contract: x^{i-j} / (i-j)!.
inline UniPoly reflected_inversion_sum(int i, int j, const Rational& alpha) {
    if (i < 0 || j < 0 || j > i) {
        throw std::domain_error("reflected_inversion_sum: requires 0 <= j <= i");
    }
    const Rational mirror = -alpha - (i + 1);
    UniPoly sum;
    for (int k = j; k <= i; ++k) {
        UniPoly term = ultra_poly(i - k, mirror).reflected() * ultra_poly(k - j, alpha + j);
        sum += term * detail::inversion_prefactor(i, j, k, alpha);
    }
    return sum;
}

/// Solves sum_i A_i(x) D^i P_n = F_n (n = 1..N) for the n-independent
/// coefficients A_i:
///   A_i = 2^i sum_{j<=i} [(2a+2j+1)/(2a+j+1)_{i+1}] P_{i-j}^{mirror} F_j.
inline SolutionSequence solve_derivative_system(const RhsSequence& rhs) {
    SolutionSequence sol{rhs.alpha, {}};
    sol.entries.reserve(rhs.entries.size());
    for (int i = 1; i <= rhs.size(); ++i) {
        const Rational mirror = -rhs.alpha - (i + 1);
        UniPoly acc;
        for (int j = 1; j <= i; ++j) {
            UniPoly term = ultra_poly(i - j, mirror) * rhs.f(j);
            acc += term * detail::solution_prefactor(i, j, rhs.alpha);
        }
        sol.entries.push_back(acc * two_pow(i));
    }
    return sol;
}

/// Substitutes a candidate solution back into the system. The i-sum
/// truncates at i = n because D^i P_n vanishes beyond the degree.
inline VerifyReport verify_derivative_system(const RhsSequence& rhs, const SolutionSequence& sol) {
    if (rhs.size() != sol.size()) {
        throw std::domain_error("verify_derivative_system: length mismatch");
    }
    VerifyReport report("derivative-system");
    for (int n = 1; n <= rhs.size(); ++n) {
        UniPoly d = ultra_poly(n, rhs.alpha);
        UniPoly lhs;
        for (int i = 1; i <= n && i <= sol.size(); ++i) {
            d = d.derivative(1);
            lhs += sol.a(i) * d;
        }
        report.check("n=" + std::to_string(n) + " alpha=" + rhs.alpha.str(), lhs - rhs.f(n));
    }
    return report;
}

}  // namespace gup

#endif
