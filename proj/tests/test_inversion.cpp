#include <catch2/catch.hpp>

#include <vector>

#include "gup/inversion.hpp"

using namespace gup;

namespace {

RhsSequence second_derivative_rhs(const Rational& alpha, int n_max) {
    RhsSequence rhs{alpha, {}};
    for (int n = 1; n <= n_max; ++n) {
        rhs.entries.push_back(ultra_poly(n, alpha).derivative(2));
    }
    return rhs;
}

}  // namespace

TEST_CASE("inversion sum collapses to the Kronecker delta") {
    CHECK(inversion_sum(0, 0, Rational(7, 3)) == UniPoly::constant(1));
    CHECK(inversion_sum(5, 5, Rational(-1, 2)) == UniPoly::constant(1));
    CHECK(inversion_sum(3, 1, Rational(1, 2)).is_zero());
    CHECK(inversion_sum(4, 0, Rational(-1, 2)).is_zero());  // continuity point
    CHECK_THROWS_AS(inversion_sum(1, 2, Rational(0)), std::domain_error);
    // a genuine singularity outside alpha > -1 propagates as a pole
    CHECK_THROWS_AS(inversion_sum(1, 0, Rational(-1)), pole_error);
}

TEST_CASE("reflected sum produces scaled monomials") {
    CHECK(reflected_inversion_sum(2, 2, Rational(1)) == UniPoly::constant(1));
    for (int j = 0; j <= 3; ++j) {
        CHECK(reflected_inversion_sum(j + 1, j, Rational(0)) == UniPoly::x());
    }
    CHECK(reflected_inversion_sum(2, 0, Rational(7, 3)) == UniPoly::monomial(Rational(1, 2), 2));
    CHECK(reflected_inversion_sum(5, 1, Rational(-1, 2)) ==
          UniPoly::monomial(Rational(1) / factorial(4), 4));
    CHECK_THROWS_AS(reflected_inversion_sum(0, 1, Rational(0)), std::domain_error);
}

TEST_CASE("solving with F_n = D^2 P_n selects the order-two coefficient") {
    SolutionSequence sol = solve_derivative_system(second_derivative_rhs(Rational(1, 2), 4));
    CHECK(sol.a(1).is_zero());
    CHECK(sol.a(2) == UniPoly::constant(1));
    CHECK(sol.a(3).is_zero());
    CHECK(sol.a(4).is_zero());
}

TEST_CASE("solving with F_n = x D P_n selects a degree-one coefficient") {
    RhsSequence rhs{Rational(-1, 4), {}};
    for (int n = 1; n <= 4; ++n) {
        rhs.entries.push_back(UniPoly::x() * ultra_poly(n, rhs.alpha).derivative(1));
    }
    SolutionSequence sol = solve_derivative_system(rhs);
    CHECK(sol.a(1) == UniPoly::x());
    CHECK(sol.a(2).is_zero());
    CHECK(sol.a(3).is_zero());
    CHECK(sol.a(4).is_zero());
}

TEST_CASE("linearity: F_n = D P_n + D^2 P_n") {
    RhsSequence rhs{Rational(0), {}};
    for (int n = 1; n <= 3; ++n) {
        UniPoly p = ultra_poly(n, rhs.alpha);
        rhs.entries.push_back(p.derivative(1) + p.derivative(2));
    }
    SolutionSequence sol = solve_derivative_system(rhs);
    CHECK(sol.a(1) == UniPoly::constant(1));
    CHECK(sol.a(2) == UniPoly::constant(1));
    CHECK(sol.a(3).is_zero());
}

TEST_CASE("verification accepts solved systems and reports corrupted ones") {
    RhsSequence rhs = second_derivative_rhs(Rational(7, 3), 5);
    SolutionSequence sol = solve_derivative_system(rhs);
    CHECK(verify_derivative_system(rhs, sol).passed());

    SECTION("zero solution fails at n = 1 with residual P_1'") {
        RhsSequence first{Rational(1, 2), {}};
        UniPoly p1_prime = ultra_poly(1, first.alpha).derivative(1);
        first.entries.push_back(p1_prime);
        SolutionSequence zero{first.alpha, {UniPoly()}};
        VerifyReport rep = verify_derivative_system(first, zero);
        REQUIRE_FALSE(rep.passed());
        REQUIRE(rep.first_failure() != nullptr);
        CHECK(rep.first_failure()->where.find("n=1") != std::string::npos);
        CHECK(rep.first_failure()->residual == -p1_prime);
    }

    SECTION("trivial system accepts the zero solution") {
        RhsSequence trivial{Rational(3), {UniPoly()}};
        SolutionSequence zero{trivial.alpha, {UniPoly()}};
        CHECK(verify_derivative_system(trivial, zero).passed());
    }

    SECTION("length mismatch is a usage error") {
        SolutionSequence bad{rhs.alpha, {UniPoly()}};
        CHECK_THROWS_AS(verify_derivative_system(rhs, bad), std::domain_error);
    }
}

TEST_CASE("solution coefficients are triangular in the right-hand sides") {
    RhsSequence rhs = second_derivative_rhs(Rational(-1, 2), 5);
    SolutionSequence base = solve_derivative_system(rhs);

    for (int perturb = 2; perturb <= 5; ++perturb) {
        RhsSequence bumped = rhs;
        bumped.entries[static_cast<std::size_t>(perturb) - 1] += UniPoly::monomial(Rational(5, 7), 1);
        SolutionSequence moved = solve_derivative_system(bumped);
        for (int i = 1; i < perturb; ++i) {
            CHECK(moved.a(i) == base.a(i));
        }
        CHECK_FALSE(moved.a(perturb) == base.a(perturb));
    }
}
