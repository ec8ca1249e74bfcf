#include <catch2/catch.hpp>

#include <vector>

#include "gup/diffeq.hpp"

using namespace gup;

namespace {

const std::vector<Rational>& alpha_grid() {
    static const std::vector<Rational> grid = {Rational(-1, 2), Rational(-1, 4), Rational(0),
                                               Rational(1, 2),  Rational(1),     Rational(3),
                                               Rational(7, 3)};
    return grid;
}

}  // namespace

TEST_CASE("mixing factors") {
    SECTION("M = 0 switches the point masses off") {
        for (const auto& alpha : alpha_grid()) {
            GenFactors f = gen_factors(4, alpha, Rational(0));
            CHECK(f.c0 == Rational(1));
            CHECK(f.c1 == Rational(0));
        }
    }
    SECTION("n = 1 in closed form") {
        for (const Rational m : {Rational(1, 2), Rational(3)}) {
            GenFactors f = gen_factors(1, Rational(7, 3), m);
            Rational one_plus_2m = 1 + 2 * m;
            CHECK(f.c0 == one_plus_2m * one_plus_2m);
            CHECK(f.c1 == 2 * m + 4 * m * m);
        }
    }
    SECTION("n = 0 has no derivative part") {
        GenFactors f = gen_factors(0, Rational(-1, 2), Rational(10));
        CHECK(f.c0 == Rational(1));
        CHECK(f.c1 == Rational(0));
    }
    CHECK_THROWS_AS(gen_factors(2, Rational(-2), Rational(1)), std::domain_error);
    CHECK_THROWS_AS(gen_factors(2, Rational(0), Rational(-1)), std::domain_error);
}

TEST_CASE("generalized polynomial") {
    CHECK(gen_poly(3, Rational(1, 2), Rational(0)) == ultra_poly(3, Rational(1, 2)));
    CHECK(gen_poly(0, Rational(-1, 2), Rational(5)) == UniPoly::constant(1));
    // n = 1: (1 + 2M)(alpha + 1) x
    CHECK(gen_poly(1, Rational(7, 3), Rational(3)) == UniPoly::monomial(Rational(70, 3), 1));
    CHECK(gen_poly(1, Rational(-1, 2), Rational(1)) == UniPoly::monomial(Rational(3, 2), 1));
    for (const auto& alpha : alpha_grid()) {
        for (int n = 0; n <= 8; ++n) {
            CHECK(gen_poly(n, alpha, Rational(1)).degree() == n);
        }
    }
}

TEST_CASE("order-zero coefficient closed form") {
    for (const auto& alpha : alpha_grid()) {
        CHECK(a0_closed(0, alpha, Rational(9)) == Rational(0));
        CHECK(a0_closed(1, alpha, Rational(9)) == Rational(9));
        CHECK(a0_closed(2, alpha, Rational(9)) == 4 * (2 * alpha + 3));
    }
    CHECK(a0_closed(2, Rational(7, 3), Rational(0)) == Rational(92, 3));
}

TEST_CASE("order-zero recurrence equals the closed form") {
    // both routes computed independently at n = 4, alpha = 0
    std::vector<Rational> rec = a0_recurrence(6, Rational(0), Rational(0));
    CHECK(rec[2] == Rational(12));
    CHECK(rec[4] == rec[2] + 4 * Rational(7) * gen_binomial(Rational(4), 2));
    CHECK(rec[4] == Rational(180));
    CHECK(a0_closed(4, Rational(0), Rational(0)) == Rational(180));

    // n = 3 for general alpha: a01 + 4(2a+3)(2a+5) from either route
    for (const auto& alpha : alpha_grid()) {
        Rational expect = Rational(11, 7) + 4 * (2 * alpha + 3) * (2 * alpha + 5);
        CHECK(a0_closed(3, alpha, Rational(11, 7)) == expect);
        CHECK(a0_recurrence(3, alpha, Rational(11, 7))[3] == expect);
    }

    for (const auto& alpha : alpha_grid()) {
        for (const Rational a01 : {Rational(0), Rational(1)}) {
            std::vector<Rational> table = a0_recurrence(30, alpha, a01);
            for (int n = 0; n <= 30; ++n) {
                CHECK(table[static_cast<std::size_t>(n)] == a0_closed(n, alpha, a01));
            }
        }
    }
    CHECK_THROWS_AS(a0_recurrence(0, Rational(0), Rational(0)), std::domain_error);
}

TEST_CASE("a01-proportional coefficients") {
    CHECK(b_coeff(1) == UniPoly::monomial(-1, 1));
    CHECK(b_coeff(2) == UniPoly::monomial(1, 2));
    CHECK(b_coeff(3) == UniPoly::monomial(Rational(-2, 3), 3));
    CHECK_THROWS_AS(b_coeff(0), std::domain_error);
    for (int i = 1; i <= 12; ++i) {
        CHECK(b_coeff(i).degree() == i);
        // only the top monomial is present
        for (int k = 0; k < i; ++k) CHECK(b_coeff(i).coeff(k).is_zero());
    }
}

TEST_CASE("fixed coefficients") {
    CHECK(c_coeff(1, Rational(7, 3)).is_zero());
    CHECK(c_coeff(2, Rational(0)) == UniPoly(std::vector<Rational>{6, 0, -6}));
    CHECK(c_coeff(3, Rational(0)) == UniPoly(std::vector<Rational>{0, 4, 0, -4}));
    // (4/3)(2a+3)(a+1) x (1 - x^2) at alpha = 1/2
    UniPoly c3 = c_coeff(3, Rational(1, 2));
    Rational lead = Rational(4, 3) * Rational(4) * Rational(3, 2);
    CHECK(c3 == UniPoly::monomial(lead, 1) - UniPoly::monomial(lead, 3));
    CHECK_THROWS_AS(c_coeff(0, Rational(0)), std::domain_error);

    SECTION("degree bound and parity") {
        for (const auto& alpha : alpha_grid()) {
            for (int i = 1; i <= 10; ++i) {
                UniPoly ci = c_coeff(i, alpha);
                if (!ci.is_zero()) {
                    CHECK(*ci.degree() <= i);
                }
                // c_i carries the parity of i
                for (int k = (i % 2 == 0) ? 1 : 0; k <= i; k += 2) {
                    CHECK(ci.coeff(k).is_zero());
                }
            }
        }
    }
}

TEST_CASE("synthesis through the inversion route") {
    for (const Rational& alpha : {Rational(-1, 2), Rational(7, 3)}) {
        for (const Rational a01 : {Rational(0), Rational(1)}) {
            CoeffSet set = coeffs_via_inversion(alpha, a01, 8);
            for (int i = 1; i <= 8; ++i) {
                CHECK(set.b_at(i) == b_coeff(i));
                CHECK(set.c_at(i) == c_coeff(i, alpha));
            }
        }
    }

    SECTION("a_1 = -a01 x") {
        CoeffSet set = coeffs_via_inversion(Rational(1, 2), Rational(5), 3);
        CHECK(set.a_at(1) == UniPoly::monomial(-5, 1));
    }

    SECTION("degree bounds of the synthesized family") {
        CoeffSet set = coeffs_via_inversion(Rational(0), Rational(1), 8);
        for (int i = 1; i <= 8; ++i) {
            CHECK(set.b_at(i).degree() == i);
            UniPoly ai = set.a_at(i);
            if (!ai.is_zero()) CHECK(*ai.degree() <= i);
        }
    }

    CHECK_THROWS_AS(coeffs_via_inversion(Rational(-3, 2), Rational(0), 4), std::domain_error);
    CHECK_THROWS_AS(coeffs_via_inversion(Rational(0), Rational(0), 0), std::domain_error);
}

TEST_CASE("full equation residual vanishes") {
    // M = 0 reduces to the classical equation
    CHECK(ode_residual(Rational(7, 3), Rational(0), 5, Rational(1)).is_zero());
    // degree 1 kills both parts for any parameters
    CHECK(ode_residual(Rational(3), Rational(10), 1, Rational(7)).is_zero());
    // full pipeline instances, including the continuity point
    CHECK(ode_residual(Rational(1, 2), Rational(1), 6, Rational(3)).is_zero());
    CHECK(ode_residual(Rational(-1, 2), Rational(3), 7, Rational(1)).is_zero());
    // sanity: a wrong coefficient family leaves a nonzero residual
    UniPoly y = gen_poly(4, Rational(0), Rational(1));
    UniPoly wrong = y * (a0_closed(4, Rational(0), Rational(0)) + 1);
    UniPoly d = y;
    for (int i = 1; i <= 4; ++i) {
        d = d.derivative(1);
        wrong += c_coeff(i, Rational(0)) * d;
    }
    CHECK_FALSE((wrong + classical_ode_residual(y, 4, Rational(0))).is_zero());
}

TEST_CASE("defining systems hold with closed-form coefficients") {
    CHECK(verify_defining_systems(Rational(1, 2), Rational(1), 0).passed());
    CHECK(verify_defining_systems(Rational(-1, 2), Rational(-2), 1).passed());
    for (const auto& alpha : alpha_grid()) {
        for (int n = 0; n <= 8; ++n) {
            VerifyReport rep = verify_defining_systems(alpha, Rational(-2), n);
            INFO(rep.suite);
            CHECK(rep.passed());
            CHECK(rep.checked == (n >= 2 ? 5u : 3u));
        }
    }
}

TEST_CASE("telescoping sums") {
    SECTION("smallest even case collapses to 3 = 3 at alpha = 0") {
        CHECK(gen_binomial(Rational(2), 0) * Rational(3) == Rational(3));
        CHECK(Rational(3) * gen_binomial(Rational(4), 0) == Rational(3));
        CHECK(telescope_check(1, Rational(0), Parity::even).passed());
    }
    SECTION("smallest odd case collapses to 15 = 15 at alpha = 0") {
        CHECK(gen_binomial(Rational(3), 1) * Rational(5) == Rational(15));
        CHECK(Rational(3) * gen_binomial(Rational(5), 1) == Rational(15));
        CHECK(telescope_check(1, Rational(0), Parity::odd).passed());
    }
    for (const auto& alpha : alpha_grid()) {
        for (int n = 1; n <= 20; ++n) {
            CHECK(telescope_check(n, alpha, Parity::even).passed());
            CHECK(telescope_check(n, alpha, Parity::odd).passed());
        }
    }
    CHECK_THROWS_AS(telescope_check(0, Rational(0), Parity::even), std::domain_error);
}

TEST_CASE("collapse identity inside the c-family synthesis") {
    SECTION("single-term case i = 2 gives the constant 1/2 on both sides") {
        UniPoly rhs = ultra_poly(0, Rational(7, 3) - 2 + 3) * (Rational(1) / factorial(2));
        CHECK(rhs == UniPoly::constant(Rational(1, 2)));
        for (const auto& alpha : alpha_grid()) {
            CHECK(c_sum_collapse_check(2, alpha).passed());
        }
    }
    CHECK(c_sum_collapse_check(3, Rational(0)).passed());
    CHECK(c_sum_collapse_check(8, Rational(-1, 2)).passed());
    for (const auto& alpha : alpha_grid()) {
        for (int i = 2; i <= 12; ++i) {
            CHECK(c_sum_collapse_check(i, alpha).passed());
        }
    }
    CHECK_THROWS_AS(c_sum_collapse_check(1, Rational(0)), std::domain_error);
}

TEST_CASE("finite order at nonnegative integer parameters") {
    SECTION("alpha = 0: order 4, leading -(1/2)(x^2-1)^2") {
        FiniteOrder fo = finite_order(Rational(0), 12);
        CHECK(fo.order == 4);
        UniPoly x2m1(std::vector<Rational>{-1, 0, 1});
        CHECK(fo.leading == x2m1.pow(2) * Rational(-1, 2));
    }
    SECTION("alpha = 1: order 6, leading -(1/36)(x^2-1)^3") {
        FiniteOrder fo = finite_order(Rational(1), 14);
        CHECK(fo.order == 6);
        UniPoly x2m1(std::vector<Rational>{-1, 0, 1});
        CHECK(fo.leading == x2m1.pow(3) * Rational(-1, 36));
    }
    SECTION("coefficients past the order vanish") {
        for (int a = 0; a <= 3; ++a) {
            for (int i = 2 * a + 5; i <= 2 * a + 12; ++i) {
                CHECK(c_coeff(i, Rational(a)).is_zero());
            }
            CHECK_FALSE(c_coeff(2 * a + 4, Rational(a)).is_zero());
        }
    }
    CHECK_THROWS_AS(finite_order(Rational(1, 2), 12), std::domain_error);
    CHECK_THROWS_AS(finite_order(Rational(-1), 12), std::domain_error);
    CHECK_THROWS_AS(finite_order(Rational(0), 4), std::domain_error);
}

TEST_CASE("alternative-route coefficients match the closed forms") {
    for (const auto& alpha : alpha_grid()) {
        CHECK(b_coeff_alt(1, alpha) == UniPoly::monomial(-1, 1));
        CHECK(c_coeff_alt(1, alpha).is_zero());
    }
    CHECK(c_coeff_alt(2, Rational(0)) == UniPoly(std::vector<Rational>{6, 0, -6}));
    CHECK(b_coeff_alt(2, Rational(0)) == b_coeff(2));
    CHECK(b_coeff_alt(5, Rational(-1, 2)) == b_coeff(5));
    CHECK(c_coeff_alt(6, Rational(7, 3)) == c_coeff(6, Rational(7, 3)));
    for (const Rational& alpha : {Rational(-1, 2), Rational(1)}) {
        for (int i = 1; i <= 6; ++i) {
            CHECK(b_coeff_alt(i, alpha) == b_coeff(i));
            CHECK(c_coeff_alt(i, alpha) == c_coeff(i, alpha));
        }
    }
    CHECK_THROWS_AS(b_coeff_alt(0, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(c_coeff_alt(0, Rational(0)), std::domain_error);
}
