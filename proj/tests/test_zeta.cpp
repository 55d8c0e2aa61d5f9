#include <doctest.h>

#include <cmath>

#include "regzeta/zeta.hpp"

using namespace regzeta;

namespace {

const GroupForm GL{Family::GL};
const GroupForm GU{Family::GU};
const GroupForm SL{Family::SL};
const GroupForm SU{Family::SU};

}  // namespace

TEST_CASE("symbolic construction") {
    const ZetaExpr z1 = build_zeta(GL, 1, Integer(3));
    CHECK(z1.prefactor_base_exponent == 1);
    CHECK(z1.prefactor_s_exponent == 0);
    REQUIRE(z1.terms.size() == 1);
    CHECK(z1.terms[0].c == 6);  // (q-1) * w_1(3)
    CHECK(z1.terms[0].D == 1);

    const ZetaExpr z2 = build_zeta(GL, 2, Integer(3));
    CHECK(z2.prefactor_base_exponent == 2);
    CHECK(z2.prefactor_s_exponent == 1);
    REQUIRE(z2.terms.size() == 3);
    CHECK(z2.terms[0].c == 12);
    CHECK(z2.terms[0].D == 12);
    CHECK(z2.terms[1].c == 18);
    CHECK(z2.terms[1].D == 8);
    CHECK(z2.terms[2].c == 24);
    CHECK(z2.terms[2].D == 6);

    const ZetaExpr su = build_zeta(SU, 2, Integer(3));
    CHECK(su.prefactor_base_exponent == 1);
    REQUIRE(su.terms.size() == 3);
    // tau = {(1,2):1}: iota = gcd(2, q+1) = 2, c = (4/4)*12*(1/3)*3 = 12,
    // D = 96/(12*2) = 4.
    CHECK(su.terms[1].c == 12);
    CHECK(su.terms[1].D == 4);
}

TEST_CASE("abscissa") {
    CHECK(*abscissa(build_zeta(GL, 3, Integer(3))) == Rational(1));
    CHECK(*abscissa(build_zeta(SL, 2, Integer(3))) == Rational(1));
    CHECK(*abscissa(build_zeta(GL, 2, Integer(3))) == Rational(2));
    CHECK(*abscissa(build_zeta(SL, 3, Integer(5))) == make_rational(2, 3));
    CHECK(!abscissa(build_zeta(GL, 1, Integer(3))).has_value());
}

TEST_CASE("numeric evaluation") {
    const ZetaExpr z = build_zeta(GL, 2, Integer(3));
    // (12*12^{-4} + 18*8^{-4} + 24*6^{-4})/(1 - 3^{-2}) = 433/16384 exactly.
    const double expected = 433.0 / 16384.0;
    CHECK(std::abs(evaluate(z, 4.0) - expected) <= 1e-12 * expected);

    CHECK_THROWS_AS(evaluate(z, 2.0), Diverges);  // s equals the abscissa
    CHECK_THROWS_AS(evaluate(z, 1.0), Diverges);
    CHECK_THROWS_AS(evaluate(build_zeta(GL, 1, Integer(3)), 5.0), Diverges);
}

TEST_CASE("Dirichlet slices") {
    const ZetaExpr gl = build_zeta(GL, 2, Integer(3));
    const DirichletSlice s1 = dirichlet_coeffs(gl, Integer(12));
    REQUIRE(s1.coeffs.size() == 3);
    CHECK(s1.coeffs.at(Integer(6)) == 24);
    CHECK(s1.coeffs.at(Integer(8)) == 18);
    CHECK(s1.coeffs.at(Integer(12)) == 12);  // level-2 minimum is 18 > 12

    CHECK(dirichlet_coeffs(gl, Integer(5)).coeffs.empty());

    // SL_2(F_3): level-1 contributions (4:12, 6:4, 12:2) plus the level-2
    // type {(1,2):1} landing exactly at degree 4*3 = 12 with count 12*3.
    const DirichletSlice s2 = dirichlet_coeffs(build_zeta(SL, 2, Integer(3)), Integer(12));
    REQUIRE(s2.coeffs.size() == 3);
    CHECK(s2.coeffs.at(Integer(4)) == 12);
    CHECK(s2.coeffs.at(Integer(6)) == 4);
    CHECK(s2.coeffs.at(Integer(12)) == 2 + 36);

    CHECK_THROWS_AS(dirichlet_coeffs(build_zeta(GL, 1, Integer(3)), Integer(100)),
                    Unbounded);
}

TEST_CASE("slices agree with a direct walk over (level, type) pairs") {
    for (auto form : {GL, GU, SL, SU})
        for (int n : {2, 3})
            for (long long qv : {3, 5}) {
                const Integer q(qv);
                const ZetaExpr z = build_zeta(form, n, q);
                Integer max_D = 0, min_D = 0;
                for (const auto& t : z.terms) {
                    if (t.D > max_D) max_D = t.D;
                    if (min_D == 0 || t.D < min_D) min_D = t.D;
                }
                const Integer step = ipow(q, z.prefactor_s_exponent);
                const Integer M = max_D * step * step;  // spans three full levels
                REQUIRE(min_D * ipow(step, 6) > M);     // six levels are plenty

                std::map<Integer, Rational> direct;
                for (int level = 1; level <= 6; ++level)
                    for (const auto& tau : enumerate_types(n)) {
                        const Integer deg = degree(form, n, q, level, tau);
                        if (deg <= M) direct[deg] += count_rational(form, n, q, level, tau);
                    }
                const DirichletSlice slice = dirichlet_coeffs(z, M);
                CHECK(slice.coeffs == direct);
            }
}

TEST_CASE("GL and GU term data are Ennola shadows") {
    // Termwise: the GU (degree, count) polynomials in q are the x -> -x
    // transforms of the GL ones, up to the documented sign normalization.
    for (int n = 1; n <= 4; ++n)
        for (const auto& tau : enumerate_types(n)) {
            const auto rep = ennola_check(n, 1, tau);
            CHECK(rep.holds);
            const IntPolynomial cu_gl = u_poly(tau, +1);
            const IntPolynomial cu_gu = u_poly(tau, -1);
            IntPolynomial dual = cu_gl.negate_variable();
            if (cu_gl.degree() % 2 != 0) dual = -dual;
            CHECK(dual == cu_gu);
        }
}
