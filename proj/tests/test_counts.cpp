#include <doctest.h>

#include "regzeta/counts.hpp"

using namespace regzeta;

namespace {

NType t(int n, std::vector<std::array<int, 3>> entries) {
    return NType::make(n, std::move(entries));
}

const GroupForm GL{Family::GL};
const GroupForm GU{Family::GU};
const GroupForm SL{Family::SL};
const GroupForm SU{Family::SU};

}  // namespace

TEST_CASE("degrees") {
    CHECK(degree(GL, 2, Integer(3), 1, t(2, {{1, 1, 2}})) == 12);  // 48/4
    CHECK(degree(GL, 2, Integer(3), 2, t(2, {{1, 1, 2}})) == 36);  // 3 * 12
    CHECK(degree(SL, 2, Integer(3), 1, t(2, {{1, 2, 1}})) == 4);   // 48/(6*2)
    CHECK(degree(GU, 2, Integer(3), 1, t(2, {{2, 1, 1}})) == 12);  // q(q+1)
}

TEST_CASE("counts") {
    CHECK(count(GL, 2, Integer(3), 1, t(2, {{1, 1, 2}})) == 12);   // 4 * 3
    CHECK(count(GL, 1, Integer(3), 2, t(1, {{1, 1, 1}})) == 18);   // 3 * 2 * 3
    CHECK(count(SL, 2, Integer(3), 1, t(2, {{1, 2, 1}})) == 12);   // (4/2)*6*(1/3)*3
    CHECK(count(GU, 2, Integer(3), 1, t(2, {{2, 1, 1}})) == 24);   // 8 * 3
}

TEST_CASE("degree tables") {
    const auto gl1 = degree_table(GL, 1, Integer(7), 4);
    REQUIRE(gl1.size() == 1);
    CHECK(gl1[0].degree == 1);  // C(1,2) = 0 and v = u

    const auto gl2 = degree_table(GL, 2, Integer(3), 1);
    REQUIRE(gl2.size() == 3);
    CHECK(gl2[0].degree == 12);
    CHECK(gl2[1].degree == 8);
    CHECK(gl2[2].degree == 6);
    CHECK(gl2[0].count == 12);
    CHECK(gl2[1].count == 18);
    CHECK(gl2[2].count == 24);
    CHECK(gl2[0].flags.empty());

    // The unitary degrees are the Ennola transforms of the linear ones:
    // (-1)^{deg f} f(-q) gives (6, 8, 12) for q = 3.
    const auto gu2 = degree_table(GU, 2, Integer(3), 1);
    REQUIRE(gu2.size() == 3);
    CHECK(gu2[0].degree == 6);
    CHECK(gu2[1].degree == 8);
    CHECK(gu2[2].degree == 12);
}

TEST_CASE("validity flags") {
    CHECK(validity_flags(GL, 2, Integer(3)).empty());
    CHECK(validity_flags(GL, 3, Integer(3)).count(Validity::q_le_n) == 1);
    CHECK(validity_flags(GL, 2, Integer(4)).count(Validity::even_p_unchecked) == 1);
    CHECK(validity_flags(SL, 3, Integer(3)).count(Validity::p_divides_n) == 1);
    CHECK(validity_flags(SL, 3, Integer(9)).count(Validity::p_divides_n) == 1);
    CHECK(validity_flags(SL, 2, Integer(9)).count(Validity::p_divides_n) == 0);
    CHECK(validity_flags(GL, 2, Integer(6)).count(Validity::q_not_prime_power) == 1);
    CHECK(validity_flags(GL, 1, Integer(3)).count(Validity::n_degenerate) == 1);
}

TEST_CASE("Ennola duality of degree polynomials") {
    // Worked examples.
    const auto r1 = ennola_check(2, 1, t(2, {{2, 1, 1}}));
    CHECK(r1.holds);
    CHECK(to_string(r1.gl_poly) == "x^2 - x");
    CHECK(to_string(r1.gu_poly) == "x^2 + x");
    CHECK(ennola_check(1, 1, t(1, {{1, 1, 1}})).holds);
    CHECK(ennola_check(2, 2, t(2, {{1, 2, 1}})).holds);

    for (int n = 1; n <= 6; ++n)
        for (int level : {1, 2, 3})
            for (const auto& tau : enumerate_types(n))
                CHECK(ennola_check(n, level, tau).holds);
}

TEST_CASE("level scaling") {
    for (auto form : {GL, GU, SL, SU})
        for (int n = 2; n <= 4; ++n)
            for (long long qv : {3, 5}) {
                if (form.special() && n % qv == 0) continue;  // p | n: counts go rational
                for (const auto& tau : enumerate_types(n)) {
                    const Integer q(qv);
                    for (int level : {1, 2}) {
                        const Integer c0 = count(form, n, q, level, tau);
                        const Integer c1 = count(form, n, q, level + 1, tau);
                        const Integer d0 = degree(form, n, q, level, tau);
                        const Integer d1 = degree(form, n, q, level + 1, tau);
                        CHECK(c1 == c0 * ipow(q, static_cast<std::uint64_t>(
                                                     form.special() ? n - 1 : n)));
                        CHECK(d1 == d0 * ipow(q, choose2(n)));
                    }
                }
            }
}

TEST_CASE("special forms with p dividing n") {
    // Off Theorem E's domain the count formula is genuinely non-integral:
    // SL_3 over F_3 with three distinct eigenvalue blocks gives 8/6.
    const NType tau = t(3, {{1, 1, 3}});
    CHECK_THROWS_AS(count(SL, 3, Integer(3), 1, tau), InexactDivision);
    CHECK(count_rational(SL, 3, Integer(3), 1, tau) == make_rational(4, 3));
    // Higher levels pick up powers of q and become integral again.
    CHECK(count(SL, 3, Integer(3), 2, tau) == 12);

    const auto rows = degree_table(SL, 3, Integer(3), 1);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].flags.count(Validity::p_divides_n) == 1);
    CHECK(rows[0].count == make_rational(4, 3));
    CHECK(exact_str(rows[0].count) == "4/3");

    // The degree side stays integral even here (the orbit splits into iota
    // classes of equal size, so iota divides the orbit size).
    for (const auto& row : rows) CHECK(row.degree >= 1);
}

TEST_CASE("special-form counts are nonnegative integers") {
    // The iota^2/(q - eps) and 1/q divisions must land in the integers
    // whenever p does not divide n; count() throws otherwise.
    for (auto form : {SL, SU})
        for (int n = 2; n <= 5; ++n)
            for (long long qv : {3, 5, 7}) {
                if (n % qv == 0) continue;  // q prime here, p = q
                const Integer q(qv);
                for (const auto& tau : enumerate_types(n))
                    CHECK(count(form, n, q, 1, tau) >= 0);
            }
}

TEST_CASE("GU and GL counts share the combinatorial factor") {
    for (int n = 2; n <= 4; ++n)
        for (long long qv : {3, 5})
            for (const auto& tau : enumerate_types(n)) {
                const Integer q(qv);
                // count = u * factor at level one, so factor = count / u.
                const Integer fac_gl =
                    exact_div(count(GL, n, q, 1, tau), u_poly(tau, +1)(q));
                const Integer fac_gu =
                    exact_div(count(GU, n, q, 1, tau), u_poly(tau, -1)(q));
                CHECK(fac_gl == fac_gu);
            }
}

TEST_CASE("sum of squares") {
    CHECK(sum_of_squares(GL, 2, Integer(3)) == 3744);  // 48 * 78
    CHECK(sum_of_squares(SL, 2, Integer(3)) == 624);   // 2*144 + 12*16 + 4*36
    CHECK(sum_of_squares(GU, 2, Integer(3)) == 7488);  // 96 * 78
    CHECK(sum_of_squares(SU, 2, Integer(3)) == 624);

    // 624 + |SL_2(F_3)| = |SL_2(o_2)|.
    const Integer sl2_f3 = exact_div(v_poly(2, +1)(Integer(3)), Integer(2));
    CHECK(sum_of_squares(SL, 2, Integer(3)) + sl2_f3 == ipow(Integer(3), 3) * sl2_f3);
}
