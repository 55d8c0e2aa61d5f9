#include <doctest.h>

#include "regzeta/orders.hpp"

using namespace regzeta;

namespace {

NType t(int n, std::vector<std::array<int, 3>> entries) {
    return NType::make(n, std::move(entries));
}

IntPolynomial ipoly(std::initializer_list<long long> coeffs) {
    std::vector<Integer> c;
    for (auto v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("v polynomials") {
    CHECK(v_poly(1, +1) == ipoly({-1, 1}));  // |GL_1(F_q)| = q - 1
    CHECK(v_poly(2, +1)(Integer(3)) == 48);  // (9-1)(9-3)
    CHECK(v_poly(2, -1)(Integer(3)) == 96);
    CHECK(v_poly(1, -1) == ipoly({1, 1}));   // |GU_1(F_q)| = q + 1

    // Classical re-derivation: |GL_n(F_q)| = prod_{d=1..n} (q^n - q^{n-d}).
    for (int n = 1; n <= 6; ++n)
        for (long long qv : {2, 3, 5}) {
            const Integer q(qv);
            Integer classical = 1;
            for (int d = 1; d <= n; ++d)
                classical *= ipow(q, static_cast<std::uint64_t>(n)) -
                             ipow(q, static_cast<std::uint64_t>(n - d));
            CHECK(v_poly(n, +1)(q) == classical);
        }
}

TEST_CASE("u polynomials") {
    CHECK(u_poly(t(2, {{1, 1, 2}}), +1) == ipoly({1, -2, 1}));  // (x-1)^2
    CHECK(u_poly(t(2, {{1, 2, 1}}), +1) == ipoly({0, -1, 1}));  // x^2 - x
    CHECK(u_poly(t(2, {{2, 1, 1}}), -1) == ipoly({-1, 0, 1}));  // x^2 - 1
    CHECK(u_poly(t(2, {{1, 1, 2}}), -1) == ipoly({1, 2, 1}));   // (x+1)^2
    CHECK(u_poly(t(1, {{1, 1, 1}}), +1) == v_poly(1, +1));
}

TEST_CASE("u divides v exactly for every type") {
    for (int n = 1; n <= 8; ++n)
        for (int eps : {+1, -1})
            for (const auto& tau : enumerate_types(n))
                CHECK_NOTHROW(orbit_degree_poly(tau, eps));
}

TEST_CASE("centralizer shapes") {
    const auto s1 = centralizer_shape(t(2, {{2, 1, 1}}), +1);
    REQUIRE(s1.factors.size() == 1);
    CHECK(s1.factors[0].kind == CentralizerFactor::Kind::GL1);
    CHECK(s1.factors[0].d == 2);

    const auto s2 = centralizer_shape(t(2, {{1, 2, 1}}), -1);
    REQUIRE(s2.factors.size() == 1);
    CHECK(s2.factors[0].kind == CentralizerFactor::Kind::GU1);  // d odd, unitary

    const auto s3 = centralizer_shape(t(2, {{2, 1, 1}}), -1);
    REQUIRE(s3.factors.size() == 1);
    CHECK(s3.factors[0].kind == CentralizerFactor::Kind::GL1);  // d even
}

TEST_CASE("shape orders") {
    const Integer q(3);
    CHECK(shape_order({{{CentralizerFactor::Kind::GL1, 1, 1, 2}}}, q) == 4);
    CHECK(shape_order({{{CentralizerFactor::Kind::GU1, 1, 2, 1}}}, q) == 12);
    CHECK(shape_order({{{CentralizerFactor::Kind::GL1, 2, 1, 1}}}, q) == 8);
}

TEST_CASE("structural orders agree with u") {
    for (int n = 1; n <= 6; ++n)
        for (int eps : {+1, -1})
            for (const auto& tau : enumerate_types(n))
                for (long long qv : {3, 5, 7}) {
                    const Integer q(qv);
                    CHECK(shape_order(centralizer_shape(tau, eps), q) ==
                          u_poly(tau, eps)(q));
                }
}

TEST_CASE("orbit degree polynomials") {
    CHECK(orbit_degree_poly(t(2, {{2, 1, 1}}), +1) == ipoly({0, -1, 1}));
    CHECK(orbit_degree_poly(t(2, {{2, 1, 1}}), -1) == ipoly({0, 1, 1}));
    CHECK(orbit_degree_poly(t(1, {{1, 1, 1}}), +1) == ipoly({1}));
    CHECK(orbit_degree_poly(t(1, {{1, 1, 1}}), -1) == ipoly({1}));
}

TEST_CASE("Ennola at the order level") {
    for (int n = 1; n <= 6; ++n)
        for (long long qv : {3, 5}) {
            const Integer q(qv);
            Integer lhs = v_poly(n, -1)(q);
            Integer rhs = v_poly(n, +1)(Integer(-q));
            CHECK(abs(lhs) == abs(rhs));
            for (const auto& tau : enumerate_types(n))
                CHECK(abs(u_poly(tau, -1)(q)) == abs(u_poly(tau, +1)(Integer(-q))));
        }
}
