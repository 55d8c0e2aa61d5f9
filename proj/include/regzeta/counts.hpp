#pragma once

#include <set>
#include <vector>

#include "regzeta/orders.hpp"
#include "regzeta/types.hpp"

namespace regzeta {

/// Validity annotations. None of these is fatal: the formulas stay
/// well-defined polynomial evaluations, the flags record that the group
/// theory behind them needs q > n, odd characteristic, or p coprime to n
/// (and that the listed degrees are a superset of the occurring ones when
/// q <= n). n = 1 is degenerate: the level-ell count includes characters
/// over the zero element, i.e. of smaller exact level.
enum class Validity {
    q_le_n,
    even_p_unchecked,
    p_divides_n,
    q_not_prime_power,
    n_degenerate,
};

using ValiditySet = std::set<Validity>;

const char* validity_name(Validity v);

ValiditySet validity_flags(GroupForm form, int n, const Integer& q);

struct CharClass {
    GroupForm form;
    int n;
    Integer q;
    int level;
    NType type;
    Integer degree;
    // Integral whenever the count theorem applies (in particular whenever
    // p does not divide n for the special forms); kept exact either way.
    Rational count;
    ValiditySet flags;
};

/// Degree of a regular character of form(o) of level ell and type tau:
/// q^{C(n,2)(ell-1)} v_eps(q)/u_eps^tau(q), further divided by
/// iota(tau, q - eps) for the special forms.
Integer degree(GroupForm form, int n, const Integer& q, int level, const NType& tau);

/// Number of regular characters of the given type and level:
/// q^{(ell-1)n} u_eps^tau(q) * combinatorial factor, or for the special
/// forms q^{(ell-1)(n-1)} iota^2/(q-eps) * u_eps^tau(q) * q^{-1} * factor
/// (totalled over the split orbits), as an exact rational. Integral on the
/// theorems' domain; the only non-integral regime is SL/SU with p | n,
/// which is flagged.
Rational count_rational(GroupForm form, int n, const Integer& q, int level, const NType& tau);

/// count_rational coerced to an Integer; throws InexactDivision when the
/// exact value is not integral (off the count theorem's domain).
Integer count(GroupForm form, int n, const Integer& q, int level, const NType& tau);

/// One row per type of A_n, canonical order.
std::vector<CharClass> degree_table(GroupForm form, int n, const Integer& q, int level);

struct EnnolaReport {
    bool holds;
    NType type;
    IntPolynomial gl_poly;  // f(x) = x^{C(n,2)(ell-1)} v_{+1}/u_{+1}^tau
    IntPolynomial gu_poly;  // g(x) = x^{C(n,2)(ell-1)} v_{-1}/u_{-1}^tau
};

/// Checks g(x) = (-1)^{deg f} f(-x) coefficientwise, exactly.
EnnolaReport ennola_check(int n, int level, const NType& tau);

/// sum over types of count * degree^2 at level 1. Equals
/// |G(k)| * #{regular elements of g(k)} for GL/GU with q > n (the oracle
/// supplies the second factor).
Integer sum_of_squares(GroupForm form, int n, const Integer& q);

inline std::uint64_t choose2(int n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

}  // namespace regzeta
