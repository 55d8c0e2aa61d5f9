#include "regzeta/counts.hpp"

#include <stdexcept>

namespace regzeta {

const char* validity_name(Validity v) {
    switch (v) {
        case Validity::q_le_n: return "q_le_n";
        case Validity::even_p_unchecked: return "even_p_unchecked";
        case Validity::p_divides_n: return "p_divides_n";
        case Validity::q_not_prime_power: return "q_not_prime_power";
        case Validity::n_degenerate: return "n_degenerate";
    }
    return "?";
}

ValiditySet validity_flags(GroupForm form, int n, const Integer& q) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    ValiditySet flags;
    if (q <= n) flags.insert(Validity::q_le_n);
    if (n == 1) flags.insert(Validity::n_degenerate);

    std::uint64_t p = 0;
    unsigned k = 0;
    if (q <= Integer(std::uint64_t(1) << 62) &&
        prime_power_decompose(q.convert_to<std::uint64_t>(), p, k)) {
        if (p == 2) flags.insert(Validity::even_p_unchecked);
        if (form.special() && p <= static_cast<std::uint64_t>(n) &&
            n % static_cast<int>(p) == 0)
            flags.insert(Validity::p_divides_n);
    } else {
        flags.insert(Validity::q_not_prime_power);
    }
    return flags;
}

namespace {

void check_args(int n, const Integer& q, int level) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
}

}  // namespace

Integer degree(GroupForm form, int n, const Integer& q, int level, const NType& tau) {
    check_args(n, q, level);
    if (tau.n != n) throw std::invalid_argument("degree: type rank mismatch");
    const int eps = form.epsilon();
    Integer deg = ipow(q, choose2(n) * static_cast<std::uint64_t>(level - 1));
    deg *= orbit_degree_poly(tau, eps)(q);
    if (form.special()) deg = exact_div(deg, iota(tau, q - eps));
    return deg;
}

Rational count_rational(GroupForm form, int n, const Integer& q, int level,
                        const NType& tau) {
    check_args(n, q, level);
    if (tau.n != n) throw std::invalid_argument("count: type rank mismatch");
    const int eps = form.epsilon();
    const Integer u = u_poly(tau, eps)(q);
    const Integer factor = type_combinatorial_factor(tau, q);
    if (!form.special())
        return Rational(ipow(q, static_cast<std::uint64_t>(level - 1) * n) * u * factor);

    // Totalled over the iota-fold orbit splitting:
    // q^{(l-1)(n-1)} * iota^2/(q-eps) * u * q^{-1} * factor.
    const Integer io = iota(tau, q - eps);
    Integer num = ipow(q, static_cast<std::uint64_t>(level - 1) * (n - 1));
    num *= io * io * u * factor;
    return make_rational(num, (q - eps) * q);
}

Integer count(GroupForm form, int n, const Integer& q, int level, const NType& tau) {
    return require_integer(count_rational(form, n, q, level, tau),
                           "count (non-integral off the p coprime to n domain)");
}

std::vector<CharClass> degree_table(GroupForm form, int n, const Integer& q, int level) {
    const ValiditySet flags = validity_flags(form, n, q);
    std::vector<CharClass> rows;
    for (const NType& tau : enumerate_types(n)) {
        CharClass row{form, n, q, level, tau,
                      degree(form, n, q, level, tau),
                      count_rational(form, n, q, level, tau), flags};
        rows.push_back(std::move(row));
    }
    return rows;
}

EnnolaReport ennola_check(int n, int level, const NType& tau) {
    if (n < 1 || level < 1) throw std::invalid_argument("ennola_check: bad arguments");
    if (tau.n != n) throw std::invalid_argument("ennola_check: type rank mismatch");
    const std::size_t shift = choose2(n) * static_cast<std::uint64_t>(level - 1);
    IntPolynomial f = orbit_degree_poly(tau, +1).shift_up(shift);
    IntPolynomial g = orbit_degree_poly(tau, -1).shift_up(shift);
    IntPolynomial dual = f.negate_variable();
    if (f.degree() % 2 != 0) dual = -dual;  // (-1)^{deg f}
    return {dual == g, tau, std::move(f), std::move(g)};
}

Integer sum_of_squares(GroupForm form, int n, const Integer& q) {
    Rational total = 0;
    for (const NType& tau : enumerate_types(n)) {
        const Integer d = degree(form, n, q, 1, tau);
        total += count_rational(form, n, q, 1, tau) * Rational(d * d);
    }
    return require_integer(total, "sum_of_squares");
}

}  // namespace regzeta
