#include "regzeta/zeta.hpp"

#include <cmath>
#include <stdexcept>

namespace regzeta {

ZetaExpr build_zeta(GroupForm form, int n, const Integer& q) {
    ZetaExpr z;
    z.form = form;
    z.n = n;
    z.q = q;
    z.prefactor_base_exponent = form.special() ? n - 1 : n;
    z.prefactor_s_exponent = choose2(n);
    z.flags = validity_flags(form, n, q);
    for (const NType& tau : enumerate_types(n)) {
        ZetaTerm term{tau, count_rational(form, n, q, 1, tau), degree(form, n, q, 1, tau)};
        if (term.c == 0) continue;  // possible only in the flagged q <= n regime
        z.terms.push_back(std::move(term));
    }
    return z;
}

std::optional<Rational> abscissa(const ZetaExpr& z) {
    if (z.prefactor_s_exponent == 0) return std::nullopt;
    return Rational(Integer(z.prefactor_base_exponent), Integer(z.prefactor_s_exponent));
}

double evaluate(const ZetaExpr& z, double s) {
    const auto alpha = abscissa(z);
    if (!alpha)
        throw Diverges("zeta evaluation: series for n = 1 diverges for every s");
    const long double alpha_ld =
        static_cast<long double>(numerator(*alpha).convert_to<double>()) /
        static_cast<long double>(denominator(*alpha).convert_to<double>());
    if (!(static_cast<long double>(s) > alpha_ld))
        throw Diverges("zeta evaluation: s must exceed the abscissa " + alpha->str());

    long double num = 0.0L;
    for (const auto& t : z.terms)
        num += t.c.convert_to<long double>() *
               std::pow(t.D.convert_to<long double>(), -static_cast<long double>(s));
    const long double ratio =
        std::pow(z.q.convert_to<long double>(),
                 static_cast<long double>(z.prefactor_base_exponent) -
                     static_cast<long double>(z.prefactor_s_exponent) *
                         static_cast<long double>(s));
    return static_cast<double>(num / (1.0L - ratio));
}

DirichletSlice dirichlet_coeffs(const ZetaExpr& z, const Integer& M) {
    if (M < 1) throw std::invalid_argument("dirichlet_coeffs: M must be >= 1");
    if (z.prefactor_s_exponent == 0)
        throw Unbounded("dirichlet_coeffs: degrees do not grow with the level for n = 1");
    DirichletSlice slice;
    slice.M = M;
    if (z.terms.empty()) return slice;

    Integer min_D = z.terms.front().D;
    for (const auto& t : z.terms)
        if (t.D < min_D) min_D = t.D;

    const Integer deg_step = ipow(z.q, z.prefactor_s_exponent);
    const Integer count_step = ipow(z.q, static_cast<std::uint64_t>(z.prefactor_base_exponent));
    Integer deg_scale = 1;    // q^{C(n,2)(l-1)}
    Integer count_scale = 1;  // q^{a(l-1)}
    while (deg_scale * min_D <= M) {
        for (const auto& t : z.terms) {
            const Integer deg = deg_scale * t.D;
            if (deg <= M) slice.coeffs[deg] += Rational(count_scale) * t.c;
        }
        deg_scale *= deg_step;
        count_scale *= count_step;
    }
    return slice;
}

}  // namespace regzeta
