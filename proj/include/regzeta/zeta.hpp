#pragma once

#include <map>
#include <optional>
#include <vector>

#include "regzeta/counts.hpp"

namespace regzeta {

/// Regular representation zeta function in closed form:
///   zeta(s) = (sum_tau c_tau * D_tau^{-s}) / (1 - q^{a - b*s}),
/// where (c_tau, D_tau) are the level-one count and degree per type,
/// a = n (GL/GU) or n-1 (SL/SU), and b = C(n,2). Terms carry the
/// generating type so symbolic identities can re-derive polynomial forms.
struct ZetaTerm {
    NType type;
    Rational c;  // level-one count of the type (exact; integral on-domain)
    Integer D;   // level-one degree of the type (exact)
};

struct ZetaExpr {
    GroupForm form;
    int n = 0;
    Integer q;
    int prefactor_base_exponent = 0;   // a
    std::uint64_t prefactor_s_exponent = 0;  // b = C(n,2)
    std::vector<ZetaTerm> terms;       // canonical type order
    ValiditySet flags;
};

/// Slice of the Dirichlet series: degree m -> multiplicity r_m, complete for
/// every regular-character degree <= M. Multiplicities are positive
/// integers on the theorems' domain and stay exact rationals off it.
struct DirichletSlice {
    Integer M;
    std::map<Integer, Rational> coeffs;
};

ZetaExpr build_zeta(GroupForm form, int n, const Integer& q);

/// a/b when b > 0; nullopt when b = 0 (n = 1; the series never converges).
std::optional<Rational> abscissa(const ZetaExpr& z);

/// Closed-form value at real s > abscissa (strict). Throws Diverges at or
/// below the abscissa and for n = 1. Accumulates in extended precision;
/// relative error <= 1e-12 at the magnitudes this library produces.
double evaluate(const ZetaExpr& z, double s);

/// All (level, type) contributions with degree <= M, aggregated by degree.
/// Terminates because degrees grow by q^{C(n,2)} per level for n >= 2;
/// throws Unbounded for n = 1.
DirichletSlice dirichlet_coeffs(const ZetaExpr& z, const Integer& M);

}  // namespace regzeta
