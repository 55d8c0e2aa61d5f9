#pragma once

#include <vector>

#include "regzeta/polynomial.hpp"
#include "regzeta/types.hpp"

namespace regzeta {

/// Structural description of the centraliser of a regular element of type
/// tau: one factor H(k_d[t]/(t^e)) per nonzero tau_{d,e}, where H is GL_1
/// except in the unitary case with d odd, where it is the one-dimensional
/// unitary group of the quadratic extension k_{2d}/k_d.
struct CentralizerFactor {
    enum class Kind { GL1, GU1 };
    Kind kind;
    int d;
    int e;
    int mult;
};

struct CentralizerShape {
    std::vector<CentralizerFactor> factors;
};

/// v_eps(x) = x^{n^2} prod_{d=1..n} (1 - eps^d x^{-d}), expanded in Z[x].
/// v_eps(q) is the order of GL_n(F_q) (eps = +1) or GU_n(F_q) (eps = -1).
/// Expansions are cached per (n, eps).
const IntPolynomial& v_poly(int n, int eps);

/// u_eps^tau(x) = x^n prod_{d,e} (1 - eps^d x^{-d})^{tau_{d,e}}, expanded in
/// Z[x]; u_eps^tau(q) is the centraliser order of a regular element of type
/// tau. Cached per (tau, eps).
const IntPolynomial& u_poly(const NType& tau, int eps);

CentralizerShape centralizer_shape(const NType& tau, int eps);

/// Order of the shape at q: each GL_1 factor contributes
/// q^{d(e-1)}(q^d - 1), each GU_1 factor q^{d(e-1)}(q^d + 1), raised to the
/// factor multiplicity. Agrees with u_poly evaluated at q (tested).
Integer shape_order(const CentralizerShape& shape, const Integer& q);

/// Exact quotient v_eps / u_eps^tau in Z[x]: the level-one degree
/// polynomial, and the G(k)-orbit size of regular elements of type tau when
/// evaluated at q. Division is always exact; inexactness signals a
/// transcription bug and surfaces as InexactDivision.
IntPolynomial orbit_degree_poly(const NType& tau, int eps);

}  // namespace regzeta
