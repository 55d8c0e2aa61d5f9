#pragma once

#include <optional>
#include <vector>

#include "regzeta/fqpoly.hpp"

namespace regzeta {

/// Square matrix over a FieldDesc, row-major.
struct MatrixFF {
    int n = 0;
    std::vector<ffe> a;

    static MatrixFF zero(int n) { return {n, std::vector<ffe>(static_cast<std::size_t>(n) * n, 0)}; }
    static MatrixFF identity(int n);

    ffe& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    ffe at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool operator==(const MatrixFF& o) const { return n == o.n && a == o.a; }
};

MatrixFF mat_mul(const FieldDesc& F, const MatrixFF& A, const MatrixFF& B);
MatrixFF mat_add(const FieldDesc& F, const MatrixFF& A, const MatrixFF& B);
MatrixFF mat_scale(const FieldDesc& F, const MatrixFF& A, ffe s);

ffe mat_det(const FieldDesc& F, MatrixFF A);

/// Conjugate transpose (requires the quadratic tower on F).
MatrixFF conj_transpose(const FieldDesc& F, const MatrixFF& A);

/// g^circ g = I, with early exit.
bool is_unitary(const FieldDesc& F, const MatrixFF& g);

/// Minimal polynomial through the first linear dependence among
/// I, x, x^2, ...; x is regular (cyclic) exactly when the dependence first
/// occurs at degree n, in which case the minimal polynomial equals the
/// characteristic polynomial and is returned (monic). Otherwise nullopt.
std::optional<FqPoly> regular_charpoly(const FieldDesc& F, const MatrixFF& x);

}  // namespace regzeta
