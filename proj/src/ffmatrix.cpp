#include "regzeta/ffmatrix.hpp"

#include <stdexcept>

namespace regzeta {

MatrixFF MatrixFF::identity(int n) {
    MatrixFF m = zero(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixFF mat_mul(const FieldDesc& F, const MatrixFF& A, const MatrixFF& B) {
    const int n = A.n;
    MatrixFF C = MatrixFF::zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const ffe aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

MatrixFF mat_add(const FieldDesc& F, const MatrixFF& A, const MatrixFF& B) {
    MatrixFF C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(C.a[i], B.a[i]);
    return C;
}

MatrixFF mat_scale(const FieldDesc& F, const MatrixFF& A, ffe s) {
    MatrixFF C = A;
    for (auto& v : C.a) v = F.mul(v, s);
    return C;
}

ffe mat_det(const FieldDesc& F, MatrixFF A) {
    const int n = A.n;
    ffe det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (A.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
            det = F.neg(det);
        }
        const ffe pv = A.at(col, col);
        det = F.mul(det, pv);
        const ffe pv_inv = F.inv(pv);
        for (int r = col + 1; r < n; ++r) {
            const ffe factor = F.mul(A.at(r, col), pv_inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                A.at(r, j) = F.sub(A.at(r, j), F.mul(factor, A.at(col, j)));
        }
    }
    return det;
}

MatrixFF conj_transpose(const FieldDesc& F, const MatrixFF& A) {
    MatrixFF C = MatrixFF::zero(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) C.at(j, i) = F.conj(A.at(i, j));
    return C;
}

bool is_unitary(const FieldDesc& F, const MatrixFF& g) {
    const int n = g.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (g^circ g)_{ij} = sum_k conj(g_{ki}) g_{kj}
            ffe s = 0;
            for (int k = 0; k < n; ++k) s = F.add(s, F.mul(F.conj(g.at(k, i)), g.at(k, j)));
            if (s != (i == j ? 1u : 0u)) return false;
        }
    return true;
}

std::optional<FqPoly> regular_charpoly(const FieldDesc& F, const MatrixFF& x) {
    const int n = x.n;
    const std::size_t dim = static_cast<std::size_t>(n) * n;

    // Echelon basis of span{I, x, x^2, ...} with bookkeeping of each reduced
    // row as a combination of the original powers.
    std::vector<std::vector<ffe>> rows;          // reduced, pivot-normalized
    std::vector<std::size_t> pivots;
    std::vector<std::vector<ffe>> combs;         // row = sum comb[j] * x^j

    MatrixFF power = MatrixFF::identity(n);
    for (int k = 0; k <= n; ++k) {
        std::vector<ffe> cur(power.a.begin(), power.a.end());
        std::vector<ffe> comb(static_cast<std::size_t>(n) + 1, 0);
        comb[static_cast<std::size_t>(k)] = 1;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            const ffe c = cur[pivots[r]];
            if (c == 0) continue;
            for (std::size_t i = 0; i < dim; ++i)
                cur[i] = F.sub(cur[i], F.mul(c, rows[r][i]));
            for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
                comb[i] = F.sub(comb[i], F.mul(c, combs[r][i]));
        }

        std::size_t pivot = dim;
        for (std::size_t i = 0; i < dim; ++i)
            if (cur[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == dim) {
            // First dependence at degree k: minimal polynomial degree k.
            if (k < n) return std::nullopt;
            return FqPoly(F, std::move(comb));  // monic: comb[n] = 1
        }
        const ffe s = F.inv(cur[pivot]);
        for (auto& v : cur) v = F.mul(v, s);
        for (auto& v : comb) v = F.mul(v, s);
        rows.push_back(std::move(cur));
        combs.push_back(std::move(comb));
        pivots.push_back(pivot);
        if (k < n) power = mat_mul(F, power, x);
    }
    throw std::logic_error("regular_charpoly: no dependence up to degree n");
}

}  // namespace regzeta
