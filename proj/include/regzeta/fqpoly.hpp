#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regzeta/ff.hpp"
#include "regzeta/types.hpp"

namespace regzeta {

/// Polynomial over a FieldDesc, coefficients ascending, trimmed (no leading
/// zeros). The censuses work with monic polynomials throughout.
class FqPoly {
public:
    FqPoly() = default;
    FqPoly(const FieldDesc& F, std::vector<ffe> coeffs);

    static FqPoly zero() { return FqPoly(); }
    static FqPoly one(const FieldDesc& F);
    static FqPoly x(const FieldDesc& F);
    static FqPoly constant(const FieldDesc& F, ffe c);

    /// Monic polynomial of the given degree whose lower coefficients are the
    /// base-q digits of idx: the canonical enumeration of monic polynomials.
    static FqPoly monic_from_index(const FieldDesc& F, std::uint64_t idx, int degree);
    std::uint64_t index(const FieldDesc& F) const;  // inverse of the above

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic(const FieldDesc& F) const;
    ffe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<ffe>& coeffs() const { return c_; }

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    bool operator<(const FqPoly& o) const;  // by degree, then coefficient vectors

    std::string str(const FieldDesc& F) const;

private:
    std::vector<ffe> c_;
};

FqPoly fq_add(const FieldDesc& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const FieldDesc& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FieldDesc& F, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const FieldDesc& F, const FqPoly& a, ffe s);
void fq_divmod(const FieldDesc& F, const FqPoly& num, const FqPoly& den, FqPoly& q, FqPoly& r);
FqPoly fq_mod(const FieldDesc& F, const FqPoly& a, const FqPoly& m);
FqPoly fq_gcd(const FieldDesc& F, FqPoly a, FqPoly b);  // monic gcd
FqPoly fq_powmod(const FieldDesc& F, FqPoly base, const Integer& e, const FqPoly& m);
FqPoly fq_derivative(const FieldDesc& F, const FqPoly& a);
ffe fq_eval(const FieldDesc& F, const FqPoly& a, ffe x);
FqPoly fq_monic(const FieldDesc& F, const FqPoly& a);

bool is_irreducible(const FieldDesc& F, const FqPoly& f);

/// Full factorization of a monic nonzero polynomial into monic irreducibles
/// with multiplicities, sorted by (degree, coefficient encoding). Squarefree
/// split, then distinct-degree, then equal-degree (Cantor-Zassenhaus with a
/// seed derived from the input, so results are bit-reproducible).
std::vector<std::pair<FqPoly, int>> factor(const FieldDesc& F, const FqPoly& f);

/// The multiplicative involution on monic polynomials over F_{q^2}:
/// h = sum c_i t^i of degree m maps to sum (-1)^{m-i} conj(c_i) t^i.
/// Requires the quadratic tower.
FqPoly tilde(const FieldDesc& F, const FqPoly& h);

/// Type of a monic degree-n polynomial as a product of anti-hermitian
/// building blocks: self-dual irreducible factors of degree d contribute a
/// (d, multiplicity) block, tilde-dual factor pairs {g, gtilde} of degree
/// d/2 each contribute a (d, multiplicity) block. Returns nullopt when the
/// polynomial is not fixed by tilde (not an anti-hermitian class).
std::optional<NType> gu_type_of(const FieldDesc& F, const FqPoly& f);

/// Type of a monic polynomial over F_q from its irreducible factorization:
/// tau_{d,e} counts distinct irreducible factors of degree d appearing with
/// multiplicity e.
NType gl_type_of(const FieldDesc& F, const FqPoly& f);

}  // namespace regzeta
