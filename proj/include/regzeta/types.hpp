#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regzeta/integer.hpp"
#include "regzeta/polynomial.hpp"

namespace regzeta {

/// An n-type: sparse multiplicity matrix tau indexed by (d, e) with
/// sum over entries of d*e*tau_{d,e} = n. Entries are stored as (d, e, mult)
/// triples, mult > 0, sorted ascending by (d, e). The entry with degree d and
/// exponent e records how many distinct degree-d building-block polynomials
/// occur with multiplicity e in a characteristic polynomial.
struct NType {
    int n = 0;
    std::vector<std::array<int, 3>> entries;  // (d, e, mult), ascending (d, e)

    /// Validating factory: checks weights, bounds and canonical entry order.
    static NType make(int n, std::vector<std::array<int, 3>> entries);

    int multiplicity(int d, int e) const;

    /// Sum over entries of mult (number of distinct building blocks).
    int block_count() const;

    bool operator==(const NType& o) const { return n == o.n && entries == o.entries; }

    /// Canonical order of A_n: ascending lexicographic comparison of the
    /// type's (d, e) block words written in descending (d, e) order, with
    /// multiplicities expanded. Splitter types (many small blocks) come
    /// first, a single irreducible block last.
    bool operator<(const NType& o) const;

    std::string str() const;
};

enum class Family { GL, GU, SL, SU };

struct GroupForm {
    Family family = Family::GL;

    int epsilon() const {
        return (family == Family::GL || family == Family::SL) ? +1 : -1;
    }
    bool special() const { return family == Family::SL || family == Family::SU; }
    const char* name() const;

    static GroupForm parse(std::string token);  // "gl", "gu", "sl", "su" (any case)
};

inline constexpr int kMaxTypeRank = 64;

/// All n-types, duplicate-free, in canonical order. Guarded at n <= 64,
/// above which the list size becomes unwieldy.
std::vector<NType> enumerate_types(int n);

/// Moebius mu(n) for n >= 1.
int moebius(int n);

/// w_d(x) = (1/d) * sum_{m | d} mu(d/m) x^m, the counter of monic
/// irreducible polynomials of degree d: w_d(q) = |{f in F_q[t] monic
/// irreducible, deg f = d}|.
RatPolynomial w_poly(int d);

/// w_d evaluated at an integer q; always an integer (guarded).
Integer w_value(int d, const Integer& q);

/// iota(tau, r) = gcd of the exponents e present in tau together with r.
Integer iota(const NType& tau, const Integer& r);

/// Exact multinomial coefficient (total | parts...). Throws PartsMismatch
/// unless the parts sum to total.
Integer multinomial(std::uint64_t total, std::span<const std::uint64_t> parts);

/// Binomial coefficient (top | k) for integer top >= 0 and k >= 0.
Integer binomial(const Integer& top, std::uint64_t k);

/// Number of characteristic polynomials of type tau over a field with q
/// elements: prod_d (sum_e tau_{d,e} | tau_{d,1}, tau_{d,2}, ...) *
/// (w_d(q) choose sum_e tau_{d,e}). Counts |M_g(k)^tau| when q > n, and the
/// same value is used formally otherwise (flagged by callers).
Integer type_combinatorial_factor(const NType& tau, const Integer& q);

}  // namespace regzeta
