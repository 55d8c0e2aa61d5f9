#pragma once

#include <map>
#include <optional>
#include <vector>

#include "regzeta/counts.hpp"
#include "regzeta/ffmatrix.hpp"

namespace regzeta {

/// One row of a census: everything tallied for a single type, next to the
/// formula-side expectations it is checked against.
struct TypeTally {
    NType type;
    Integer poly_count;            // characteristic polynomials of this type
    Integer poly_expected;         // combinatorial factor (formula side)
    Integer element_count;         // regular elements of this type
    Integer element_expected;      // poly_count * v_eps(q)/u_eps^tau(q)
    Integer centralizer_expected;  // u_eps^tau(q)
    int centralizer_checked = 0;
    bool centralizer_ok = true;
    Integer det_image_expected;    // (q - eps)/iota(tau, q - eps)
    std::optional<Integer> det_image_size;  // brute-force image (uniform over samples)
    int det_checked = 0;
    bool det_ok = true;
};

struct CensusReport {
    GroupForm form;
    int n = 0;
    std::uint64_t q = 0;  // residue field size (sub_q for the unitary forms)
    std::vector<TypeTally> rows;
    std::optional<bool> prop_4_2;   // type census equals the counting formula
    std::optional<bool> lemma_4_3;  // self-dual irreducibles: odd degree, trace zero
    std::optional<bool> prop_4_4;   // element counts and centralizer orders
    std::optional<bool> prop_4_5;   // determinant-image indices
    double seconds = 0;

    bool pass() const;
};

struct LemmaRow {
    int d = 0;
    Integer self_dual_irreducible;  // census count
    Integer expected;               // w_d(q) for odd d, 0 for even d
    bool trace_zero_ok = true;
};

struct LemmaReport {
    std::uint64_t q = 0;
    int d_max = 0;
    std::vector<LemmaRow> rows;
    bool pass = true;
    double seconds = 0;
};

inline constexpr std::uint64_t kPolyCensusBound = 1ull << 24;
inline constexpr std::uint64_t kMatrixCensusBound = 1ull << 22;

/// Exhaustive factorization census: all q^n monic degree-n polynomials over
/// F_q classified by type. Guarded at q^n <= 2^24.
std::map<NType, Integer> census_types_gl(int n, const FieldDesc& Fq);

/// Anti-hermitian census over the tower field F_{q^2}: enumerate the
/// building blocks of degree <= n (self-dual irreducibles, tilde-dual
/// pairs), then all products of total degree n, classified by type.
/// Guarded at (q^2)^n <= 2^24.
std::map<NType, Integer> census_types_gu(int n, const FieldDesc& Fq2);

/// Wraps census_types_* and compares against the counting formula.
CensusReport check_type_census(GroupForm form, int n, const FieldDesc& F);

/// Scans every self-dual monic polynomial of degree <= d_max over the tower
/// field (q^d of them per degree): irreducible ones must have odd degree and
/// trace-zero root, and their count per odd degree d must be w_d(q).
LemmaReport verify_lemma_4_3(int d_max, const FieldDesc& Fq2);

/// Raw exhaustive scan of g(k): per-type regular tallies plus up to
/// sample_cap regular representatives per type, selected deterministically
/// (first occurrences in enumeration order, independent of the worker
/// count).
struct MatrixScan {
    std::uint64_t domain_size = 0;
    std::uint64_t regular_total = 0;
    std::map<NType, std::uint64_t> tallies;
    std::map<NType, std::vector<MatrixFF>> samples;
};

MatrixScan scan_matrices(GroupForm form, int n, const FieldDesc& F, int sample_cap,
                         int parallelism);

/// Exhaustive matrix census for GL/GU: per-type regular counts against
/// |M^tau| * v/u, and brute-force centralizer orders (inside the algebra
/// generated by the element) against u_eps^tau(q).
CensusReport census_regular_matrices(GroupForm form, int n, const FieldDesc& F,
                                     int sample_cap = 200, int parallelism = 1);

/// Determinant-image index check for SL/SU: for sampled regular elements of
/// each type, the image of det on the brute-force centralizer has size
/// (q - eps)/iota(tau, q - eps).
CensusReport verify_det_index(GroupForm form, int n, const FieldDesc& F,
                              int sample_cap = 200, int parallelism = 1);

/// Number of regular elements of g(k) (or its traceless variant for the
/// special forms).
Integer count_regular_elements(GroupForm form, int n, const FieldDesc& F);

}  // namespace regzeta
