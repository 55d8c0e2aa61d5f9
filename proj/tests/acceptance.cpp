// Acceptance suite: the exact finite identities behind the degree, count and
// zeta formulas, checked end to end against brute-force finite-field
// oracles. One line per criterion; exit 0 iff everything passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "regzeta/oracle.hpp"
#include "regzeta/orders.hpp"
#include "regzeta/zeta.hpp"

using namespace regzeta;

namespace {

const GroupForm GL{Family::GL};
const GroupForm GU{Family::GU};
const GroupForm SL{Family::SL};
const GroupForm SU{Family::SU};

constexpr int kParallelism = 2;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

FieldDesc residue_field(std::uint64_t q) {
    std::uint64_t p = 0;
    unsigned f = 0;
    prime_power_decompose(q, p, f);
    return FieldDesc::make(static_cast<std::uint32_t>(p), f);
}

FieldDesc quadratic_field(std::uint64_t q) {
    std::uint64_t p = 0;
    unsigned f = 0;
    prime_power_decompose(q, p, f);
    return FieldDesc::make(static_cast<std::uint32_t>(p), 2 * f);
}

std::string type_str(const NType& tau) { return tau.str(); }

// ---------------------------------------------------------------- criterion 1
Outcome type_census() {
    Outcome out;
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{1, 3}, {2, 3}, {2, 5}, {3, 5}}) {
        const FieldDesc Fq = residue_field(q);
        const FieldDesc Fq2 = quadratic_field(q);
        const auto gl = census_types_gl(n, Fq);
        const auto gu = census_types_gu(n, Fq2);
        out.require(gl == gu, "GU census differs from GL census at n=" + std::to_string(n) +
                                  " q=" + std::to_string(q));
        for (const auto& tau : enumerate_types(n)) {
            const Integer expected = type_combinatorial_factor(tau, Integer(q));
            const auto it = gl.find(tau);
            const Integer got = it == gl.end() ? Integer(0) : it->second;
            out.require(got == expected, "type " + type_str(tau) + " n=" + std::to_string(n) +
                                             " q=" + std::to_string(q) + ": census " +
                                             got.str() + " formula " + expected.str());
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome self_dual_irreducibles() {
    Outcome out;
    for (std::uint64_t q : {3ull, 5ull}) {
        const LemmaReport rep = verify_lemma_4_3(5, quadratic_field(q));
        out.require(rep.pass, "self-dual census failed over F_" + std::to_string(q * q));
        for (const auto& row : rep.rows) {
            out.require(row.trace_zero_ok,
                        "trace-zero violation at q=" + std::to_string(q) +
                            " d=" + std::to_string(row.d));
            out.require(row.self_dual_irreducible == row.expected,
                        "count mismatch at q=" + std::to_string(q) + " d=" +
                            std::to_string(row.d) + ": " + row.self_dual_irreducible.str() +
                            " vs " + row.expected.str());
        }
    }
    return out;
}

// ---------------------------------------------------------------- criterion 3
std::map<std::tuple<char, int, std::uint64_t>, CensusReport> g_matrix_reports;

Outcome centralizer_census() {
    Outcome out;
    const std::vector<std::pair<int, std::uint64_t>> gl_cases{{2, 3}, {2, 5}, {3, 5}};
    const std::vector<std::pair<int, std::uint64_t>> gu_cases{{2, 3}, {3, 5}};
    for (auto [n, q] : gl_cases) {
        CensusReport rep =
            census_regular_matrices(GL, n, residue_field(q), 200, kParallelism);
        out.require(rep.pass(), "GL census failed at n=" + std::to_string(n) +
                                    " q=" + std::to_string(q));
        g_matrix_reports[{'L', n, q}] = std::move(rep);
    }
    for (auto [n, q] : gu_cases) {
        CensusReport rep =
            census_regular_matrices(GU, n, quadratic_field(q), 200, kParallelism);
        out.require(rep.pass(), "GU census failed at n=" + std::to_string(n) +
                                    " q=" + std::to_string(q));
        g_matrix_reports[{'U', n, q}] = std::move(rep);
    }
    Integer gl23_total = 0;
    for (const auto& row : g_matrix_reports[{'L', 2, 3}].rows)
        gl23_total += row.element_count;
    out.require(gl23_total == 78, "GL_2(F_3) regular total is " + gl23_total.str());
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome det_index() {
    Outcome out;
    for (int n : {2, 3})
        for (std::uint64_t q : {3ull, 5ull}) {
            const CensusReport sl =
                verify_det_index(SL, n, residue_field(q), 200, kParallelism);
            out.require(sl.pass(), "SL det index failed at n=" + std::to_string(n) +
                                       " q=" + std::to_string(q));
            const CensusReport su =
                verify_det_index(SU, n, quadratic_field(q), 200, kParallelism);
            out.require(su.pass(), "SU det index failed at n=" + std::to_string(n) +
                                       " q=" + std::to_string(q));
        }
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome ennola() {
    Outcome out;
    for (int n = 1; n <= 6; ++n)
        for (int level : {1, 2, 3})
            for (const auto& tau : enumerate_types(n))
                out.require(ennola_check(n, level, tau).holds,
                            "Ennola fails at n=" + std::to_string(n) + " level=" +
                                std::to_string(level) + " type " + type_str(tau));
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome sum_of_squares_identity() {
    Outcome out;
    const auto oracle_total = [&](char fam, int n, std::uint64_t q) {
        Integer total = 0;
        for (const auto& row : g_matrix_reports[{fam, n, q}].rows)
            total += row.element_count;
        return total;
    };
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {3, 5}}) {
        const Integer R_gl = oracle_total('L', n, q);
        const Integer R_gu = oracle_total('U', n, q);
        const Integer lhs_gl = sum_of_squares(GL, n, Integer(q));
        const Integer lhs_gu = sum_of_squares(GU, n, Integer(q));
        out.require(lhs_gl == v_poly(n, +1)(Integer(q)) * R_gl,
                    "GL sum-of-squares mismatch at n=" + std::to_string(n) +
                        " q=" + std::to_string(q));
        out.require(lhs_gu == v_poly(n, -1)(Integer(q)) * R_gu,
                    "GU sum-of-squares mismatch at n=" + std::to_string(n) +
                        " q=" + std::to_string(q));
    }
    out.require(sum_of_squares(GL, 2, Integer(3)) == 3744, "48 * 78 != 3744");

    // SL_2 over F_3: the regular level-one squares fill |SL_2(o_2)| up to
    // the |SL_2(F_3)| contribution of the level-zero characters.
    const Integer sl_sum = sum_of_squares(SL, 2, Integer(3));
    out.require(sl_sum == 624, "SL_2(F_3) sum-of-squares is " + sl_sum.str());
    const Integer sl2_f3 = exact_div(v_poly(2, +1)(Integer(3)), Integer(2));
    out.require(sl_sum + sl2_f3 == ipow(Integer(3), 3) * sl2_f3,
                "624 + |SL_2(F_3)| != |SL_2(o_2)|");
    const Integer R_sl = count_regular_elements(SL, 2, residue_field(3));
    out.require(sl_sum == sl2_f3 * R_sl, "SL sum-of-squares vs oracle regular count");
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome zeta_consistency() {
    Outcome out;
    for (auto form : {GL, GU, SL, SU})
        for (int n : {2, 3})
            for (std::uint64_t q : {3ull, 5ull}) {
                const Integer Q(q);
                const ZetaExpr z = build_zeta(form, n, Q);
                Integer max_D = 0;
                for (const auto& t : z.terms)
                    if (t.D > max_D) max_D = t.D;
                const Integer step = ipow(Q, z.prefactor_s_exponent);
                const Integer M = max_D * step * step;  // covers three full levels

                // Slice must agree with the per-(level, type) counts exactly.
                std::map<Integer, Rational> direct;
                for (int level = 1; level <= 8; ++level)
                    for (const auto& tau : enumerate_types(n)) {
                        const Integer deg = degree(form, n, Q, level, tau);
                        if (deg <= M) direct[deg] += count_rational(form, n, Q, level, tau);
                    }
                const DirichletSlice slice = dirichlet_coeffs(z, M);
                out.require(slice.coeffs == direct,
                            std::string("slice mismatch for ") + form.name() + " n=" +
                                std::to_string(n) + " q=" + std::to_string(q));

                // Closed form vs truncated series within the geometric tail.
                const auto alpha = abscissa(z);
                const double s =
                    1.0 + static_cast<double>(numerator(*alpha).convert_to<long long>()) /
                              static_cast<double>(denominator(*alpha).convert_to<long long>());
                const double closed = evaluate(z, s);
                long double partial = 0.0L;
                for (const auto& [deg, cnt] : slice.coeffs)
                    partial += cnt.convert_to<long double>() *
                               std::pow(deg.convert_to<long double>(),
                                        -static_cast<long double>(s));
                long double level_one = 0.0L;
                for (const auto& t : z.terms)
                    level_one += t.c.convert_to<long double>() *
                                 std::pow(t.D.convert_to<long double>(),
                                          -static_cast<long double>(s));
                const long double ratio = std::pow(static_cast<long double>(q),
                                                   z.prefactor_base_exponent -
                                                       static_cast<long double>(
                                                           z.prefactor_s_exponent) *
                                                           s);
                const long double tail_bound = level_one * ratio * ratio * ratio / (1.0L - ratio);
                const long double gap = std::fabs(static_cast<long double>(closed) - partial);
                out.require(gap <= 2.0L * tail_bound,
                            std::string("closed form vs series for ") + form.name() +
                                " n=" + std::to_string(n) + " q=" + std::to_string(q));
                out.require(partial <= static_cast<long double>(closed),
                            "partial sum exceeds the closed form");
            }
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome exact_divisibility() {
    Outcome out;
    for (int n = 1; n <= 8; ++n)
        for (int eps : {+1, -1})
            for (const auto& tau : enumerate_types(n)) {
                try {
                    (void)orbit_degree_poly(tau, eps);
                } catch (const InexactDivision&) {
                    out.require(false, "u does not divide v at n=" + std::to_string(n) +
                                           " eps=" + std::to_string(eps) + " type " +
                                           type_str(tau));
                }
            }
    for (auto form : {SL, SU})
        for (int n = 2; n <= 5; ++n)
            for (std::uint64_t q : {3ull, 5ull, 7ull}) {
                if (n % static_cast<int>(q) == 0) continue;  // p | n excluded
                for (const auto& tau : enumerate_types(n)) {
                    try {
                        const Integer c = count(form, n, Integer(q), 1, tau);
                        out.require(c >= 0, "negative count");
                        (void)degree(form, n, Integer(q), 1, tau);
                    } catch (const InexactDivision&) {
                        out.require(false, std::string("inexact division for ") +
                                               form.name() + " n=" + std::to_string(n) +
                                               " q=" + std::to_string(q) + " type " +
                                               type_str(tau));
                    }
                }
            }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "type census (polynomial factorization vs counting formula)", type_census, 10},
        {2, "self-dual irreducibles (odd degree, trace zero, w_d counts)",
         self_dual_irreducibles, 30},
        {3, "regular-element counts and centralizer orders", centralizer_census, 300},
        {4, "determinant-image indices", det_index, 0},
        {5, "Ennola duality of degree polynomials", ennola, 5},
        {6, "sum-of-squares consistency", sum_of_squares_identity, 0},
        {7, "zeta slices and closed-form evaluation", zeta_consistency, 0},
        {8, "exact divisibility of the order and count formulas", exact_divisibility, 0},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Timer timer;
        Outcome out = c.run();
        const double secs = timer.elapsed();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            out.pass = false;
            out.detail << (out.detail.str().empty() ? "" : "; ") << "runtime " << secs
                       << "s exceeds " << c.budget_seconds << "s";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, secs, out.detail.str().empty() ? "" : " -- ",
                    out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass) ++failed;
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
