#include "regzeta/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "regzeta/orders.hpp"

namespace regzeta {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t pow_u64_checked(std::uint64_t base, unsigned e, std::uint64_t bound) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > bound / base)
            throw BoundExceeded("enumeration domain exceeds the census guard");
        r *= base;
    }
    return r;
}

void run_chunks(std::uint64_t total, int workers,
                const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total && total > 0)
        workers = static_cast<int>(total);
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = chunk * w;
        const std::uint64_t hi = (w + 1 == workers) ? total : chunk * (w + 1);
        pool.emplace_back(fn, w, lo, hi);
    }
    for (auto& t : pool) t.join();
}

// Residue field size: F.q() for the linear forms, sub_q for the unitary
// forms (whose matrices live over the quadratic extension).
std::uint64_t residue_q(GroupForm form, const FieldDesc& F) {
    const bool unitary = form.family == Family::GU || form.family == Family::SU;
    if (!unitary) return F.q();
    if (!F.has_tower())
        throw std::invalid_argument("unitary census needs the quadratic tower field F_{q^2}");
    return F.sub_q();
}

bool traceless_domain(GroupForm form) { return form.special(); }

// Enumeration domain of g(k) (or its traceless variant): mixed-radix decode
// of idx into a matrix. The unitary domains fill the diagonal from the
// trace-zero set and derive the lower triangle from the upper one.
struct Domain {
    GroupForm form;
    int n;
    const FieldDesc* F;
    std::uint64_t size = 0;

    Domain(GroupForm form_, int n_, const FieldDesc& field) : form(form_), n(n_), F(&field) {
        const bool unitary = form.family == Family::GU || form.family == Family::SU;
        const std::uint64_t sq = residue_q(form, field);
        const unsigned cells = static_cast<unsigned>(n) * static_cast<unsigned>(n);
        const unsigned free_cells = cells - (traceless_domain(form) ? 1u : 0u);
        if (!unitary) {
            size = pow_u64_checked(sq, free_cells, kMatrixCensusBound);
        } else {
            // sq choices per free diagonal entry, q^2 per strict-upper entry:
            // sq^{n^2} (or sq^{n^2-1} traceless) in residue-field terms.
            size = pow_u64_checked(sq, free_cells, kMatrixCensusBound);
        }
    }

    MatrixFF decode(std::uint64_t idx) const {
        MatrixFF m = MatrixFF::zero(n);
        const bool unitary = form.family == Family::GU || form.family == Family::SU;
        if (!unitary) {
            const std::uint64_t q = F->q();
            ffe diag_sum = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (traceless_domain(form) && i == n - 1 && j == n - 1) continue;
                    m.at(i, j) = static_cast<ffe>(idx % q);
                    idx /= q;
                    if (i == j) diag_sum = F->add(diag_sum, m.at(i, j));
                }
            if (traceless_domain(form)) m.at(n - 1, n - 1) = F->neg(diag_sum);
            return m;
        }
        const auto& tz = F->trace_zero_elements();
        const std::uint64_t sq = tz.size();
        const std::uint64_t q2 = F->q();
        const int free_diag = traceless_domain(form) ? n - 1 : n;
        ffe diag_sum = 0;
        for (int i = 0; i < free_diag; ++i) {
            m.at(i, i) = tz[static_cast<std::size_t>(idx % sq)];
            idx /= sq;
            diag_sum = F->add(diag_sum, m.at(i, i));
        }
        if (traceless_domain(form)) m.at(n - 1, n - 1) = F->neg(diag_sum);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const ffe v = static_cast<ffe>(idx % q2);
                idx /= q2;
                m.at(i, j) = v;
                m.at(j, i) = F->neg(F->conj(v));  // anti-hermitian mirror
            }
        return m;
    }
};

NType type_of_charpoly(GroupForm form, const FieldDesc& F, const FqPoly& cp) {
    const bool unitary = form.family == Family::GU || form.family == Family::SU;
    if (!unitary) return gl_type_of(F, cp);
    auto t = gu_type_of(F, cp);
    if (!t)
        throw std::logic_error(
            "census: characteristic polynomial of an anti-hermitian matrix "
            "is not tilde-fixed");
    return *t;
}

// Enumeration of the centraliser of a regular x inside the algebra it
// generates: coefficients range over the matrix entry field, membership is
// invertibility (GL) or unitarity (GU). Optionally collects the determinant
// image over the group members.
struct CentralizerStats {
    std::uint64_t members = 0;
    std::uint64_t det_image = 0;
    bool norms_ok = true;  // unitary dets satisfy z * conj(z) = 1
};

CentralizerStats scan_centralizer(GroupForm base, const FieldDesc& F, const MatrixFF& x,
                                  bool collect_det) {
    const int n = x.n;
    const bool unitary = base.family == Family::GU;
    std::vector<MatrixFF> powers{MatrixFF::identity(n)};
    for (int k = 1; k < n; ++k) powers.push_back(mat_mul(F, powers.back(), x));

    CentralizerStats stats;
    std::vector<char> seen(F.q(), 0);
    const std::uint64_t tuples = pow_u64_checked(F.q(), static_cast<unsigned>(n),
                                                 std::uint64_t(1) << 40);
    std::vector<ffe> coeff(static_cast<std::size_t>(n), 0);
    MatrixFF g = MatrixFF::zero(n);
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < n; ++i) {
            coeff[static_cast<std::size_t>(i)] = static_cast<ffe>(rest % F.q());
            rest /= F.q();
        }
        for (std::size_t cell = 0; cell < g.a.size(); ++cell) {
            ffe s = 0;
            for (int i = 0; i < n; ++i)
                s = F.add(s, F.mul(coeff[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(i)].a[cell]));
            g.a[cell] = s;
        }
        if (unitary) {
            if (!is_unitary(F, g)) continue;
            ++stats.members;
            if (collect_det) {
                const ffe d = mat_det(F, g);
                if (F.mul(d, F.conj(d)) != 1) stats.norms_ok = false;
                if (!seen[d]) {
                    seen[d] = 1;
                    ++stats.det_image;
                }
            }
        } else {
            const ffe d = mat_det(F, g);
            if (d == 0) continue;
            ++stats.members;
            if (collect_det && !seen[d]) {
                seen[d] = 1;
                ++stats.det_image;
            }
        }
    }
    return stats;
}

}  // namespace

bool CensusReport::pass() const {
    for (const auto& pr : {prop_4_2, lemma_4_3, prop_4_4, prop_4_5})
        if (pr.has_value() && !*pr) return false;
    return prop_4_2 || lemma_4_3 || prop_4_4 || prop_4_5;
}

MatrixScan scan_matrices(GroupForm form, int n, const FieldDesc& F, int sample_cap,
                         int parallelism) {
    if (n < 1) throw std::invalid_argument("scan_matrices: n must be positive");
    if (F.p() == 2)
        throw std::invalid_argument("scan_matrices: matrix censuses need odd characteristic");
    const Domain dom(form, n, F);

    struct Hit {
        std::uint64_t idx;
        MatrixFF m;
    };
    struct WorkerOut {
        std::map<NType, std::uint64_t> tallies;
        std::map<NType, std::vector<Hit>> samples;
        std::uint64_t regular = 0;
    };
    const int workers = parallelism < 1 ? 1 : parallelism;
    std::vector<WorkerOut> outs(static_cast<std::size_t>(workers));

    run_chunks(dom.size, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        WorkerOut& out = outs[static_cast<std::size_t>(w)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const MatrixFF m = dom.decode(idx);
            auto cp = regular_charpoly(F, m);
            if (!cp) continue;
            ++out.regular;
            NType tau = type_of_charpoly(form, F, *cp);
            auto& bucket = out.samples[tau];
            if (sample_cap > 0 && bucket.size() < static_cast<std::size_t>(sample_cap))
                bucket.push_back({idx, m});
            ++out.tallies[tau];
        }
    });

    MatrixScan scan;
    scan.domain_size = dom.size;
    for (auto& out : outs) {
        scan.regular_total += out.regular;
        for (auto& [tau, c] : out.tallies) scan.tallies[tau] += c;
    }
    if (sample_cap > 0) {
        std::map<NType, std::vector<Hit>> merged;
        for (auto& out : outs)
            for (auto& [tau, hits] : out.samples) {
                auto& dst = merged[tau];
                dst.insert(dst.end(), hits.begin(), hits.end());
            }
        for (auto& [tau, hits] : merged) {
            std::sort(hits.begin(), hits.end(),
                      [](const Hit& a, const Hit& b) { return a.idx < b.idx; });
            if (hits.size() > static_cast<std::size_t>(sample_cap))
                hits.resize(static_cast<std::size_t>(sample_cap));
            auto& dst = scan.samples[tau];
            for (auto& h : hits) dst.push_back(std::move(h.m));
        }
    }
    return scan;
}

std::map<NType, Integer> census_types_gl(int n, const FieldDesc& Fq) {
    if (n < 1) throw std::invalid_argument("census_types_gl: n must be positive");
    const std::uint64_t total = pow_u64_checked(Fq.q(), static_cast<unsigned>(n),
                                                kPolyCensusBound);
    std::map<NType, Integer> counts;
    for (std::uint64_t idx = 0; idx < total; ++idx)
        ++counts[gl_type_of(Fq, FqPoly::monic_from_index(Fq, idx, n))];
    return counts;
}

std::map<NType, Integer> census_types_gu(int n, const FieldDesc& Fq2) {
    if (n < 1) throw std::invalid_argument("census_types_gu: n must be positive");
    if (!Fq2.has_tower())
        throw std::invalid_argument("census_types_gu: needs the tower field F_{q^2}");
    pow_u64_checked(Fq2.q(), static_cast<unsigned>(n), kPolyCensusBound);

    // Building blocks of degree <= n: self-dual irreducibles of degree d,
    // and tilde-dual pairs {g, gtilde} counted once, of total degree 2d.
    std::vector<int> block_degrees;
    for (int d = 1; d <= n; ++d) {
        const std::uint64_t scan = pow_u64_checked(Fq2.q(), static_cast<unsigned>(d),
                                                   kPolyCensusBound);
        for (std::uint64_t idx = 0; idx < scan; ++idx) {
            FqPoly g = FqPoly::monic_from_index(Fq2, idx, d);
            if (!is_irreducible(Fq2, g)) continue;
            const FqPoly gt = tilde(Fq2, g);
            if (gt == g) {
                block_degrees.push_back(d);
            } else if (g < gt && 2 * d <= n) {
                block_degrees.push_back(2 * d);
            }
        }
    }
    std::sort(block_degrees.begin(), block_degrees.end());

    // Multisets of distinct blocks with exponents, total degree n.
    std::map<NType, Integer> counts;
    std::vector<std::pair<int, int>> chosen;  // (block degree, exponent)
    auto record = [&]() {
        std::map<std::pair<int, int>, int> agg;
        for (auto [d, e] : chosen) ++agg[{d, e}];
        std::vector<std::array<int, 3>> entries;
        for (const auto& [de, m] : agg) entries.push_back({de.first, de.second, m});
        ++counts[NType::make(n, std::move(entries))];
    };
    std::function<void(std::size_t, int)> dfs = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            record();
            return;
        }
        for (std::size_t i = start; i < block_degrees.size(); ++i) {
            const int d = block_degrees[i];
            if (d > remaining) break;
            for (int e = 1; d * e <= remaining; ++e) {
                chosen.emplace_back(d, e);
                dfs(i + 1, remaining - d * e);
                chosen.pop_back();
            }
        }
    };
    dfs(0, n);
    return counts;
}

CensusReport check_type_census(GroupForm form, int n, const FieldDesc& F) {
    const auto t0 = Clock::now();
    if (form.special())
        throw std::invalid_argument("check_type_census: form must be GL or GU");
    const bool unitary = form.family == Family::GU;
    const Integer q(residue_q(form, F));

    const auto counts = unitary ? census_types_gu(n, F) : census_types_gl(n, F);

    CensusReport report;
    report.form = form;
    report.n = n;
    report.q = q.convert_to<std::uint64_t>();
    bool ok = true;
    Integer total = 0;
    for (const NType& tau : enumerate_types(n)) {
        TypeTally row;
        row.type = tau;
        auto it = counts.find(tau);
        row.poly_count = it == counts.end() ? Integer(0) : it->second;
        row.poly_expected = type_combinatorial_factor(tau, q);
        total += row.poly_count;
        if (row.poly_count != row.poly_expected) ok = false;
        report.rows.push_back(std::move(row));
    }
    if (total != ipow(q, static_cast<std::uint64_t>(n))) ok = false;
    report.prop_4_2 = ok;
    report.seconds = seconds_since(t0);
    return report;
}

LemmaReport verify_lemma_4_3(int d_max, const FieldDesc& Fq2) {
    const auto t0 = Clock::now();
    if (!Fq2.has_tower())
        throw std::invalid_argument("verify_lemma_4_3: needs the tower field F_{q^2}");
    if (d_max < 1) throw std::invalid_argument("verify_lemma_4_3: d_max must be >= 1");
    const std::uint64_t q = Fq2.sub_q();
    pow_u64_checked(q, static_cast<unsigned>(d_max), kPolyCensusBound);

    LemmaReport report;
    report.q = q;
    report.d_max = d_max;

    // Self-dual monic candidates of degree d: coefficient i lies in the
    // fixed field when d - i is even, in the trace-zero set when odd;
    // exactly q^d candidates, covering every tilde-fixed polynomial.
    const auto& fixed = Fq2.subfield_elements();
    const auto& zero_trace = Fq2.trace_zero_elements();
    for (int d = 1; d <= d_max; ++d) {
        LemmaRow row;
        row.d = d;
        row.expected = (d % 2 == 1) ? w_value(d, Integer(q)) : Integer(0);
        std::uint64_t count = 0;
        std::uint64_t candidates = 1;
        for (int i = 0; i < d; ++i) candidates *= q;
        const Integer trace_exp = ipow(Integer(q), static_cast<std::uint64_t>(d));
        for (std::uint64_t idx = 0; idx < candidates; ++idx) {
            std::vector<ffe> c(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t rest = idx;
            for (int i = 0; i < d; ++i) {
                const auto& pool = ((d - i) % 2 == 0) ? fixed : zero_trace;
                c[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(rest % q)];
                rest /= q;
            }
            c[static_cast<std::size_t>(d)] = 1;
            FqPoly f(Fq2, std::move(c));
            if (!is_irreducible(Fq2, f)) continue;
            ++count;
            // xi + xi^{q^d} = 0 in F_{q^2}[t]/(f).
            FqPoly xi = FqPoly::x(Fq2);
            FqPoly power = fq_powmod(Fq2, xi, trace_exp, f);
            if (!fq_add(Fq2, power, fq_mod(Fq2, xi, f)).is_zero()) row.trace_zero_ok = false;
        }
        row.self_dual_irreducible = count;
        if (row.self_dual_irreducible != row.expected || !row.trace_zero_ok)
            report.pass = false;
        report.rows.push_back(std::move(row));
    }
    report.seconds = seconds_since(t0);
    return report;
}

CensusReport census_regular_matrices(GroupForm form, int n, const FieldDesc& F,
                                     int sample_cap, int parallelism) {
    const auto t0 = Clock::now();
    if (form.special())
        throw std::invalid_argument("census_regular_matrices: form must be GL or GU");
    const bool unitary = form.family == Family::GU;
    const int eps = form.epsilon();
    const Integer q(residue_q(form, F));

    const MatrixScan scan = scan_matrices(form, n, F, sample_cap, parallelism);
    const auto poly_counts = unitary ? census_types_gu(n, F) : census_types_gl(n, F);

    CensusReport report;
    report.form = form;
    report.n = n;
    report.q = q.convert_to<std::uint64_t>();
    bool ok = true;
    for (const NType& tau : enumerate_types(n)) {
        TypeTally row;
        row.type = tau;
        auto pc = poly_counts.find(tau);
        row.poly_count = pc == poly_counts.end() ? Integer(0) : pc->second;
        row.poly_expected = type_combinatorial_factor(tau, q);
        auto tc = scan.tallies.find(tau);
        row.element_count = tc == scan.tallies.end() ? Integer(0)
                                                     : Integer(tc->second);
        row.element_expected = row.poly_count * orbit_degree_poly(tau, eps)(q);
        row.centralizer_expected = u_poly(tau, eps)(q);
        if (row.element_count != row.element_expected) ok = false;

        auto sm = scan.samples.find(tau);
        if (sm != scan.samples.end()) {
            for (const MatrixFF& x : sm->second) {
                const CentralizerStats stats = scan_centralizer(form, F, x, false);
                ++row.centralizer_checked;
                if (Integer(stats.members) != row.centralizer_expected) {
                    row.centralizer_ok = false;
                    ok = false;
                }
            }
        }
        report.rows.push_back(std::move(row));
    }
    report.prop_4_4 = ok;
    report.seconds = seconds_since(t0);
    return report;
}

CensusReport verify_det_index(GroupForm form, int n, const FieldDesc& F, int sample_cap,
                              int parallelism) {
    const auto t0 = Clock::now();
    if (!form.special())
        throw std::invalid_argument("verify_det_index: form must be SL or SU");
    const GroupForm base{form.family == Family::SL ? Family::GL : Family::GU};
    const int eps = form.epsilon();
    const Integer q(residue_q(form, F));

    const MatrixScan scan = scan_matrices(base, n, F, sample_cap, parallelism);

    CensusReport report;
    report.form = form;
    report.n = n;
    report.q = q.convert_to<std::uint64_t>();
    bool ok = true;
    for (const NType& tau : enumerate_types(n)) {
        TypeTally row;
        row.type = tau;
        auto tc = scan.tallies.find(tau);
        row.element_count = tc == scan.tallies.end() ? Integer(0) : Integer(tc->second);
        row.centralizer_expected = u_poly(tau, eps)(q);
        row.det_image_expected = exact_div(q - eps, iota(tau, q - eps));
        auto sm = scan.samples.find(tau);
        if (sm != scan.samples.end()) {
            for (const MatrixFF& x : sm->second) {
                const CentralizerStats stats = scan_centralizer(base, F, x, true);
                ++row.det_checked;
                if (!stats.norms_ok) row.det_ok = false;
                if (Integer(stats.det_image) != row.det_image_expected) row.det_ok = false;
                if (!row.det_image_size)
                    row.det_image_size = Integer(stats.det_image);
                else if (*row.det_image_size != Integer(stats.det_image))
                    row.det_ok = false;
            }
        }
        if (!row.det_ok || (row.element_count > 0 && row.det_checked == 0)) ok = false;
        report.rows.push_back(std::move(row));
    }
    report.prop_4_5 = ok;
    report.seconds = seconds_since(t0);
    return report;
}

Integer count_regular_elements(GroupForm form, int n, const FieldDesc& F) {
    const MatrixScan scan = scan_matrices(form, n, F, 0, 1);
    return Integer(scan.regular_total);
}

}  // namespace regzeta
