#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regzeta/json_io.hpp"
#include "regzeta/zeta.hpp"

namespace py = pybind11;
using namespace regzeta;

namespace {

py::object to_pyint(const Integer& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_pyfraction(const Rational& v) {
    return py::module_::import("fractions")
        .attr("Fraction")(numerator(v).str(), denominator(v).str());
}

NType make_type(int n, const std::vector<std::array<int, 3>>& entries) {
    return NType::make(n, entries);
}

std::vector<std::array<int, 3>> entries_of(const NType& tau) { return tau.entries; }

py::list flags_list(const ValiditySet& flags) {
    py::list out;
    for (auto f : flags) out.append(validity_name(f));
    return out;
}

py::dict char_row(const CharClass& row) {
    py::dict d;
    d["form"] = row.form.name();
    d["n"] = row.n;
    d["q"] = to_pyint(row.q);
    d["level"] = row.level;
    d["type"] = entries_of(row.type);
    d["degree"] = to_pyint(row.degree);
    d["count"] = to_pyint(row.count);
    d["flags"] = flags_list(row.flags);
    return d;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

FieldDesc field_for(GroupForm form, std::uint64_t q) {
    std::uint64_t p = 0;
    unsigned f = 0;
    if (!prime_power_decompose(q, p, f))
        throw std::invalid_argument("q must be a prime power");
    const bool unitary = form.family == Family::GU || form.family == Family::SU;
    return FieldDesc::make(static_cast<std::uint32_t>(p), unitary ? 2 * f : f);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact degrees, counts and regular representation zeta functions of "
              "GL/GU/SL/SU over complete discrete valuation rings, plus brute-force "
              "finite-field verification oracles.";
    m.attr("__version__") = "1.0.0";

    m.def(
        "types",
        [](int n) {
            std::vector<std::vector<std::array<int, 3>>> out;
            for (const auto& tau : enumerate_types(n)) out.push_back(tau.entries);
            return out;
        },
        py::arg("n"), "All n-types in canonical order, as lists of (d, e, mult) triples.");

    m.def(
        "w_coeffs",
        [](int d) {
            py::list out;
            for (const auto& c : w_poly(d).coefficients()) out.append(to_pyfraction(c));
            return out;
        },
        py::arg("d"),
        "Coefficients of the irreducible-polynomial counter w_d, ascending, as Fractions.");

    m.def(
        "iota",
        [](int n, const std::vector<std::array<int, 3>>& type, long long r) {
            return to_pyint(iota(make_type(n, type), Integer(r)));
        },
        py::arg("n"), py::arg("type"), py::arg("r"));

    m.def(
        "type_factor",
        [](int n, const std::vector<std::array<int, 3>>& type, long long q) {
            return to_pyint(type_combinatorial_factor(make_type(n, type), Integer(q)));
        },
        py::arg("n"), py::arg("type"), py::arg("q"),
        "Number of characteristic polynomials of the given type over F_q.");

    m.def(
        "degree",
        [](const std::string& form, int n, long long q, int level,
           const std::vector<std::array<int, 3>>& type) {
            return to_pyint(
                degree(GroupForm::parse(form), n, Integer(q), level, make_type(n, type)));
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("level"), py::arg("type"));

    m.def(
        "count",
        [](const std::string& form, int n, long long q, int level,
           const std::vector<std::array<int, 3>>& type) {
            return to_pyint(
                count(GroupForm::parse(form), n, Integer(q), level, make_type(n, type)));
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("level"), py::arg("type"));

    m.def(
        "degree_table",
        [](const std::string& form, int n, long long q, int level) {
            py::list out;
            for (const auto& row : degree_table(GroupForm::parse(form), n, Integer(q), level))
                out.append(char_row(row));
            return out;
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("level") = 1,
        "One row per type: degree, count and validity flags.");

    m.def(
        "ennola",
        [](int n, int level) {
            py::list out;
            for (const auto& tau : enumerate_types(n)) {
                const EnnolaReport rep = ennola_check(n, level, tau);
                py::dict d;
                d["type"] = entries_of(tau);
                d["holds"] = rep.holds;
                d["f"] = to_string(rep.gl_poly);
                d["g"] = to_string(rep.gu_poly);
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("level") = 1);

    m.def(
        "zeta",
        [](const std::string& form, int n, long long q) {
            const ZetaExpr z = build_zeta(GroupForm::parse(form), n, Integer(q));
            py::dict d;
            d["form"] = z.form.name();
            d["n"] = z.n;
            d["q"] = to_pyint(z.q);
            d["a"] = z.prefactor_base_exponent;
            d["b"] = z.prefactor_s_exponent;
            py::list terms;
            for (const auto& t : z.terms) {
                py::dict term;
                term["type"] = entries_of(t.type);
                term["c"] = to_pyint(t.c);
                term["D"] = to_pyint(t.D);
                terms.append(term);
            }
            d["terms"] = terms;
            d["flags"] = flags_list(z.flags);
            const auto alpha = abscissa(z);
            d["abscissa"] = alpha ? to_pyfraction(*alpha) : py::object(py::none());
            return d;
        },
        py::arg("form"), py::arg("n"), py::arg("q"),
        "Closed form: prefactor exponents (a, b) and the per-type (c, D) terms.");

    m.def(
        "zeta_evaluate",
        [](const std::string& form, int n, long long q, double s) {
            return evaluate(build_zeta(GroupForm::parse(form), n, Integer(q)), s);
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("s"));

    m.def(
        "dirichlet_coeffs",
        [](const std::string& form, int n, long long q, long long M) {
            const DirichletSlice slice =
                dirichlet_coeffs(build_zeta(GroupForm::parse(form), n, Integer(q)), Integer(M));
            py::dict out;
            for (const auto& [deg, cnt] : slice.coeffs)
                out[to_pyint(deg)] = to_pyint(cnt);
            return out;
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("M"),
        "Degree -> multiplicity for every regular-character degree <= M.");

    m.def(
        "sum_of_squares",
        [](const std::string& form, int n, long long q) {
            return to_pyint(sum_of_squares(GroupForm::parse(form), n, Integer(q)));
        },
        py::arg("form"), py::arg("n"), py::arg("q"));

    m.def(
        "count_regular_elements",
        [](const std::string& form, int n, long long q) {
            const GroupForm gf = GroupForm::parse(form);
            return to_pyint(count_regular_elements(gf, n, field_for(gf, q)));
        },
        py::arg("form"), py::arg("n"), py::arg("q"),
        "Brute-force count of regular elements of g(k) (traceless variant for sl/su).");

    m.def(
        "verify_types",
        [](const std::string& form, int n, long long q) {
            const GroupForm gf = GroupForm::parse(form);
            return json_to_py(to_json(check_type_census(gf, n, field_for(gf, q))));
        },
        py::arg("form"), py::arg("n"), py::arg("q"),
        "Exhaustive polynomial type census against the counting formula.");

    m.def(
        "verify_matrices",
        [](const std::string& form, int n, long long q, int sample_cap, int parallelism) {
            const GroupForm gf = GroupForm::parse(form);
            const FieldDesc F = field_for(gf, q);
            if (gf.special())
                return json_to_py(to_json(verify_det_index(gf, n, F, sample_cap, parallelism)));
            return json_to_py(
                to_json(census_regular_matrices(gf, n, F, sample_cap, parallelism)));
        },
        py::arg("form"), py::arg("n"), py::arg("q"), py::arg("sample_cap") = 200,
        py::arg("parallelism") = 1,
        "Exhaustive matrix census: centralizer orders for gl/gu, determinant-image "
        "indices for sl/su.");

    m.def(
        "verify_self_dual",
        [](int d_max, long long q) {
            std::uint64_t p = 0;
            unsigned f = 0;
            if (!prime_power_decompose(static_cast<std::uint64_t>(q), p, f))
                throw std::invalid_argument("q must be a prime power");
            const FieldDesc Fq2 = FieldDesc::make(static_cast<std::uint32_t>(p), 2 * f);
            return json_to_py(to_json(verify_lemma_4_3(d_max, Fq2)));
        },
        py::arg("d_max"), py::arg("q"),
        "Self-dual irreducibles over F_{q^2} up to degree d_max: odd degree, "
        "trace-zero roots, counts w_d(q).");
}
