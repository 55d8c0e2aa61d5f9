#include "regzeta/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "regzeta/json_io.hpp"
#include "regzeta/zeta.hpp"

namespace regzeta {

namespace {

// Tabular view of a payload: one header row plus data rows. CSV quoting is
// unnecessary because every cell is drawn from a fixed alphabet without
// commas or quotes (types serialize as d:e:m blocks joined by ';').
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string type_cell(const NType& tau) {
    std::string s;
    for (std::size_t i = 0; i < tau.entries.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(tau.entries[i][0]) + ':' + std::to_string(tau.entries[i][1]) +
             ':' + std::to_string(tau.entries[i][2]);
    }
    return s;
}

std::string flags_cell(const ValiditySet& flags) {
    std::string s;
    for (auto f : flags) {
        if (!s.empty()) s += ';';
        s += validity_name(f);
    }
    return s;
}

void print_csv(std::ostream& out, const Table& t) {
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

void print_table(std::ostream& out, const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&width](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[i];
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

struct Emitter {
    std::string format = "json";
    std::string command;
    json params = json::object();
    std::vector<std::string> warnings;

    void emit(std::ostream& out, const json& payload, const Table& table) const {
        if (format == "csv") {
            print_csv(out, table);
        } else if (format == "table") {
            print_table(out, table);
        } else {
            json envelope{{"command", command},
                          {"params", params},
                          {"payload", payload},
                          {"warnings", warnings},
                          {"version", kToolVersion}};
            out << envelope.dump(2) << '\n';
        }
    }
};

void warn_flags(Emitter& em, const ValiditySet& flags, std::ostream& err) {
    for (auto f : flags) {
        std::string msg;
        switch (f) {
            case Validity::q_le_n:
                msg = "q <= n: the degree list is a superset of the occurring degrees";
                break;
            case Validity::even_p_unchecked:
                msg = "even residue characteristic: group-level statements assume odd p";
                break;
            case Validity::p_divides_n:
                msg = "p divides n: the special-form theory needs characteristic prime to n";
                break;
            case Validity::q_not_prime_power:
                msg = "q is not a prime power";
                break;
            case Validity::n_degenerate:
                msg = "n = 1 is degenerate: counts include characters of smaller exact level";
                break;
        }
        em.warnings.push_back(msg);
        err << "warning: " << msg << '\n';
    }
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
    std::vector<std::uint64_t> qs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        qs.push_back(std::stoull(item));
    }
    if (qs.empty()) throw std::invalid_argument("empty q list");
    return qs;
}

struct FieldPair {
    std::uint64_t q;
    std::uint64_t p;
    unsigned f;
};

FieldPair decompose_q(std::uint64_t q) {
    FieldPair fp{q, 0, 0};
    if (!prime_power_decompose(q, fp.p, fp.f))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return fp;
}

void pow_check(std::uint64_t base, unsigned e, std::uint64_t bound, const char* what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > bound / base) throw BoundExceeded(std::string("verify: ") + what);
        r *= base;
    }
}

int cmd_types(Emitter& em, std::ostream& out, int n) {
    const auto types = enumerate_types(n);
    json payload = json::array();
    Table table{{"n", "entries"}, {}};
    for (const auto& tau : types) {
        payload.push_back(to_json(tau));
        table.rows.push_back({std::to_string(n), type_cell(tau)});
    }
    em.emit(out, payload, table);
    return 0;
}

int cmd_degree_table(Emitter& em, std::ostream& out, std::ostream& err, GroupForm form,
                     int n, std::uint64_t q, int level) {
    const auto rows = degree_table(form, n, Integer(q), level);
    if (!rows.empty()) warn_flags(em, rows.front().flags, err);
    json payload = json::array();
    Table table{{"form", "n", "q", "level", "type", "degree", "count", "flags"}, {}};
    for (const auto& row : rows) {
        payload.push_back(to_json(row));
        table.rows.push_back({row.form.name(), std::to_string(row.n), row.q.str(),
                              std::to_string(row.level), type_cell(row.type),
                              row.degree.str(), exact_str(row.count), flags_cell(row.flags)});
    }
    em.emit(out, payload, table);
    return 0;
}

int cmd_zeta(Emitter& em, std::ostream& out, std::ostream& err, GroupForm form, int n,
             std::uint64_t q, bool symbolic, double* s_opt, std::uint64_t* truncate_opt) {
    const ZetaExpr z = build_zeta(form, n, Integer(q));
    warn_flags(em, z.flags, err);
    if (symbolic) {
        json payload = to_json(z);
        Table table{{"form", "n", "q", "a", "b", "type", "c", "D"}, {}};
        for (const auto& t : z.terms)
            table.rows.push_back({form.name(), std::to_string(n), std::to_string(q),
                                  std::to_string(z.prefactor_base_exponent),
                                  std::to_string(z.prefactor_s_exponent), type_cell(t.type),
                                  exact_str(t.c), t.D.str()});
        em.emit(out, payload, table);
        return 0;
    }
    if (s_opt) {
        const double value = evaluate(z, *s_opt);
        json payload{{"s", *s_opt}, {"value", value}};
        std::ostringstream vs;
        vs << std::setprecision(15) << value;
        std::ostringstream ss;
        ss << *s_opt;
        Table table{{"s", "value"}, {{ss.str(), vs.str()}}};
        em.emit(out, payload, table);
        return 0;
    }
    const DirichletSlice slice = dirichlet_coeffs(z, Integer(*truncate_opt));
    json payload = to_json(slice);
    Table table{{"m", "r_m"}, {}};
    for (const auto& [deg, count] : slice.coeffs)
        table.rows.push_back({deg.str(), exact_str(count)});
    em.emit(out, payload, table);
    return 0;
}

int cmd_ennola(Emitter& em, std::ostream& out, int n, int level) {
    json payload = json::array();
    Table table{{"n", "level", "type", "holds", "f", "g"}, {}};
    bool all_hold = true;
    for (const auto& tau : enumerate_types(n)) {
        const EnnolaReport rep = ennola_check(n, level, tau);
        all_hold = all_hold && rep.holds;
        payload.push_back(to_json(rep));
        table.rows.push_back({std::to_string(n), std::to_string(level), type_cell(tau),
                              rep.holds ? "true" : "false", to_string(rep.gl_poly),
                              to_string(rep.gu_poly)});
    }
    em.emit(out, payload, table);
    return all_hold ? 0 : 1;
}

int cmd_verify(Emitter& em, std::ostream& out, std::ostream& err, const std::string& suite,
               int max_n, const std::string& q_list_text, int sample_cap, int parallelism) {
    const auto qs = parse_q_list(q_list_text);
    const bool do_polys = suite == "polys" || suite == "all";
    const bool do_matrices = suite == "matrices" || suite == "all";
    if (!do_polys && !do_matrices)
        throw std::invalid_argument("suite must be polys, matrices or all");
    if (max_n < 1 || max_n > kMaxTypeRank)
        throw BoundExceeded("verify: --max-n outside [1, " + std::to_string(kMaxTypeRank) + "]");

    // Validate every requested combination before running anything.
    std::vector<FieldPair> fields;
    for (auto q : qs) {
        FieldPair fp = decompose_q(q);
        for (int n = 1; n <= max_n; ++n) {
            if (do_polys) {
                pow_check(q * q, static_cast<unsigned>(n), kPolyCensusBound,
                          "polynomial census bound (q^2)^n <= 2^24");
            }
            if (do_matrices) {
                if (fp.p == 2)
                    throw std::invalid_argument(
                        "matrix censuses need odd q (got q = " + std::to_string(q) + ")");
                pow_check(q, static_cast<unsigned>(n) * static_cast<unsigned>(n),
                          kMatrixCensusBound, "matrix census bound q^{n^2} <= 2^22");
            }
        }
        fields.push_back(fp);
    }

    json payload = json::array();
    Table table{{"check", "form", "n", "q", "pass", "seconds"}, {}};
    bool all_pass = true;
    auto push_report = [&](const char* kind, const CensusReport& rep) {
        all_pass = all_pass && rep.pass();
        json j = to_json(rep);
        j["check"] = kind;
        payload.push_back(std::move(j));
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << rep.seconds;
        table.rows.push_back({kind, rep.form.name(), std::to_string(rep.n),
                              std::to_string(rep.q), rep.pass() ? "true" : "false",
                              secs.str()});
    };

    for (const auto& fp : fields) {
        if (do_polys) {
            const FieldDesc Fq = FieldDesc::make(static_cast<std::uint32_t>(fp.p), fp.f);
            const FieldDesc Fq2 = FieldDesc::make(static_cast<std::uint32_t>(fp.p), 2 * fp.f);
            for (int n = 1; n <= max_n; ++n) {
                push_report("type_census", check_type_census(GroupForm{Family::GL}, n, Fq));
                push_report("type_census", check_type_census(GroupForm{Family::GU}, n, Fq2));
            }
            const LemmaReport lem = verify_lemma_4_3(max_n, Fq2);
            all_pass = all_pass && lem.pass;
            json j = to_json(lem);
            j["check"] = "self_dual_irreducibles";
            payload.push_back(std::move(j));
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(3) << lem.seconds;
            table.rows.push_back({"self_dual_irreducibles", "GU", std::to_string(max_n),
                                  std::to_string(fp.q), lem.pass ? "true" : "false",
                                  secs.str()});
        }
        if (do_matrices) {
            const FieldDesc Fq = FieldDesc::make(static_cast<std::uint32_t>(fp.p), fp.f);
            const FieldDesc Fq2 = FieldDesc::make(static_cast<std::uint32_t>(fp.p), 2 * fp.f);
            for (int n = 1; n <= max_n; ++n) {
                push_report("centralizers", census_regular_matrices(GroupForm{Family::GL}, n,
                                                                    Fq, sample_cap, parallelism));
                push_report("centralizers", census_regular_matrices(GroupForm{Family::GU}, n,
                                                                    Fq2, sample_cap, parallelism));
                push_report("det_index", verify_det_index(GroupForm{Family::SL}, n, Fq,
                                                          sample_cap, parallelism));
                push_report("det_index", verify_det_index(GroupForm{Family::SU}, n, Fq2,
                                                          sample_cap, parallelism));
            }
        }
    }
    em.emit(out, payload, table);
    if (!all_pass) err << "verification FAILED\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact degrees, counts and regular representation zeta functions of "
                 "GL/GU/SL/SU over complete discrete valuation rings, with brute-force "
                 "finite-field verification"};
    app.name("regzeta");
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    int parallelism = static_cast<int>(
        std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
    app.add_option("--parallelism", parallelism, "Worker threads for the censuses")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    int n = 1;
    int level = 1;
    std::uint64_t q = 3;
    std::string form_text = "gl";

    auto* types_cmd = app.add_subcommand("types", "Enumerate the n-types A_n");
    types_cmd->add_option("--n", n, "Rank")->required();

    auto add_fnql = [&](CLI::App* cmd) {
        cmd->add_option("--form", form_text, "gl|gu|sl|su")->required();
        cmd->add_option("--n", n, "Rank")->required();
        cmd->add_option("--q", q, "Residue field size (prime power)")
            ->required()
            ->check(CLI::Range(std::uint64_t(2), std::uint64_t(1000000000)));
    };

    auto* degrees_cmd =
        app.add_subcommand("degrees", "Degrees of the regular characters per type");
    add_fnql(degrees_cmd);
    degrees_cmd->add_option("--level", level, "Level (>= 1)")->check(CLI::PositiveNumber);

    auto* counts_cmd =
        app.add_subcommand("counts", "Numbers of regular characters per type");
    add_fnql(counts_cmd);
    counts_cmd->add_option("--level", level, "Level (>= 1)")->check(CLI::PositiveNumber);

    auto* zeta_cmd = app.add_subcommand("zeta", "Regular representation zeta function");
    add_fnql(zeta_cmd);
    bool symbolic = false;
    double s_value = 0;
    std::uint64_t truncate_M = 0;
    auto* sym_flag = zeta_cmd->add_flag("--symbolic", symbolic, "Emit the closed form");
    auto* s_opt = zeta_cmd->add_option("--s", s_value, "Evaluate at real s");
    auto* trunc_opt =
        zeta_cmd->add_option("--truncate", truncate_M, "Dirichlet coefficients r_m for m <= M")
            ->check(CLI::PositiveNumber);
    sym_flag->excludes(s_opt)->excludes(trunc_opt);
    s_opt->excludes(trunc_opt);

    auto* ennola_cmd = app.add_subcommand("ennola", "Degree-polynomial Ennola duality check");
    ennola_cmd->add_option("--n", n, "Rank")->required();
    ennola_cmd->add_option("--level", level, "Level (>= 1)")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Brute-force finite-field verification");
    std::string suite = "all";
    int max_n = 3;
    std::string q_list = "3,5";
    int sample_cap = 200;
    verify_cmd->add_option("--suite", suite, "polys|matrices|all")
        ->check(CLI::IsMember({"polys", "matrices", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-n", max_n, "Largest rank to verify")->capture_default_str();
    verify_cmd->add_option("--q-list", q_list, "Comma-separated residue field sizes")
        ->capture_default_str();
    verify_cmd->add_option("--sample-cap", sample_cap,
                           "Centralizer/determinant samples per type")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    app.require_subcommand(0, 1);
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("regzeta");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    Emitter em;
    em.format = format;

    try {
        if (types_cmd->parsed()) {
            em.command = "types";
            em.params = json{{"n", n}};
            return cmd_types(em, out, n);
        }
        if (degrees_cmd->parsed() || counts_cmd->parsed()) {
            em.command = degrees_cmd->parsed() ? "degrees" : "counts";
            em.params = json{{"form", form_text}, {"n", n}, {"q", q}, {"level", level}};
            return cmd_degree_table(em, out, err, GroupForm::parse(form_text), n, q, level);
        }
        if (zeta_cmd->parsed()) {
            em.command = "zeta";
            em.params = json{{"form", form_text}, {"n", n}, {"q", q}};
            if (!symbolic && s_opt->count() == 0 && trunc_opt->count() == 0) {
                err << "error: zeta needs one of --symbolic, --s, --truncate\n";
                return 2;
            }
            double* sp = s_opt->count() ? &s_value : nullptr;
            std::uint64_t* mp = trunc_opt->count() ? &truncate_M : nullptr;
            if (sp) em.params["s"] = s_value;
            if (mp) em.params["truncate"] = truncate_M;
            return cmd_zeta(em, out, err, GroupForm::parse(form_text), n, q, symbolic, sp, mp);
        }
        if (ennola_cmd->parsed()) {
            em.command = "ennola";
            em.params = json{{"n", n}, {"level", level}};
            return cmd_ennola(em, out, n, level);
        }
        if (verify_cmd->parsed()) {
            em.command = "verify";
            em.params = json{{"suite", suite},
                             {"max_n", max_n},
                             {"q_list", q_list},
                             {"sample_cap", sample_cap},
                             {"parallelism", parallelism}};
            return cmd_verify(em, out, err, suite, max_n, q_list, sample_cap, parallelism);
        }
        out << app.help();
        return 2;
    } catch (const Diverges& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const Unbounded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotPrime& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace regzeta
