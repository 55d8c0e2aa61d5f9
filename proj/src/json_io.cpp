#include "regzeta/json_io.hpp"

namespace regzeta {

json type_entries_json(const NType& tau) {
    json entries = json::array();
    for (const auto& [d, e, m] : tau.entries) entries.push_back(json::array({d, e, m}));
    return entries;
}

json to_json(const NType& tau) {
    return json{{"n", tau.n}, {"entries", type_entries_json(tau)}};
}

NType ntype_from_json(const json& j) {
    std::vector<std::array<int, 3>> entries;
    for (const auto& ent : j.at("entries"))
        entries.push_back({ent.at(0).get<int>(), ent.at(1).get<int>(), ent.at(2).get<int>()});
    return NType::make(j.at("n").get<int>(), std::move(entries));
}

json to_json(const ValiditySet& flags) {
    json arr = json::array();
    for (auto f : flags) arr.push_back(validity_name(f));
    return arr;
}

json to_json(const CharClass& row) {
    return json{{"form", row.form.name()},
                {"n", row.n},
                {"q", row.q.str()},
                {"level", row.level},
                {"type", type_entries_json(row.type)},
                {"degree", row.degree.str()},
                {"count", exact_str(row.count)},
                {"flags", to_json(row.flags)}};
}

json to_json(const ZetaExpr& z) {
    json terms = json::array();
    for (const auto& t : z.terms)
        terms.push_back(json{{"type", type_entries_json(t.type)},
                             {"c", exact_str(t.c)},
                             {"D", t.D.str()}});
    return json{{"form", z.form.name()},
                {"n", z.n},
                {"q", z.q.str()},
                {"prefactor",
                 json{{"a", z.prefactor_base_exponent}, {"b", z.prefactor_s_exponent}}},
                {"terms", terms},
                {"flags", to_json(z.flags)}};
}

json to_json(const DirichletSlice& slice) {
    json coeffs = json::object();
    for (const auto& [deg, count] : slice.coeffs) coeffs[deg.str()] = exact_str(count);
    return json{{"M", slice.M.str()}, {"coeffs", coeffs}};
}

json to_json(const EnnolaReport& report) {
    return json{{"type", type_entries_json(report.type)},
                {"holds", report.holds},
                {"f", to_string(report.gl_poly)},
                {"g", to_string(report.gu_poly)}};
}

json to_json(const TypeTally& row) {
    json j{{"type", type_entries_json(row.type)},
           {"poly_count", row.poly_count.str()},
           {"poly_expected", row.poly_expected.str()},
           {"element_count", row.element_count.str()},
           {"element_expected", row.element_expected.str()},
           {"centralizer_expected", row.centralizer_expected.str()},
           {"centralizer_checked", row.centralizer_checked},
           {"centralizer_ok", row.centralizer_ok},
           {"det_checked", row.det_checked},
           {"det_ok", row.det_ok}};
    if (row.det_checked > 0) {
        j["det_image_expected"] = row.det_image_expected.str();
        if (row.det_image_size) j["det_image_size"] = row.det_image_size->str();
    }
    return j;
}

json to_json(const CensusReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) rows.push_back(to_json(r));
    json j{{"form", report.form.name()},
           {"n", report.n},
           {"q", report.q},
           {"rows", rows},
           {"seconds", report.seconds},
           {"pass", report.pass()}};
    if (report.prop_4_2) j["prop_4_2"] = *report.prop_4_2;
    if (report.lemma_4_3) j["lemma_4_3"] = *report.lemma_4_3;
    if (report.prop_4_4) j["prop_4_4"] = *report.prop_4_4;
    if (report.prop_4_5) j["prop_4_5"] = *report.prop_4_5;
    return j;
}

json to_json(const LemmaReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows)
        rows.push_back(json{{"d", r.d},
                            {"self_dual_irreducible", r.self_dual_irreducible.str()},
                            {"expected", r.expected.str()},
                            {"trace_zero_ok", r.trace_zero_ok}});
    return json{{"q", report.q},
                {"d_max", report.d_max},
                {"rows", rows},
                {"pass", report.pass},
                {"seconds", report.seconds}};
}

}  // namespace regzeta
