#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirac/catalog.hpp"
#include "dirac/errors.hpp"
#include "dirac/oracles.hpp"
#include "dirac/search.hpp"
#include "dirac/weight.hpp"

#ifndef DIRAC_VERSION
#define DIRAC_VERSION "0.0.0-dev"
#endif

namespace dirac {

using Json = nlohmann::ordered_json;

/// Everything `compute` reports, in a form that serializes to JSON and back
/// without loss. Vectors are in the basis named by `basis` ("e", or "f" for
/// F4 presentation).
struct OutputDocument {
    struct Term {
        WeightVec highest;
        std::int64_t coefficient = 0;
        friend bool operator==(const Term&, const Term&) = default;
    };
    struct LambdaRow {
        WeightVec lam;
        std::vector<std::pair<int, WeightVec>> entries; // (s, rho)
        friend bool operator==(const LambdaRow&, const LambdaRow&) = default;
    };
    enum class IndexState { defined, undefined, omitted };

    std::string version = DIRAC_VERSION;
    std::string family;
    std::string id;
    std::string real_form;
    std::optional<int> m;
    std::optional<int> n;
    std::string basis = "e";
    int rank = 0;
    int dim_a = 0;
    bool equal_rank = true;
    int s_bound = 0;
    int rho_candidates = 0;
    int lambda_candidates = 0;
    std::vector<DiracTriple> triples;
    std::int64_t hd_coefficient_per_triple = 1;
    std::vector<Term> hd;
    std::optional<std::int64_t> hd_stated_coefficient;
    std::optional<bool> hd_agrees_with_stated;
    IndexState di_state = IndexState::defined;
    std::vector<Term> di;
    std::vector<LambdaRow> per_lambda;
    bool pairing_ok = true;
    std::optional<int> sigma;
    std::optional<bool> di_zero;
    std::optional<bool> sigma_odd;
    bool all_lambda_singular = false;
    std::optional<bool> equivalent;
    std::vector<std::string> issues;
    Verdicts verdicts;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

inline constexpr const char* kIndexUndefined = "undefined (unequal rank)";

/// Assembles the document; `f_basis` presents vectors in F4 f-coordinates.
inline OutputDocument make_document(const Case& c, const SearchReport& r, bool f_basis, bool with_index,
                                    std::int64_t elapsed_ms) {
    if (f_basis && c.spec.family != Family::f4_4) throw invalid_case("--f-basis applies to f4_4 only");
    auto show = [&](const WeightVec& v) { return f_basis ? e_to_f(v) : v; };
    OutputDocument d;
    d.family = family_name(c.spec.family);
    d.id = c.spec.id();
    d.real_form = c.spec.real_form();
    if (c.spec.family == Family::so_even || c.spec.family == Family::so_odd) d.m = c.spec.m;
    if (c.spec.family == Family::so_even || c.spec.family == Family::so_odd || c.spec.family == Family::so_2n3)
        d.n = c.spec.n;
    d.basis = f_basis ? "f" : "e";
    d.rank = static_cast<int>(c.datum.rank);
    d.dim_a = c.datum.dim_a;
    d.equal_rank = c.datum.equal_rank;
    d.s_bound = r.s_bound;
    d.rho_candidates = static_cast<int>(r.rho_count);
    d.lambda_candidates = static_cast<int>(r.lambda_count);
    for (const auto& t : r.triples) d.triples.push_back({t.s, show(t.mu_s), show(t.rho), show(t.lam), t.length});
    d.hd_coefficient_per_triple = r.hd_coefficient_per_triple;
    for (const auto& [k, v] : r.hd.terms()) d.hd.push_back({show(k), v});
    d.hd_stated_coefficient = stated_hd_coefficient(c.spec.family);
    if (d.hd_stated_coefficient) {
        bool agrees = true;
        for (const auto& [k, v] : r.hd.terms()) agrees = agrees && v == *d.hd_stated_coefficient;
        d.hd_agrees_with_stated = agrees;
    }
    if (!c.datum.equal_rank) {
        d.di_state = OutputDocument::IndexState::undefined;
    } else if (!with_index) {
        d.di_state = OutputDocument::IndexState::omitted;
    } else {
        for (const auto& [k, v] : r.di->terms()) d.di.push_back({show(k), v});
    }
    for (const auto& [lam, entries] : r.structure.per_lambda) {
        OutputDocument::LambdaRow row{show(lam), {}};
        for (const auto& e : entries) row.entries.emplace_back(e.s, show(e.rho));
        d.per_lambda.push_back(std::move(row));
    }
    const auto& s = r.structure;
    d.pairing_ok = s.pairing_ok;
    d.sigma = s.sigma;
    d.di_zero = s.di_zero;
    d.sigma_odd = s.sigma_odd;
    d.all_lambda_singular = s.all_lambda_singular;
    d.equivalent = s.equivalent;
    d.issues = s.issues;
    d.verdicts = computed_verdicts(r);
    if (!with_index && d.di_state == OutputDocument::IndexState::omitted) d.verdicts.index = "omitted";
    d.elapsed_ms = elapsed_ms;
    return d;
}

namespace detail {

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
    const Json& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<T>();
}

inline Json terms_json(const std::vector<OutputDocument::Term>& terms) {
    Json a = Json::array();
    for (const auto& t : terms) a.push_back({{"highest_weight", t.highest.str()}, {"coefficient", t.coefficient}});
    return a;
}

inline std::vector<OutputDocument::Term> terms_from(const Json& a) {
    std::vector<OutputDocument::Term> out;
    for (const auto& t : a)
        out.push_back({WeightVec::parse(t.at("highest_weight").get<std::string>()), t.at("coefficient").get<std::int64_t>()});
    return out;
}

} // namespace detail

inline Json to_json(const OutputDocument& d) {
    using detail::opt;
    Json j;
    j["version"] = d.version;
    Json params = Json::object();
    if (d.m) params["m"] = *d.m;
    if (d.n) params["n"] = *d.n;
    j["case"] = {{"family", d.family}, {"id", d.id}, {"real_form", d.real_form}, {"params", params}};
    j["basis"] = d.basis;
    j["rank"] = d.rank;
    j["dim_a"] = d.dim_a;
    j["equal_rank"] = d.equal_rank;
    j["search"] = {{"s_bound", d.s_bound}, {"rho_candidates", d.rho_candidates}, {"lambda_candidates", d.lambda_candidates}};
    Json triples = Json::array();
    for (const auto& t : d.triples)
        triples.push_back({{"s", t.s},
                           {"mu_s", t.mu_s.str()},
                           {"rho", t.rho.str()},
                           {"lambda", t.lam.str()},
                           {"length", opt(t.length)}});
    j["triples"] = triples;
    j["hd"] = {{"coefficient_per_triple", d.hd_coefficient_per_triple},
               {"terms", detail::terms_json(d.hd)},
               {"stated_coefficient", opt(d.hd_stated_coefficient)},
               {"agrees_with_stated", opt(d.hd_agrees_with_stated)}};
    switch (d.di_state) {
    case OutputDocument::IndexState::defined: j["di"] = detail::terms_json(d.di); break;
    case OutputDocument::IndexState::undefined: j["di"] = kIndexUndefined; break;
    case OutputDocument::IndexState::omitted: j["di"] = nullptr; break;
    }
    Json per = Json::array();
    for (const auto& row : d.per_lambda) {
        Json entries = Json::array();
        for (const auto& [s, rho] : row.entries) entries.push_back({{"s", s}, {"rho", rho.str()}});
        per.push_back({{"lambda", row.lam.str()}, {"entries", entries}});
    }
    j["structure"] = {{"pairing_ok", d.pairing_ok},
                      {"sigma", opt(d.sigma)},
                      {"di_zero", opt(d.di_zero)},
                      {"sigma_odd", opt(d.sigma_odd)},
                      {"all_lambda_singular", d.all_lambda_singular},
                      {"equivalent", opt(d.equivalent)},
                      {"issues", d.issues},
                      {"per_lambda", per}};
    j["verdicts"] = {{"cohomology", d.verdicts.cohomology},
                     {"index", d.verdicts.index},
                     {"infinitesimal_character", d.verdicts.infinitesimal_character}};
    j["timing"] = {{"elapsed_ms", d.elapsed_ms}};
    return j;
}

/// Inverse of to_json; throws parse_error on a malformed document.
inline OutputDocument from_json(const Json& j) {
    using detail::get_opt;
    try {
        OutputDocument d;
        d.version = j.at("version").get<std::string>();
        const Json& c = j.at("case");
        d.family = c.at("family").get<std::string>();
        d.id = c.at("id").get<std::string>();
        d.real_form = c.at("real_form").get<std::string>();
        const Json& params = c.at("params");
        if (params.contains("m")) d.m = params.at("m").get<int>();
        if (params.contains("n")) d.n = params.at("n").get<int>();
        d.basis = j.at("basis").get<std::string>();
        d.rank = j.at("rank").get<int>();
        d.dim_a = j.at("dim_a").get<int>();
        d.equal_rank = j.at("equal_rank").get<bool>();
        const Json& s = j.at("search");
        d.s_bound = s.at("s_bound").get<int>();
        d.rho_candidates = s.at("rho_candidates").get<int>();
        d.lambda_candidates = s.at("lambda_candidates").get<int>();
        for (const auto& t : j.at("triples"))
            d.triples.push_back({t.at("s").get<int>(), WeightVec::parse(t.at("mu_s").get<std::string>()),
                                 WeightVec::parse(t.at("rho").get<std::string>()),
                                 WeightVec::parse(t.at("lambda").get<std::string>()), get_opt<int>(t, "length")});
        const Json& hd = j.at("hd");
        d.hd_coefficient_per_triple = hd.at("coefficient_per_triple").get<std::int64_t>();
        d.hd = detail::terms_from(hd.at("terms"));
        d.hd_stated_coefficient = get_opt<std::int64_t>(hd, "stated_coefficient");
        d.hd_agrees_with_stated = get_opt<bool>(hd, "agrees_with_stated");
        const Json& di = j.at("di");
        if (di.is_null()) {
            d.di_state = OutputDocument::IndexState::omitted;
        } else if (di.is_string()) {
            if (di.get<std::string>() != kIndexUndefined) throw parse_error("unknown di state '" + di.get<std::string>() + "'");
            d.di_state = OutputDocument::IndexState::undefined;
        } else {
            d.di = detail::terms_from(di);
        }
        const Json& st = j.at("structure");
        d.pairing_ok = st.at("pairing_ok").get<bool>();
        d.sigma = get_opt<int>(st, "sigma");
        d.di_zero = get_opt<bool>(st, "di_zero");
        d.sigma_odd = get_opt<bool>(st, "sigma_odd");
        d.all_lambda_singular = st.at("all_lambda_singular").get<bool>();
        d.equivalent = get_opt<bool>(st, "equivalent");
        d.issues = st.at("issues").get<std::vector<std::string>>();
        for (const auto& row : st.at("per_lambda")) {
            OutputDocument::LambdaRow r{WeightVec::parse(row.at("lambda").get<std::string>()), {}};
            for (const auto& e : row.at("entries"))
                r.entries.emplace_back(e.at("s").get<int>(), WeightVec::parse(e.at("rho").get<std::string>()));
            d.per_lambda.push_back(std::move(r));
        }
        const Json& v = j.at("verdicts");
        d.verdicts = {v.at("cohomology").get<std::string>(), v.at("index").get<std::string>(),
                      v.at("infinitesimal_character").get<std::string>()};
        d.elapsed_ms = j.at("timing").at("elapsed_ms").get<std::int64_t>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed document: ") + e.what());
    }
}

/// Canonical text form: two-space indentation plus a trailing newline.
inline std::string dump(const OutputDocument& d) { return to_json(d).dump(2) + "\n"; }

} // namespace dirac
