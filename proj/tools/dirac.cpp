// dirac: list cases, compute Dirac triples, verify against reference data,
// dump K-dominant orbits, and re-validate JSON output.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "dirac/catalog.hpp"
#include "dirac/document.hpp"
#include "dirac/errors.hpp"
#include "dirac/oracles.hpp"
#include "dirac/reference.hpp"
#include "dirac/search.hpp"
#include "dirac/weyl.hpp"

namespace {

using namespace dirac;

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInvariant = 3 };

struct CaseArgs {
    std::string name;
    int m = -1;
    int n = -1;
};

void add_case_args(CLI::App* cmd, CaseArgs& a) {
    cmd->add_option("case", a.name, "Case name (see `dirac cases`)")->required();
    cmd->add_option("--m", a.m, "Parameter m (so_even, so_odd)");
    cmd->add_option("--n", a.n, "Parameter n (so_even, so_odd, so_2n3)");
}

CaseSpec resolve(const CaseArgs& a) {
    Family f = parse_family(a.name);
    bool needs_m = f == Family::so_even || f == Family::so_odd;
    bool needs_n = needs_m || f == Family::so_2n3;
    if (needs_m && a.m < 0) throw invalid_case(a.name + " requires --m");
    if (needs_n && a.n < 0) throw invalid_case(a.name + " requires --n");
    if (!needs_m && a.m >= 0) throw invalid_case(a.name + " takes no --m");
    if (!needs_n && a.n >= 0) throw invalid_case(a.name + " takes no --n");
    return make_case(f, a.m, a.n);
}

bool use_color() {
    const char* nc = std::getenv("NO_COLOR");
    return (nc == nullptr || *nc == '\0') && isatty(STDOUT_FILENO);
}

std::string mark(bool ok) {
    if (!use_color()) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string show(const WeightVec& v, bool f_basis) {
    std::string s = v.str();
    s.front() = '(';
    s.back() = ')';
    return f_basis ? s + "_f" : s;
}

// Pads to w code points (the registry uses UTF-8 for ≥).
std::string pad(std::string s, std::size_t w) {
    std::size_t cols = 0;
    for (unsigned char ch : s) cols += (ch & 0xC0) != 0x80;
    if (cols < w) s.append(w - cols, ' ');
    return s;
}

std::string ktype_sum(const std::vector<OutputDocument::Term>& terms, bool f_basis) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        std::int64_t c = t.coefficient;
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1) out += std::to_string(a);
        out += "E" + show(t.highest, f_basis);
    }
    return out;
}

std::string yes_no(std::optional<bool> b) { return !b ? "n/a" : *b ? "yes" : "no"; }

void print_table(const OutputDocument& d, std::ostream& os) {
    const bool f = d.basis == "f";
    os << "case " << d.id << "  " << d.real_form << "\n";
    os << "rank " << d.rank << ", dim a " << d.dim_a << (d.equal_rank ? ", equal rank" : ", unequal rank") << "\n";
    os << "s bound " << d.s_bound << ", |R_K(g)| " << d.rho_candidates << ", lambda candidates "
       << d.lambda_candidates << "\n\n";

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"s", "mu_s", "rho", "lambda"});
    if (d.equal_rank) rows.front().push_back("length of w");
    for (const auto& t : d.triples) {
        rows.push_back({std::to_string(t.s), show(t.mu_s, f), show(t.rho, f), show(t.lam, f)});
        if (d.equal_rank) rows.back().push_back(t.length ? std::to_string(*t.length) : "-");
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line;
        for (std::size_t i = 0; i < rows[k].size(); ++i) {
            if (i) line += " | ";
            line += i + 1 == rows[k].size() ? rows[k][i] : pad(rows[k][i], width[i]);
        }
        os << line << "\n";
        if (k == 0) {
            std::string rule;
            for (std::size_t i = 0; i < width.size(); ++i) rule += std::string(width[i] + (i ? 3 : 0), '-');
            os << rule << "\n";
        }
    }
    os << d.triples.size() << " triples";
    if (!d.equal_rank) os << "; length column omitted (index undefined)";
    os << "\n\n";

    os << "H_D(V) = " << ktype_sum(d.hd, f) << "\n";
    os << "  coefficient per triple 2^ceil(dim a/2) = " << d.hd_coefficient_per_triple << "\n";
    if (d.hd_stated_coefficient && d.hd_agrees_with_stated && !*d.hd_agrees_with_stated)
        os << "  note: closed-form display gives coefficient " << *d.hd_stated_coefficient
           << " per lambda; triple count gives a different value (flagged, not patched)\n";
    switch (d.di_state) {
    case OutputDocument::IndexState::defined: os << "DI(V) = " << ktype_sum(d.di, f) << "\n"; break;
    case OutputDocument::IndexState::undefined: os << "Dirac index: " << kIndexUndefined << "\n"; break;
    case OutputDocument::IndexState::omitted: os << "Dirac index: omitted\n"; break;
    }
    os << "\n";
    os << "pairing (every lambda in 0 or 2 triples): " << (d.pairing_ok ? "yes" : "no") << "\n";
    os << "sigma = s1 + s2: " << (d.sigma ? std::to_string(*d.sigma) : "undefined") << "\n";
    os << "DI = 0: " << yes_no(d.di_zero) << "; sigma odd: " << yes_no(d.sigma_odd)
       << "; every lambda singular: " << (d.all_lambda_singular ? "yes" : "no")
       << "; equivalent: " << yes_no(d.equivalent) << "\n";
    for (const auto& i : d.issues) os << "issue: " << i << "\n";
    os << "verdicts: cohomology " << d.verdicts.cohomology << ", index " << d.verdicts.index
       << ", infinitesimal character " << d.verdicts.infinitesimal_character << "\n";
}

int cmd_cases(bool json) {
    if (json) {
        Json a = Json::array();
        for (const auto& e : registry())
            a.push_back({{"name", e.name},
                         {"real_form", e.real_form},
                         {"params", e.params},
                         {"constraints", e.constraints},
                         {"rank", e.rank},
                         {"dim_a", e.dim_a},
                         {"equal_rank", e.equal_rank}});
        std::cout << a.dump(2) << "\n";
        return kOk;
    }
    for (const auto& e : registry()) {
        std::string head = e.name + (e.constraints.empty() ? "" : " " + e.constraints);
        std::cout << pad(head, 24) << pad(e.real_form, 16) << "rank " << pad(e.rank, 8) << "dim a " << e.dim_a
                  << "\n";
    }
    return kOk;
}

struct ComputeArgs {
    CaseArgs c;
    std::string format = "table";
    bool f_basis = false;
    bool no_index = false;
    bool no_timing = false;
    unsigned jobs = 1;
    int s_max = -1;
};

int cmd_compute(const ComputeArgs& a) {
    CaseSpec spec = resolve(a.c);
    if (a.f_basis && spec.family != Family::f4_4) throw invalid_case("--f-basis applies to f4_4 only");
    auto t0 = std::chrono::steady_clock::now();
    Case c = build(spec);
    if (auto bad = validate(c); !bad.empty()) throw invariant_violation("catalog: " + bad.front());
    SearchOptions opt;
    opt.jobs = a.jobs;
    if (a.s_max >= 0) opt.s_max = a.s_max;
    SearchReport r = run_search(c, opt);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    OutputDocument d = make_document(c, r, a.f_basis, !a.no_index, a.no_timing ? 0 : ms);
    if (a.format == "json") std::cout << dump(d);
    else if (a.format == "data") std::cout << format_table(triples_table(r.triples, a.f_basis));
    else print_table(d, std::cout);
    return kOk;
}

void print_diff(const TripleDiff& diff) {
    auto line = [](const char* tag, const DiracTriple& t) {
        std::cout << "  " << tag << " s=" << t.s << " rho=" << t.rho << " lambda=" << t.lam;
        if (t.length) std::cout << " length=" << *t.length;
        std::cout << "\n";
    };
    for (const auto& t : diff.missing) line("missing   ", t);
    for (const auto& t : diff.unexpected) line("unexpected", t);
    for (const auto& [e, f] : diff.length_mismatch)
        std::cout << "  length     s=" << e.s << " rho=" << e.rho << " expected " << *e.length << " got "
                  << (f.length ? std::to_string(*f.length) : "-") << "\n";
}

bool report(const std::string& what, const std::vector<DiracTriple>& expected, const std::vector<DiracTriple>& found) {
    TripleDiff diff = compare_triples(expected, found);
    bool ok = diff.empty();
    std::cout << mark(ok) << "  " << what << ": " << found.size() << " found, " << expected.size() << " expected\n";
    if (!ok) print_diff(diff);
    return ok;
}

void note_sum(const std::string& what, const KTypeSum& expected, const KTypeSum& found) {
    std::cout << (expected == found ? "agree" : "DIFFER") << "  " << what << "\n";
}

int cmd_verify(const CaseArgs& ca, const std::string& pairing, unsigned jobs) {
    CaseSpec spec = resolve(ca);
    Case c = build(spec);
    if (auto bad = validate(c); !bad.empty()) throw invariant_violation("catalog: " + bad.front());
    SearchOptions opt;
    opt.jobs = jobs;
    SearchReport r = run_search(c, opt);
    const auto& d = c.datum;
    bool ok = true;
    switch (spec.family) {
    case Family::so_even: {
        SoEvenPairing chosen = SoEvenPairing::mu_n_with_minus_eps;
        for (auto p : {SoEvenPairing::mu_n_with_minus_eps, SoEvenPairing::mu_n_with_eps, SoEvenPairing::by_block_parity})
            if (pairing_name(p) == pairing) chosen = p;
        if (!pairing.empty() && pairing_name(chosen) != pairing) throw invalid_case("unknown pairing '" + pairing + "'");
        ok = report("closed form (" + pairing_name(chosen) + ")", oracle_so_even(spec.m, spec.n, chosen), r.triples);
        for (auto p : {SoEvenPairing::mu_n_with_minus_eps, SoEvenPairing::mu_n_with_eps, SoEvenPairing::by_block_parity})
            if (p != chosen)
                std::cout << "      pairing " << pairing_name(p) << ": "
                          << (compare_triples(oracle_so_even(spec.m, spec.n, p), r.triples).empty() ? "matches"
                                                                                                    : "does not match")
                          << "\n";
        note_sum("H_D closed form", oracle_so_even_cohomology(spec.m, spec.n), r.hd);
        note_sum("DI = 0", KTypeSum{}, *r.di);
        break;
    }
    case Family::so_odd: {
        ok = report("closed form", oracle_so_odd(spec.m, spec.n), r.triples);
        std::cout << "note   H_D coefficient per lambda_P: " << 2 * r.hd_coefficient_per_triple
                  << " from 2 triples x 2^ceil(dim a/2); closed-form display gives "
                  << *stated_hd_coefficient(spec.family) << "\n";
        std::cout << "note   Dirac index: " << kIndexUndefined << "\n";
        break;
    }
    case Family::so_2n3:
        ok = report("closed form with lengths", oracle_so_2n3(spec.n), r.triples);
        note_sum("DI closed form (" + std::string(spec.n % 2 == 0 ? "even" : "odd") + " n)",
                 oracle_so_2n3_index(spec.n), *r.di);
        break;
    case Family::f4_4:
        ok = report("reference table with lengths", oracle_f4(), r.triples);
        note_sum("H_D closed form", oracle_f4_cohomology(), r.hd);
        note_sum("DI closed form", oracle_f4_index(), *r.di);
        break;
    case Family::e8_m24: {
        auto errata = e8_m24_errata();
        std::size_t repaired = 0;
        {
            std::vector<std::size_t> rows;
            for (const auto& e : errata) rows.push_back(e.row);
            std::sort(rows.begin(), rows.end());
            repaired = static_cast<std::size_t>(std::unique(rows.begin(), rows.end()) - rows.begin());
        }
        ok = report("reference table with lengths", oracle_e8_m24(), r.triples);
        std::cout << "      " << e8_m24_table_verbatim().rows.size() - repaired << " rows verbatim, " << repaired
                  << " rows after coordinate corrections\n";
        break;
    }
    case Family::e8_8:
        ok = report("frozen fixture with lengths", e8_8_fixture(), r.triples);
        break;
    }
    std::cout << "structure: pairing " << (r.structure.pairing_ok ? "ok" : "broken") << ", sigma "
              << (r.structure.sigma ? std::to_string(*r.structure.sigma) : "undefined") << ", equivalent "
              << yes_no(r.structure.equivalent) << "\n";
    (void)d;
    return ok ? kOk : kMismatch;
}

int cmd_orbit(const CaseArgs& ca, const std::string& seed, bool f_basis) {
    CaseSpec spec = resolve(ca);
    if (f_basis && spec.family != Family::f4_4) throw invalid_case("--f-basis applies to f4_4 only");
    Case c = build(spec);
    const auto& d = c.datum;
    WeightVec start = seed == "lambda" ? c.module.lambda0 : d.rho_g;
    OrbitSet o = orbit_k_dominant(start, d);
    for (const auto& v : o.elements)
        if (norm2(v) != norm2(start)) throw invariant_violation("orbit element " + v.str() + " changed norm");
    auto shown = [&](const WeightVec& v) { return show(f_basis ? e_to_f(v) : v, f_basis); };
    std::cout << o.size() << " K-dominant elements in W(g)·" << shown(start) << ", " << o.generations
              << " generations\n";
    for (const auto& v : o.elements) {
        std::cout << shown(v);
        if (d.equal_rank && seed == "rho") std::cout << "  length " << weyl_length(v, d);
        std::cout << "\n";
    }
    return kOk;
}

int cmd_check_json(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw parse_error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("not JSON: ") + e.what());
    }
    OutputDocument d = from_json(j);
    std::string again = dump(d);
    if (again != text) {
        std::cout << mark(false) << "  document does not round-trip byte-for-byte\n";
        return kMismatch;
    }
    std::cout << mark(true) << "  " << d.id << ": " << d.triples.size() << " triples, round trip exact\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac triples, cohomology and index of minimal (g,K)-modules"};
    app.set_version_flag("--version", std::string(DIRAC_VERSION));
    app.require_subcommand(1);

    bool cases_json = false;
    auto* cases = app.add_subcommand("cases", "List the supported cases");
    cases->add_flag("--json", cases_json, "Machine-readable output");

    ComputeArgs comp;
    auto* compute = app.add_subcommand("compute", "Search all Dirac triples of a case");
    add_case_args(compute, comp.c);
    compute->add_option("--format", comp.format, "Output format")->check(CLI::IsMember({"table", "json", "data"}));
    compute->add_flag("--f-basis", comp.f_basis, "Print F4 vectors in the f-basis");
    compute->add_flag("--no-index", comp.no_index, "Skip the Dirac index");
    compute->add_flag("--no-timing", comp.no_timing, "Report elapsed time as 0");
    compute->add_option("--jobs", comp.jobs, "Worker threads (0 = all cores)");
    compute->add_option("--s-max", comp.s_max, "Override the upper bound on s")->check(CLI::NonNegativeNumber);

    CaseArgs ver;
    std::string pairing;
    unsigned ver_jobs = 1;
    auto* verify = app.add_subcommand("verify", "Compare the search with closed forms or reference tables");
    add_case_args(verify, ver);
    verify->add_option("--pairing", pairing, "so_even closed form variant")
        ->check(CLI::IsMember({"mu_n_with_minus_eps", "mu_n_with_eps", "by_block_parity"}));
    verify->add_option("--jobs", ver_jobs, "Worker threads (0 = all cores)");

    CaseArgs orb;
    std::string seed = "rho";
    bool orb_f = false;
    auto* orbit = app.add_subcommand("orbit", "Dump the K-dominant representatives of a Weyl orbit");
    add_case_args(orbit, orb);
    orbit->add_option("--seed", seed, "rho_g or lambda0")->check(CLI::IsMember({"rho", "lambda"}));
    orbit->add_flag("--f-basis", orb_f, "Print F4 vectors in the f-basis");

    std::string json_path;
    auto* check = app.add_subcommand("check-json", "Re-validate a JSON document from compute");
    check->add_option("file", json_path, "Document path (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*cases) return cmd_cases(cases_json);
        if (*compute) return cmd_compute(comp);
        if (*verify) return cmd_verify(ver, pairing, ver_jobs);
        if (*orbit) return cmd_orbit(orb, seed, orb_f);
        if (*check) return cmd_check_json(json_path);
    } catch (const invalid_case& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kUsage;
}
