// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// detail. Exits 0 once every criterion has been evaluated, so a reported FAIL
// does not break the build; pass --strict to exit 1 on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/oracles.hpp"
#include "dirac/reference.hpp"
#include "dirac/search.hpp"
#include "dirac/weyl.hpp"

using namespace dirac;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
    Criterion(std::string i, std::string t) : id(std::move(i)), title(std::move(t)) {}

    std::string id;
    std::string title;
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
        pass = pass && ok;
    }
    void note(const std::string& what) { details.push_back("      " + what); }
};

std::string timing(double s, double limit) {
    std::ostringstream os;
    os.precision(3);
    os << "runtime " << s << " s (limit " << limit << " s)";
    return os.str();
}

std::string diff_summary(const TripleDiff& d) {
    std::ostringstream os;
    os << d.missing.size() << " missing, " << d.unexpected.size() << " unexpected, " << d.length_mismatch.size()
       << " length mismatches";
    return os.str();
}

void list_length_mismatches(Criterion& c, const TripleDiff& d) {
    for (const auto& [exp, got] : d.length_mismatch)
        c.note("s=" + std::to_string(exp.s) + " rho=" + exp.rho.str() + ": reference length " +
               std::to_string(*exp.length) + ", computed " + std::to_string(*got.length));
}

std::vector<DiracTriple> without_lengths(std::vector<DiracTriple> v) {
    for (auto& t : v) t.length.reset();
    return v;
}

Criterion c1_f4() {
    Criterion c{"C1", "f4(4) triples, lengths, H_D and DI exact"};
    auto t0 = Clock::now();
    Case f4 = build(CaseSpec::f4_4());
    SearchReport r = run_search(f4);
    double t = seconds_since(t0);
    auto ref = oracle_f4();
    c.check(r.triples.size() == 8, std::to_string(r.triples.size()) + " triples (expected 8)");
    c.check(compare_triples(without_lengths(ref), r.triples).empty(), "(s, rho, lambda) set equals the reference table");
    TripleDiff d = compare_triples(ref, r.triples);
    c.check(d.empty(), "lengths equal the reference table: " + diff_summary(d));
    list_length_mismatches(c, d);
    c.check(r.hd == oracle_f4_cohomology(), "H_D equals the closed form term for term");
    c.check(r.di && *r.di == oracle_f4_index(), "DI equals the closed form term for term");
    c.check(t < 1.0, timing(t, 1.0));
    return c;
}

Criterion c2_e8_m24() {
    Criterion c{"C2", "e8(-24) 56 rows exact, single-threaded"};
    auto t0 = Clock::now();
    Case e8 = build(CaseSpec::e8_m24());
    SearchReport r = run_search(e8, {1, {}});
    double t = seconds_since(t0);
    auto ref = oracle_e8_m24();
    c.check(r.s_bound <= 32, "s bound " + std::to_string(r.s_bound) + " <= 32");
    c.check(r.triples.size() == 56, std::to_string(r.triples.size()) + " triples (expected 56)");
    c.check(compare_triples(without_lengths(ref), r.triples).empty(),
            "(s, rho, lambda) set equals the reference table (" + std::to_string(e8_m24_errata().size()) +
                " coordinate corrections applied)");
    TripleDiff d = compare_triples(ref, r.triples);
    c.check(d.empty(), "lengths equal the reference table: " + diff_summary(d));
    list_length_mismatches(c, d);
    c.check(t < 300.0, timing(t, 300.0));
    return c;
}

Criterion c3_e8_8() {
    Criterion c{"C3", "e8(8) structure"};
    auto t0 = Clock::now();
    Case e8 = build(CaseSpec::e8_8());
    SearchReport r = run_search(e8, {1, {}});
    double t = seconds_since(t0);
    const auto& s = r.structure;
    c.check(r.di && r.di->is_zero(), "DI = 0");
    c.check(s.pairing_ok, "every lambda in 0 or 2 triples (" + std::to_string(s.per_lambda.size()) + " of " +
                              std::to_string(r.lambda_count) + " lambda occur)");
    c.check(s.sigma_constant && s.sigma.has_value(),
            "constant sigma = " + (s.sigma ? std::to_string(*s.sigma) : std::string("undefined")));
    c.check(s.sigma_odd.value_or(false), "sigma odd");
    c.check(!is_g_regular(e8.module.lambda0, e8.datum), "lambda0 singular");
    TripleDiff d = compare_triples(e8_8_fixture(), r.triples);
    c.check(d.empty(), "matches the frozen fixture (" + std::to_string(r.triples.size()) + " triples): " +
                           diff_summary(d));
    c.check(t < 300.0, timing(t, 300.0));
    return c;
}

Criterion c4_orthogonal() {
    Criterion c{"C4", "orthogonal families equal their closed forms"};
    auto t0 = Clock::now();
    int so_even_cases = 0, so_even_ok = 0, so_odd_cases = 0, so_odd_ok = 0;
    std::vector<std::string> so_even_bad;
    bool hd_ok = true, di_ok = true;
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n) {
            if (n >= 2) {
                Case k = build(CaseSpec::so_even(m, n));
                SearchReport r = run_search(k);
                ++so_even_cases;
                if (compare_triples(oracle_so_even(m, n, SoEvenPairing::mu_n_with_minus_eps), r.triples).empty())
                    ++so_even_ok;
                else
                    so_even_bad.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
                hd_ok = hd_ok && r.hd == oracle_so_even_cohomology(m, n);
                di_ok = di_ok && r.di && r.di->is_zero();
            }
            Case k = build(CaseSpec::so_odd(m, n));
            ++so_odd_cases;
            if (compare_triples(oracle_so_odd(m, n), run_search(k).triples).empty()) ++so_odd_ok;
        }
    std::string bad;
    for (const auto& b : so_even_bad) bad += (bad.empty() ? "" : " ") + b;
    c.check(so_even_ok == so_even_cases, "so_even: " + std::to_string(so_even_ok) + "/" +
                                             std::to_string(so_even_cases) + " equal the closed form" +
                                             (bad.empty() ? "" : "; differs at (m,n) = " + bad));
    if (!bad.empty()) {
        int parity_ok = 0;
        for (int m = 2; m <= 6; ++m)
            for (int n = 2; n <= m && m + n <= 8; ++n)
                parity_ok += compare_triples(oracle_so_even(m, n, SoEvenPairing::by_block_parity),
                                             run_search(build(CaseSpec::so_even(m, n))).triples)
                                 .empty();
        c.note("pairing by block parity matches " + std::to_string(parity_ok) + "/" + std::to_string(so_even_cases));
    }
    c.check(hd_ok, "so_even: H_D has coefficient 2 at every lambda_P^eps");
    c.check(di_ok, "so_even: DI = 0");
    c.check(so_odd_ok == so_odd_cases, "so_odd: " + std::to_string(so_odd_ok) + "/" + std::to_string(so_odd_cases) +
                                           " equal the closed form");

    int so_2n3_ok = 0;
    std::string di_bad;
    for (int n = 2; n <= 6; ++n) {
        SearchReport r = run_search(build(CaseSpec::so_2n3(n)));
        so_2n3_ok += compare_triples(oracle_so_2n3(n), r.triples).empty();
        if (!(r.di && *r.di == oracle_so_2n3_index(n))) di_bad += (di_bad.empty() ? "" : ",") + std::to_string(n);
    }
    c.check(so_2n3_ok == 5, "so_2n3: " + std::to_string(so_2n3_ok) + "/5 equal the closed form, lengths included");
    c.check(di_bad.empty(), "so_2n3: DI sign pattern by parity of n" +
                                (di_bad.empty() ? std::string() : "; differs at n = " + di_bad));
    double t = seconds_since(t0);
    c.check(t < 30.0, timing(t, 30.0));
    return c;
}

Criterion c5_equivalences() {
    Criterion c{"C5", "DI = 0, sigma odd, all lambda singular are equivalent; verdicts"};
    std::vector<CaseSpec> specs;
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= m && m + n <= 8; ++n) specs.push_back(CaseSpec::so_even(m, n));
    for (int n = 2; n <= 6; ++n) specs.push_back(CaseSpec::so_2n3(n));
    for (const auto& s : {CaseSpec::f4_4(), CaseSpec::e8_8(), CaseSpec::e8_m24()}) specs.push_back(s);
    int equiv = 0, verdicts = 0;
    std::vector<std::string> bad;
    for (const auto& s : specs) {
        SearchReport r = run_search(build(s));
        bool e = r.structure.equivalent.value_or(false);
        bool v = computed_verdicts(r) == expected_verdicts(s.family);
        equiv += e;
        verdicts += v;
        if (!e || !v) bad.push_back(s.id());
    }
    std::string n = std::to_string(specs.size());
    c.check(equiv == static_cast<int>(specs.size()), "equivalence holds in " + std::to_string(equiv) + "/" + n + " cases");
    c.check(verdicts == static_cast<int>(specs.size()), "verdicts match in " + std::to_string(verdicts) + "/" + n + " cases");
    for (const auto& b : bad) c.note("fails: " + b);
    return c;
}

std::vector<WeightVec> brute_force_k_dominant(const WeightVec& seed, const RootDatum& d) {
    std::set<WeightVec> seen{seed};
    std::vector<WeightVec> todo{seed};
    while (!todo.empty()) {
        WeightVec v = todo.back();
        todo.pop_back();
        for (const auto& a : d.simple_roots_g) {
            WeightVec w = reflect(v, a);
            if (seen.insert(w).second) todo.push_back(w);
        }
    }
    std::vector<WeightVec> out;
    for (const auto& v : seen)
        if (is_k_dominant(v, d)) out.push_back(v);
    return out;
}

WeightVec d8_closed_form(const WeightVec& v) {
    std::vector<Rat> a(v.begin(), v.end());
    int negatives = 0;
    for (auto& x : a)
        if (x.sign() < 0) {
            x = -x;
            ++negatives;
        }
    std::sort(a.begin(), a.end());
    if (negatives % 2) a[0] = -a[0];
    return WeightVec(a);
}

Criterion c6_weyl() {
    Criterion c{"C6", "Weyl engine against brute force and closed forms"};
    for (const auto& s : {CaseSpec::so_even(2, 2), CaseSpec::so_odd(2, 1), CaseSpec::so_2n3(2)}) {
        Case k = build(s);
        bool ok = orbit_k_dominant(k.datum.rho_g, k.datum).elements == brute_force_k_dominant(k.datum.rho_g, k.datum) &&
                  orbit_k_dominant(k.module.lambda0, k.datum).elements ==
                      brute_force_k_dominant(k.module.lambda0, k.datum);
        c.check(ok, s.id() + ": orbit equals the filtered full W(g)-orbit");
    }
    RootDatum e8 = build(CaseSpec::e8_8()).datum;
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> odd(-20, 20);
    int agree = 0;
    for (int i = 0; i < 1000; ++i) {
        WeightVec v(8);
        for (std::size_t j = 0; j < 8; ++j) v[j] = Rat(2 * odd(rng) + 1, 2);
        agree += normalize_k_dominant(v, e8) == d8_closed_form(v);
    }
    c.check(agree == 1000, "e8(8) normalizer: " + std::to_string(agree) + "/1000 random half-integer vectors agree");
    int zero = 0, total = 0;
    std::vector<CaseSpec> all = {CaseSpec::f4_4(), CaseSpec::e8_8(), CaseSpec::e8_m24()};
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n) {
            if (n >= 2) all.push_back(CaseSpec::so_even(m, n));
            all.push_back(CaseSpec::so_odd(m, n));
        }
    for (int n = 2; n <= 6; ++n) all.push_back(CaseSpec::so_2n3(n));
    for (const auto& s : all) {
        RootDatum d = build(s).datum;
        ++total;
        zero += weyl_length(d.rho_g, d) == 0;
    }
    c.check(zero == total, "weyl_length(rho_g) = 0 in " + std::to_string(zero) + "/" + std::to_string(total) + " cases");
    return c;
}

Criterion c7_validation() {
    Criterion c{"C7", "catalog validation"};
    std::vector<CaseSpec> all = {CaseSpec::f4_4(), CaseSpec::e8_8(), CaseSpec::e8_m24()};
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n) {
            if (n >= 2) all.push_back(CaseSpec::so_even(m, n));
            all.push_back(CaseSpec::so_odd(m, n));
        }
    for (int n = 2; n <= 6; ++n) all.push_back(CaseSpec::so_2n3(n));
    int clean = 0;
    for (const auto& s : all) {
        auto bad = validate(build(s));
        clean += bad.empty();
        for (const auto& b : bad) c.note(s.id() + ": " + b);
    }
    c.check(clean == static_cast<int>(all.size()),
            "validate() clean for " + std::to_string(clean) + "/" + std::to_string(all.size()) + " cases");
    auto f4 = build(CaseSpec::f4_4()).datum;
    auto e8 = build(CaseSpec::e8_8()).datum;
    auto e8m = build(CaseSpec::e8_m24()).datum;
    c.check(f4.pos_roots_g.size() == 24, "f4: " + std::to_string(f4.pos_roots_g.size()) + " positive roots");
    c.check(e8.pos_roots_g.size() == 120, "e8: " + std::to_string(e8.pos_roots_g.size()) + " positive roots");
    c.check(e8.noncompact_pos_roots.size() == 64,
            "e8(8): " + std::to_string(e8.noncompact_pos_roots.size()) + " noncompact positive roots");
    c.check(e8m.noncompact_pos_roots.size() == 56,
            "e8(-24): " + std::to_string(e8m.noncompact_pos_roots.size()) + " noncompact positive roots");
    return c;
}

} // namespace

int main(int argc, char** argv) {
    bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    std::vector<Criterion> results;
    try {
        results.push_back(c1_f4());
        results.push_back(c2_e8_m24());
        results.push_back(c3_e8_8());
        results.push_back(c4_orthogonal());
        results.push_back(c5_equivalences());
        results.push_back(c6_weyl());
        results.push_back(c7_validation());
    } catch (const std::exception& e) {
        std::cerr << "acceptance aborted: " << e.what() << "\n";
        return 2;
    }
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.title << "\n";
        for (const auto& d : r.details) std::cout << "    " << d << "\n";
        failed += !r.pass;
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria pass\n";
    return strict && failed ? 1 : 0;
}
