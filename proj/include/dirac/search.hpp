#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/errors.hpp"
#include "dirac/weight.hpp"
#include "dirac/weyl.hpp"

namespace dirac {

struct DiracTriple {
    int s = 0;
    WeightVec mu_s;
    WeightVec rho;
    WeightVec lam;
    std::optional<int> length; // present iff equal rank

    friend bool operator==(const DiracTriple&, const DiracTriple&) = default;
};

/// Canonical order: (lambda, s, rho) lexicographic.
inline bool canonical_less(const DiracTriple& a, const DiracTriple& b) {
    if (auto c = a.lam <=> b.lam; c != 0) return c < 0;
    if (a.s != b.s) return a.s < b.s;
    return a.rho < b.rho;
}

/// Integer combination of K~-types, keyed by highest weight.
class KTypeSum {
public:
    void add(const WeightVec& highest, std::int64_t coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace(highest, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<WeightVec, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const WeightVec& highest) const {
        auto it = terms_.find(highest);
        return it == terms_.end() ? 0 : it->second;
    }
    friend bool operator==(const KTypeSum&, const KTypeSum&) = default;

private:
    std::map<WeightVec, std::int64_t> terms_;
};

struct SearchOptions {
    unsigned jobs = 1;               // 0 = hardware concurrency
    std::optional<int> s_max;        // overrides s_upper_bound when set
};

/// Smallest integer s with s·|beta| >= |rho_g| + |lambda0|, decided on
/// squared quantities only.
inline int s_upper_bound(const RootDatum& d, const MinimalModuleData& mod) {
    const Rat b = norm2(mod.beta);
    if (b.is_zero()) throw std::invalid_argument("beta is zero");
    const Rat p = norm2(d.rho_g);
    const Rat l = norm2(mod.lambda0);
    const Rat four_pl = Rat(4) * p * l;
    for (std::int64_t s = 0;; ++s) {
        Rat x = Rat(s * s) * b - p - l;
        if (x.sign() >= 0 && x * x >= four_pl) return static_cast<int>(s);
    }
}

namespace detail {

inline bool split_coordinates_zero(const WeightVec& v, const RootDatum& d) {
    for (std::size_t i = d.t_dim; i < d.rank; ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

inline void require_equal_norms(const OrbitSet& o) {
    if (o.elements.empty()) return;
    Rat n = norm2(o.seed);
    for (const auto& v : o.elements)
        if (norm2(v) != n)
            throw invariant_violation("orbit element " + v.str() + " has norm " + norm2(v).str() + ", seed has " +
                                      n.str());
}

} // namespace detail

/// Lambda_K(V) restricted to lambda with lambda - rho_k K-dominant (and, for
/// unequal rank, vanishing split coordinates).
inline OrbitSet lambda_candidates(const RootDatum& d, const MinimalModuleData& mod) {
    OrbitSet o = orbit_k_dominant(mod.lambda0, d);
    detail::require_equal_norms(o);
    std::erase_if(o.elements, [&](const WeightVec& lam) {
        return !is_k_dominant(lam - d.rho_k, d) || !detail::split_coordinates_zero(lam, d);
    });
    return o;
}

/// R_K(g), restricted to vanishing split coordinates for unequal rank.
inline OrbitSet rho_candidates(const RootDatum& d) {
    OrbitSet o = orbit_k_dominant(d.rho_g, d);
    detail::require_equal_norms(o);
    std::erase_if(o.elements, [&](const WeightVec& r) { return !detail::split_coordinates_zero(r, d); });
    return o;
}

/// Every (s, rho, lambda) with 0 <= s <= bound and
/// {mu0 + s·beta - rho + rho_k} = lambda - rho_k, canonically ordered.
inline std::vector<DiracTriple> find_triples(const RootDatum& d, const MinimalModuleData& mod,
                                             const OrbitSet& rhos, const OrbitSet& lambdas, int s_max,
                                             unsigned jobs = 1) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::unordered_set<WeightVec, WeightVecHash> lambda_set(lambdas.elements.begin(), lambdas.elements.end());
    const Normalizer norm(d);
    const std::size_t nr = rhos.size();
    const std::size_t total = static_cast<std::size_t>(s_max + 1) * nr;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));

    std::vector<std::vector<DiracTriple>> found(jobs);
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < total; i += jobs) {
            const int s = static_cast<int>(i / nr);
            const WeightVec& rho = rhos.elements[i % nr];
            WeightVec mu = mod.mu0 + scale(mod.beta, s);
            WeightVec lam = norm(mu - rho + d.rho_k) + d.rho_k;
            if (!lambda_set.count(lam)) continue;
            std::optional<int> len;
            if (d.equal_rank) len = weyl_length(rho, d);
            found[w].push_back({s, std::move(mu), rho, std::move(lam), len});
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }

    std::vector<DiracTriple> out;
    for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline std::vector<DiracTriple> find_triples(const RootDatum& d, const MinimalModuleData& mod, unsigned jobs = 1) {
    return find_triples(d, mod, rho_candidates(d), lambda_candidates(d, mod), s_upper_bound(d, mod), jobs);
}

/// 2^ceil(dim a / 2)
inline std::int64_t spin_multiplicity(const RootDatum& d) { return std::int64_t{1} << ((d.dim_a + 1) / 2); }

inline KTypeSum dirac_cohomology(const std::vector<DiracTriple>& triples, const RootDatum& d) {
    KTypeSum hd;
    for (const auto& t : triples) hd.add(t.lam - d.rho_k, spin_multiplicity(d));
    return hd;
}

inline KTypeSum dirac_index(const std::vector<DiracTriple>& triples, const RootDatum& d) {
    if (!d.equal_rank) throw index_undefined();
    KTypeSum di;
    for (const auto& t : triples) {
        int len = t.length ? *t.length : weyl_length(t.rho, d);
        di.add(t.lam - d.rho_k, len % 2 == 0 ? spin_multiplicity(d) : -spin_multiplicity(d));
    }
    return di;
}

struct LambdaEntry {
    int s = 0;
    WeightVec rho;
    std::optional<int> length;
};

/// Pairing and sigma structure of the triples, and the three statements
/// (DI = 0, sigma odd, every lambda singular) whose equivalence is expected.
struct StructureReport {
    std::map<WeightVec, std::vector<LambdaEntry>> per_lambda;
    bool pairing_ok = true;     // every lambda carries 0 or 2 triples
    std::optional<int> sigma;   // s1 + s2, when paired and constant
    bool sigma_constant = true;
    std::optional<bool> di_zero;   // empty for unequal rank
    std::optional<bool> sigma_odd; // empty when sigma is undefined
    bool all_lambda_singular = false;
    std::optional<bool> equivalent; // empty unless all three statements are defined
    std::vector<std::string> issues;
};

inline StructureReport structure_report(const std::vector<DiracTriple>& triples, const RootDatum& d,
                                        const WeightVec& lambda0) {
    StructureReport r;
    for (const auto& t : triples) r.per_lambda[t.lam].push_back({t.s, t.rho, t.length});

    for (const auto& [lam, entries] : r.per_lambda) {
        if (entries.size() != 2) {
            r.pairing_ok = false;
            r.issues.push_back("lambda " + lam.str() + " occurs in " + std::to_string(entries.size()) + " triples");
            continue;
        }
        int sum = entries[0].s + entries[1].s;
        if (r.sigma && *r.sigma != sum) {
            r.sigma_constant = false;
            r.issues.push_back("s1+s2 = " + std::to_string(sum) + " at lambda " + lam.str() + " differs from " +
                               std::to_string(*r.sigma));
        }
        if (!r.sigma) r.sigma = sum;
    }
    if (!r.pairing_ok || !r.sigma_constant) r.sigma.reset();
    if (r.sigma) r.sigma_odd = *r.sigma % 2 != 0;

    if (d.equal_rank) r.di_zero = dirac_index(triples, d).is_zero();

    // Regularity is W(g)-invariant, so lambda0 decides it for all of Lambda_K(V).
    r.all_lambda_singular = !is_g_regular(lambda0, d);
    for (const auto& [lam, entries] : r.per_lambda) {
        if (is_g_regular(lam, d) == r.all_lambda_singular)
            r.issues.push_back("lambda " + lam.str() + " disagrees with lambda0 on regularity");
    }

    if (r.di_zero && r.sigma_odd)
        r.equivalent = *r.di_zero == *r.sigma_odd && *r.sigma_odd == r.all_lambda_singular;
    return r;
}

/// Everything computed for one case.
struct SearchReport {
    std::vector<DiracTriple> triples;
    KTypeSum hd;
    std::optional<KTypeSum> di;
    StructureReport structure;
    int s_bound = 0;
    std::size_t rho_count = 0;
    std::size_t lambda_count = 0;
    int rho_generations = 0;
    int lambda_generations = 0;
    std::int64_t hd_coefficient_per_triple = 1;
};

inline SearchReport run_search(const Case& c, const SearchOptions& opt = {}) {
    const auto& d = c.datum;
    SearchReport rep;
    OrbitSet rhos = rho_candidates(d);
    OrbitSet lambdas = lambda_candidates(d, c.module);
    rep.rho_count = rhos.size();
    rep.lambda_count = lambdas.size();
    rep.rho_generations = rhos.generations;
    rep.lambda_generations = lambdas.generations;
    rep.s_bound = opt.s_max ? *opt.s_max : s_upper_bound(d, c.module);
    rep.triples = find_triples(d, c.module, rhos, lambdas, rep.s_bound, opt.jobs);
    rep.hd = dirac_cohomology(rep.triples, d);
    if (d.equal_rank) rep.di = dirac_index(rep.triples, d);
    rep.structure = structure_report(rep.triples, d, c.module.lambda0);
    rep.hd_coefficient_per_triple = spin_multiplicity(d);
    return rep;
}

} // namespace dirac
