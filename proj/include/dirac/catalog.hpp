#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dirac/detail/linear.hpp"
#include "dirac/errors.hpp"
#include "dirac/weight.hpp"

namespace dirac {

enum class Family { so_even, so_odd, so_2n3, f4_4, e8_8, e8_m24 };

/// One real form together with its parameters, validated on construction.
struct CaseSpec {
    Family family = Family::f4_4;
    int m = 0;
    int n = 0;

    static CaseSpec so_even(int m, int n) {
        if (!(m >= n && n >= 2))
            throw invalid_case("so_even requires m>=n>=2, got m=" + std::to_string(m) + " n=" + std::to_string(n));
        return {Family::so_even, m, n};
    }
    static CaseSpec so_odd(int m, int n) {
        if (!(m >= 2 && n >= 1 && m >= n))
            throw invalid_case("so_odd requires m>=2, n>=1, m>=n, got m=" + std::to_string(m) +
                               " n=" + std::to_string(n));
        return {Family::so_odd, m, n};
    }
    static CaseSpec so_2n3(int n) {
        if (n < 2) throw invalid_case("so_2n3 requires n>=2, got n=" + std::to_string(n));
        return {Family::so_2n3, 0, n};
    }
    static CaseSpec f4_4() { return {Family::f4_4, 0, 0}; }
    static CaseSpec e8_8() { return {Family::e8_8, 0, 0}; }
    static CaseSpec e8_m24() { return {Family::e8_m24, 0, 0}; }

    /// Stable identifier, e.g. "so_even(3,2)" or "f4_4".
    std::string id() const {
        switch (family) {
        case Family::so_even: return "so_even(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Family::so_odd: return "so_odd(" + std::to_string(m) + "," + std::to_string(n) + ")";
        case Family::so_2n3: return "so_2n3(" + std::to_string(n) + ")";
        case Family::f4_4: return "f4_4";
        case Family::e8_8: return "e8_8";
        case Family::e8_m24: return "e8_m24";
        }
        return {};
    }

    /// Real form in the usual notation, e.g. "so(6,4)".
    std::string real_form() const {
        switch (family) {
        case Family::so_even: return "so(" + std::to_string(2 * m) + "," + std::to_string(2 * n) + ")";
        case Family::so_odd: return "so(" + std::to_string(2 * m + 1) + "," + std::to_string(2 * n + 1) + ")";
        case Family::so_2n3: return "so(" + std::to_string(2 * n) + ",3)";
        case Family::f4_4: return "f4(4)";
        case Family::e8_8: return "e8(8)";
        case Family::e8_m24: return "e8(-24)";
        }
        return {};
    }

    friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

inline std::string family_name(Family f) {
    switch (f) {
    case Family::so_even: return "so_even";
    case Family::so_odd: return "so_odd";
    case Family::so_2n3: return "so_2n3";
    case Family::f4_4: return "f4_4";
    case Family::e8_8: return "e8_8";
    case Family::e8_m24: return "e8_m24";
    }
    return {};
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::so_even, Family::so_odd, Family::so_2n3, Family::f4_4, Family::e8_8, Family::e8_m24}) {
        if (family_name(f) == name) return f;
    }
    throw invalid_case("unknown case '" + std::string(name) + "'");
}

/// Builds a spec from a family plus raw parameters, enforcing the constraints.
inline CaseSpec make_case(Family f, int m, int n) {
    switch (f) {
    case Family::so_even: return CaseSpec::so_even(m, n);
    case Family::so_odd: return CaseSpec::so_odd(m, n);
    case Family::so_2n3: return CaseSpec::so_2n3(n);
    case Family::f4_4: return CaseSpec::f4_4();
    case Family::e8_8: return CaseSpec::e8_8();
    case Family::e8_m24: return CaseSpec::e8_m24();
    }
    throw invalid_case("unknown family");
}

/// Root data of one real form. Roots of k live in t*, zero-extended to h*
/// when rank(K) < rank(G); t* is always the first t_dim coordinates.
struct RootDatum {
    std::size_t rank = 0;  // dim h*
    std::size_t t_dim = 0; // dim t*
    std::string type_g;    // Cartan type of g, e.g. "D4", "E8"
    std::vector<WeightVec> simple_roots_g;
    std::vector<WeightVec> pos_roots_g;
    std::vector<WeightVec> simple_roots_k;
    std::vector<WeightVec> pos_roots_k;
    std::vector<WeightVec> noncompact_pos_roots;
    WeightVec rho_g;
    WeightVec rho_k;
    int dim_a = 0;
    bool equal_rank = true;
    // Counts the root sets must reproduce, from the closed formulas of each type.
    std::size_t expected_pos_roots_g = 0;
    std::size_t expected_noncompact = 0;
};

/// K-type ladder mu0 + s*beta and a representative lambda0 of the
/// infinitesimal character of the minimal module.
struct MinimalModuleData {
    WeightVec mu0;
    WeightVec beta;
    WeightVec lambda0;
};

struct Case {
    CaseSpec spec;
    RootDatum datum;
    MinimalModuleData module;
};

namespace detail {

inline Rat half(std::int64_t k) { return Rat(k, 2); }

inline WeightVec e(std::size_t dim, std::size_t i) { return WeightVec::unit(dim, i); }

/// All roots of D_r: +-e_i +- e_j.
inline std::vector<WeightVec> roots_d(std::size_t r) {
    std::vector<WeightVec> out;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(scale(e(r, i), si) + scale(e(r, j), sj));
    return out;
}

/// All roots of B_r: those of D_r plus +-e_i.
inline std::vector<WeightVec> roots_b(std::size_t r) {
    auto out = roots_d(r);
    for (std::size_t i = 0; i < r; ++i) {
        out.push_back(e(r, i));
        out.push_back(-e(r, i));
    }
    return out;
}

/// All roots of F4 in the standard realization.
inline std::vector<WeightVec> roots_f4() {
    auto out = roots_b(4);
    for (int mask = 0; mask < 16; ++mask) {
        WeightVec v(4);
        for (int i = 0; i < 4; ++i) v[i] = half((mask >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    return out;
}

/// All roots of E8: integer roots +-e_i +- e_j and spinor roots
/// (1/2)(+-1,...,+-1) with an even number of minus signs.
inline std::vector<WeightVec> roots_e8() {
    auto out = roots_d(8);
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        WeightVec v(8);
        for (int i = 0; i < 8; ++i) v[i] = half((mask >> i) & 1 ? -1 : 1);
        out.push_back(v);
    }
    return out;
}

/// The vector x in span(simple) with <x, alpha> = 1 for every simple root.
/// It lies in the interior of the dominant chamber, so a root is positive iff
/// it pairs positively with x.
inline WeightVec regular_dominant(const std::vector<WeightVec>& simple) {
    const std::size_t k = simple.size();
    std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = inner(simple[i], simple[j]);
    auto c = solve(std::move(gram), std::vector<Rat>(k, Rat(1)));
    if (!c) throw invariant_violation("simple roots are linearly dependent");
    WeightVec x(simple.front().dim());
    for (std::size_t i = 0; i < k; ++i) x = x + scale(simple[i], (*c)[i]);
    return x;
}

inline std::vector<WeightVec> positive_part(const std::vector<WeightVec>& roots, const std::vector<WeightVec>& simple) {
    WeightVec x = regular_dominant(simple);
    std::vector<WeightVec> out;
    for (const auto& r : roots) {
        if (inner(r, x).sign() > 0) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The full root system generated by a set of simple roots (closure of the
/// simple roots under their reflections).
inline std::vector<WeightVec> root_closure(const std::vector<WeightVec>& simple) {
    std::vector<Reflection> refl;
    for (const auto& a : simple) refl.emplace_back(a);
    std::set<WeightVec> seen(simple.begin(), simple.end());
    std::vector<WeightVec> frontier(simple.begin(), simple.end());
    while (!frontier.empty()) {
        std::vector<WeightVec> next;
        for (const auto& v : frontier)
            for (const auto& s : refl) {
                WeightVec w = s.apply(v);
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline WeightVec half_sum(const std::vector<WeightVec>& roots, std::size_t dim) {
    WeightVec s(dim);
    for (const auto& r : roots) s = s + r;
    return scale(s, half(1));
}

/// Positive k-roots from simple roots; the complement inside Phi+(g) gives
/// the noncompact positive roots.
inline void finish_datum(RootDatum& d, const std::vector<WeightVec>& all_roots_g) {
    d.pos_roots_g = positive_part(all_roots_g, d.simple_roots_g);
    d.pos_roots_k = positive_part(root_closure(d.simple_roots_k), d.simple_roots_k);
    std::set<WeightVec> k(d.pos_roots_k.begin(), d.pos_roots_k.end());
    d.noncompact_pos_roots.clear();
    for (const auto& r : d.pos_roots_g)
        if (!k.count(r)) d.noncompact_pos_roots.push_back(r);
    d.dim_a = static_cast<int>(d.rank - d.t_dim);
    d.equal_rank = d.dim_a == 0;
}

inline Case build_so_even(const CaseSpec& spec) {
    const std::size_t m = spec.m, n = spec.n, r = m + n;
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = d.t_dim = r;
    d.type_g = "D" + std::to_string(r);
    for (std::size_t i = 0; i + 1 < r; ++i) d.simple_roots_g.push_back(e(r, i) - e(r, i + 1));
    d.simple_roots_g.push_back(e(r, r - 2) + e(r, r - 1));
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (i + 1 != m) d.simple_roots_k.push_back(e(r, i) - e(r, i + 1));
    d.simple_roots_k.push_back(e(r, m - 2) + e(r, m - 1));
    d.simple_roots_k.push_back(e(r, r - 2) + e(r, r - 1));
    d.rho_g = WeightVec(r);
    for (std::size_t i = 0; i < r; ++i) d.rho_g[i] = static_cast<std::int64_t>(r - 1 - i);
    d.rho_k = WeightVec(r);
    for (std::size_t i = 0; i < m; ++i) d.rho_k[i] = static_cast<std::int64_t>(m - 1 - i);
    for (std::size_t i = 0; i < n; ++i) d.rho_k[m + i] = static_cast<std::int64_t>(n - 1 - i);
    d.expected_pos_roots_g = r * (r - 1);
    d.expected_noncompact = 2 * m * n;
    finish_datum(d, roots_d(r));

    auto& mod = c.module;
    mod.mu0 = WeightVec(r);
    mod.mu0[m] = static_cast<std::int64_t>(m - n);
    mod.beta = e(r, 0) + e(r, m);
    mod.lambda0 = WeightVec(r);
    for (std::size_t i = 0; i + 2 < r; ++i) mod.lambda0[i] = static_cast<std::int64_t>(r - 2 - i);
    mod.lambda0[r - 2] = 1;
    return c;
}

inline Case build_so_odd(const CaseSpec& spec) {
    const std::size_t m = spec.m, n = spec.n, r = m + n, dim = r + 1;
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = dim;
    d.t_dim = r;
    d.type_g = "D" + std::to_string(dim);
    for (std::size_t i = 0; i < r; ++i) d.simple_roots_g.push_back(e(dim, i) - e(dim, i + 1));
    d.simple_roots_g.push_back(e(dim, r - 1) + e(dim, r));
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (i + 1 != m) d.simple_roots_k.push_back(e(dim, i) - e(dim, i + 1));
    d.simple_roots_k.push_back(e(dim, m - 1));
    d.simple_roots_k.push_back(e(dim, r - 1));
    d.rho_g = WeightVec(dim);
    for (std::size_t i = 0; i < dim; ++i) d.rho_g[i] = static_cast<std::int64_t>(r - i);
    d.rho_k = WeightVec(dim);
    for (std::size_t i = 0; i < m; ++i) d.rho_k[i] = half(2 * static_cast<std::int64_t>(m - i) - 1);
    for (std::size_t i = 0; i < n; ++i) d.rho_k[m + i] = half(2 * static_cast<std::int64_t>(n - i) - 1);
    d.expected_pos_roots_g = dim * r;
    d.expected_noncompact = 2 * m * n + 2 * r;
    finish_datum(d, roots_d(dim));

    auto& mod = c.module;
    mod.mu0 = WeightVec(dim);
    mod.mu0[m] = static_cast<std::int64_t>(m - n);
    mod.beta = e(dim, 0) + e(dim, m);
    mod.lambda0 = WeightVec(dim);
    for (std::size_t i = 0; i + 2 < dim; ++i) mod.lambda0[i] = static_cast<std::int64_t>(r - 1 - i);
    mod.lambda0[dim - 2] = 1;
    return c;
}

inline Case build_so_2n3(const CaseSpec& spec) {
    const std::size_t n = spec.n, dim = n + 1;
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = d.t_dim = dim;
    d.type_g = "B" + std::to_string(dim);
    for (std::size_t i = 0; i < n; ++i) d.simple_roots_g.push_back(e(dim, i) - e(dim, i + 1));
    d.simple_roots_g.push_back(e(dim, n));
    for (std::size_t i = 0; i + 1 < n; ++i) d.simple_roots_k.push_back(e(dim, i) - e(dim, i + 1));
    d.simple_roots_k.push_back(e(dim, n - 2) + e(dim, n - 1));
    d.simple_roots_k.push_back(e(dim, n));
    d.rho_g = WeightVec(dim);
    for (std::size_t i = 0; i < dim; ++i) d.rho_g[i] = half(2 * static_cast<std::int64_t>(n - i) + 1);
    d.rho_k = WeightVec(dim);
    for (std::size_t i = 0; i < n; ++i) d.rho_k[i] = static_cast<std::int64_t>(n - 1 - i);
    d.rho_k[n] = half(1);
    d.expected_pos_roots_g = dim * dim;
    d.expected_noncompact = 3 * n;
    finish_datum(d, roots_b(dim));

    auto& mod = c.module;
    mod.mu0 = WeightVec(dim);
    mod.mu0[n] = half(2 * static_cast<std::int64_t>(n) - 3);
    mod.beta = e(dim, 0) + e(dim, n);
    mod.lambda0 = WeightVec(dim);
    for (std::size_t i = 0; i < n; ++i) mod.lambda0[i] = half(2 * static_cast<std::int64_t>(n - i) - 1);
    mod.lambda0[n] = 1;
    return c;
}

inline Case build_f4_4(const CaseSpec& spec) {
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = d.t_dim = 4;
    d.type_g = "F4";
    const WeightVec short_simple{half(1), half(-1), half(-1), half(-1)};
    d.simple_roots_g = {short_simple, e(4, 3), e(4, 2) - e(4, 3), e(4, 1) - e(4, 2)};
    d.simple_roots_k = {short_simple, e(4, 3), e(4, 2) - e(4, 3), e(4, 0) + e(4, 1)};
    d.rho_g = {half(11), half(5), half(3), half(1)};
    d.rho_k = {2, -1, half(3), half(1)};
    d.expected_pos_roots_g = 24;
    d.expected_noncompact = 14;
    finish_datum(d, roots_f4());

    c.module.mu0 = {half(1), half(1), 0, 0};
    c.module.beta = {1, 0, 1, 0};
    c.module.lambda0 = {4, half(3), 1, half(1)};
    return c;
}

inline std::vector<WeightVec> e8_simple_g() {
    std::vector<WeightVec> s;
    for (std::size_t i = 0; i < 6; ++i) s.push_back(e(8, i + 1) - e(8, i));
    s.push_back(e(8, 0) + e(8, 1));
    s.push_back(WeightVec{half(1), half(-1), half(-1), half(-1), half(-1), half(-1), half(-1), half(1)});
    return s;
}

inline Case build_e8_8(const CaseSpec& spec) {
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = d.t_dim = 8;
    d.type_g = "E8";
    d.simple_roots_g = e8_simple_g();
    for (std::size_t i = 0; i < 7; ++i) d.simple_roots_k.push_back(e(8, i + 1) - e(8, i));
    d.simple_roots_k.push_back(e(8, 0) + e(8, 1));
    d.rho_g = {0, 1, 2, 3, 4, 5, 6, 23};
    d.rho_k = {0, 1, 2, 3, 4, 5, 6, 7};
    d.expected_pos_roots_g = 120;
    d.expected_noncompact = 64;
    finish_datum(d, roots_e8());

    c.module.mu0 = WeightVec(8);
    c.module.beta = WeightVec(std::vector<Rat>(8, half(1)));
    c.module.lambda0 = {0, 1, 1, 2, 3, 4, 5, 18};
    return c;
}

inline Case build_e8_m24(const CaseSpec& spec) {
    Case c{spec, {}, {}};
    RootDatum& d = c.datum;
    d.rank = d.t_dim = 8;
    d.type_g = "E8";
    d.simple_roots_g = e8_simple_g();
    for (std::size_t i = 0; i < 5; ++i) d.simple_roots_k.push_back(e(8, i + 1) - e(8, i));
    d.simple_roots_k.push_back(e(8, 0) + e(8, 1));
    d.simple_roots_k.push_back(e(8, 6) + e(8, 7));
    d.simple_roots_k.push_back(WeightVec{half(1), half(-1), half(-1), half(-1), half(-1), half(-1), half(-1), half(1)});
    d.rho_g = {0, 1, 2, 3, 4, 5, 6, 23};
    d.rho_k = {0, 1, 2, 3, 4, 5, -8, 9};
    d.expected_pos_roots_g = 120;
    d.expected_noncompact = 56;
    finish_datum(d, roots_e8());

    c.module.mu0 = {0, 0, 0, 0, 0, 0, 4, 4};
    c.module.beta = {0, 0, 0, 0, 0, 1, 0, 1};
    c.module.lambda0 = {0, 1, 1, 2, 3, 4, 5, 18};
    return c;
}

} // namespace detail

/// Root datum and minimal-module data for one case, roots in e-coordinates.
inline Case build(const CaseSpec& spec) {
    switch (spec.family) {
    case Family::so_even: return detail::build_so_even(CaseSpec::so_even(spec.m, spec.n));
    case Family::so_odd: return detail::build_so_odd(CaseSpec::so_odd(spec.m, spec.n));
    case Family::so_2n3: return detail::build_so_2n3(CaseSpec::so_2n3(spec.n));
    case Family::f4_4: return detail::build_f4_4(spec);
    case Family::e8_8: return detail::build_e8_8(spec);
    case Family::e8_m24: return detail::build_e8_m24(spec);
    }
    throw invalid_case("unknown family");
}

/// Checks the structural invariants of a root datum; returns one message per
/// violated invariant (empty when everything holds).
inline std::vector<std::string> validate(const RootDatum& d) {
    std::vector<std::string> bad;
    auto fail = [&](std::string msg) { bad.push_back(std::move(msg)); };

    if (detail::half_sum(d.pos_roots_g, d.rank) != d.rho_g)
        fail("rho_g " + d.rho_g.str() + " is not the half-sum of Phi+(g) (" +
             detail::half_sum(d.pos_roots_g, d.rank).str() + ")");
    if (detail::half_sum(d.pos_roots_k, d.rank) != d.rho_k)
        fail("rho_k " + d.rho_k.str() + " is not the half-sum of Phi+(k) (" +
             detail::half_sum(d.pos_roots_k, d.rank).str() + ")");

    if (d.pos_roots_g.size() != d.expected_pos_roots_g)
        fail("|Phi+(g)| = " + std::to_string(d.pos_roots_g.size()) + ", expected " +
             std::to_string(d.expected_pos_roots_g));
    if (d.noncompact_pos_roots.size() != d.expected_noncompact)
        fail("|noncompact positive roots| = " + std::to_string(d.noncompact_pos_roots.size()) + ", expected " +
             std::to_string(d.expected_noncompact));

    for (const auto& a : d.simple_roots_g)
        if (!std::binary_search(d.pos_roots_g.begin(), d.pos_roots_g.end(), a))
            fail("simple root " + a.str() + " of g is not positive");

    // Compatibility: every positive k-root is (the t-restriction of) a positive g-root.
    for (const auto& b : d.pos_roots_k) {
        bool found = false;
        for (const auto& a : d.pos_roots_g) {
            WeightVec restricted = a;
            for (std::size_t i = d.t_dim; i < d.rank; ++i) restricted[i] = 0;
            if (restricted == b) {
                found = true;
                break;
            }
        }
        if (!found) fail("positive k-root " + b.str() + " is not compatible with Phi+(g)");
        for (std::size_t i = d.t_dim; i < d.rank; ++i)
            if (!b[i].is_zero()) fail("k-root " + b.str() + " has a nonzero split coordinate");
    }

    for (const auto& a : d.simple_roots_k)
        if (!std::binary_search(d.pos_roots_k.begin(), d.pos_roots_k.end(), a))
            fail("simple root " + a.str() + " of k is not in Phi+(k)");
    for (const auto& b : d.pos_roots_k) {
        auto c = detail::coefficients(b, d.simple_roots_k);
        bool ok = c.has_value();
        if (ok)
            for (const auto& x : *c) ok = ok && x.is_integer() && x.sign() >= 0;
        if (!ok) fail("positive k-root " + b.str() + " is not a non-negative integer combination of Pi(k)");
    }

    if (d.dim_a != static_cast<int>(d.rank - d.t_dim))
        fail("dim a = " + std::to_string(d.dim_a) + " disagrees with rank(g) - rank(k)");
    if (d.equal_rank != (d.dim_a == 0)) fail("equal_rank flag disagrees with dim a");
    return bad;
}

/// Datum checks plus those tying the module data to it.
inline std::vector<std::string> validate(const Case& c) {
    auto bad = validate(c.datum);
    const auto& d = c.datum;
    auto k_dominant = [&](const WeightVec& v) {
        for (const auto& a : d.simple_roots_k)
            if (inner(v, a).sign() < 0) return false;
        return true;
    };
    if (!k_dominant(c.module.mu0)) bad.push_back("mu0 " + c.module.mu0.str() + " is not K-dominant");
    if (c.module.beta.is_zero() || !k_dominant(c.module.beta))
        bad.push_back("beta " + c.module.beta.str() + " is zero or not K-dominant");
    bool beta_is_p_weight = false;
    for (const auto& a : d.noncompact_pos_roots) {
        WeightVec restricted = a;
        for (std::size_t i = d.t_dim; i < d.rank; ++i) restricted[i] = 0;
        if (a == c.module.beta || restricted == c.module.beta) beta_is_p_weight = true;
    }
    if (!beta_is_p_weight) bad.push_back("beta " + c.module.beta.str() + " is not a weight of p");
    if (c.module.lambda0.dim() != d.rank || c.module.mu0.dim() != d.rank)
        bad.push_back("module data has the wrong dimension");
    return bad;
}

/// F4 presentation basis f1=(1/2,1/2,0,0), f2=(1/2,-1/2,0,0),
/// f3=(0,0,1/2,1/2), f4=(0,0,1/2,-1/2).
inline WeightVec f_to_e(const WeightVec& f) {
    if (f.dim() != 4) throw dimension_mismatch(f.dim(), 4);
    auto h = detail::half(1);
    return {(f[0] + f[1]) * h, (f[0] - f[1]) * h, (f[2] + f[3]) * h, (f[2] - f[3]) * h};
}

inline WeightVec e_to_f(const WeightVec& v) {
    if (v.dim() != 4) throw dimension_mismatch(v.dim(), 4);
    return {v[0] + v[1], v[0] - v[1], v[2] + v[3], v[2] - v[3]};
}

/// One row of the machine-readable case registry.
struct RegistryEntry {
    std::string name;
    std::string real_form;
    std::vector<std::string> params;
    std::string constraints;
    std::string rank; // dim h* as a function of the parameters
    int dim_a = 0;
    bool equal_rank = true;
};

inline const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = {
        {"so_even", "so(2m,2n)", {"m", "n"}, "m≥n≥2", "m+n", 0, true},
        {"so_odd", "so(2m+1,2n+1)", {"m", "n"}, "m≥2, n≥1, m≥n", "m+n+1", 1, false},
        {"so_2n3", "so(2n,3)", {"n"}, "n≥2", "n+1", 0, true},
        {"f4_4", "f4(4)", {}, "", "4", 0, true},
        {"e8_8", "e8(8)", {}, "", "8", 0, true},
        {"e8_m24", "e8(-24)", {}, "", "8", 0, true},
    };
    return entries;
}

} // namespace dirac
