#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/errors.hpp"
#include "dirac/search.hpp"
#include "dirac/weight.hpp"

namespace dirac {

// ---------------------------------------------------------------------------
// Plain-text triple tables: one triple per line, "s; rho; lambda; length".
// '#' starts a comment line; an optional "basis: f" line switches the vector
// columns to the F4 f-basis. The length column may be "-" (undefined).

struct TableRow {
    int s = 0;
    WeightVec rho;
    WeightVec lam;
    std::optional<int> length;
};

struct Table {
    bool f_basis = false;
    std::vector<TableRow> rows;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) return out;
        s.remove_prefix(p + 1);
    }
}

inline int parse_int(std::string_view s, std::size_t line) {
    Rat r = Rat::parse(s);
    if (!r.is_integer() || !r.is_small())
        throw parse_error("line " + std::to_string(line) + ": expected an integer, got '" + std::string(s) + "'");
    return static_cast<int>(r.numerator());
}

template <class F>
void for_each_data_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        ++lineno;
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (line.empty() || line.front() == '#') continue;
        f(line, lineno);
    }
}

} // namespace detail

inline Table parse_table(std::string_view text) {
    Table t;
    detail::for_each_data_line(text, [&](std::string_view line, std::size_t no) {
        if (line.starts_with("basis:")) {
            auto b = detail::trim(line.substr(6));
            if (b == "f") t.f_basis = true;
            else if (b == "e") t.f_basis = false;
            else throw parse_error("line " + std::to_string(no) + ": unknown basis '" + std::string(b) + "'");
            return;
        }
        auto cols = detail::split(line, ';');
        if (cols.size() != 4)
            throw parse_error("line " + std::to_string(no) + ": expected 4 ';'-separated columns, got " +
                              std::to_string(cols.size()));
        TableRow r;
        r.s = detail::parse_int(cols[0], no);
        r.rho = WeightVec::parse(cols[1]);
        r.lam = WeightVec::parse(cols[2]);
        if (cols[3] != "-") r.length = detail::parse_int(cols[3], no);
        t.rows.push_back(std::move(r));
    });
    return t;
}

inline std::string format_table(const Table& t) {
    std::ostringstream os;
    if (t.f_basis) os << "basis: f\n";
    for (const auto& r : t.rows) {
        os << r.s << "; " << r.rho.str() << "; " << r.lam.str() << "; ";
        if (r.length) os << *r.length;
        else os << '-';
        os << '\n';
    }
    return os.str();
}

/// One coordinate correction to a transcribed table.
struct Erratum {
    std::size_t row = 0;   // 1-based data row
    bool rho = true;       // false: lambda column
    std::size_t coord = 0; // 1-based
    Rat value;
};

inline std::vector<Erratum> parse_errata(std::string_view text) {
    std::vector<Erratum> out;
    detail::for_each_data_line(text, [&](std::string_view line, std::size_t no) {
        auto cols = detail::split(line, ';');
        if (cols.size() != 4)
            throw parse_error("line " + std::to_string(no) + ": expected 'row; field; coordinate; value'");
        Erratum e;
        e.row = static_cast<std::size_t>(detail::parse_int(cols[0], no));
        if (cols[1] == "rho") e.rho = true;
        else if (cols[1] == "lambda") e.rho = false;
        else throw parse_error("line " + std::to_string(no) + ": field must be rho or lambda");
        e.coord = static_cast<std::size_t>(detail::parse_int(cols[2], no));
        e.value = Rat::parse(cols[3]);
        out.push_back(std::move(e));
    });
    return out;
}

inline Table apply_errata(Table t, const std::vector<Erratum>& errata) {
    for (const auto& e : errata) {
        if (e.row == 0 || e.row > t.rows.size()) throw parse_error("erratum row " + std::to_string(e.row) + " out of range");
        WeightVec& v = e.rho ? t.rows[e.row - 1].rho : t.rows[e.row - 1].lam;
        if (e.coord == 0 || e.coord > v.dim())
            throw parse_error("erratum coordinate " + std::to_string(e.coord) + " out of range");
        v[e.coord - 1] = e.value;
    }
    return t;
}

/// Table rows as triples of the given case, in e-coordinates and canonical order.
inline std::vector<DiracTriple> table_triples(const Table& t, const Case& c) {
    std::vector<DiracTriple> out;
    for (const auto& r : t.rows) {
        WeightVec rho = t.f_basis ? f_to_e(r.rho) : r.rho;
        WeightVec lam = t.f_basis ? f_to_e(r.lam) : r.lam;
        if (rho.dim() != c.datum.rank) throw dimension_mismatch(rho.dim(), c.datum.rank);
        if (lam.dim() != c.datum.rank) throw dimension_mismatch(lam.dim(), c.datum.rank);
        out.push_back({r.s, c.module.mu0 + scale(c.module.beta, r.s), std::move(rho), std::move(lam), r.length});
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline Table triples_table(const std::vector<DiracTriple>& triples, bool f_basis) {
    Table t;
    t.f_basis = f_basis;
    for (const auto& x : triples)
        t.rows.push_back({x.s, f_basis ? e_to_f(x.rho) : x.rho, f_basis ? e_to_f(x.lam) : x.lam, x.length});
    return t;
}

// ---------------------------------------------------------------------------
// Comparison

struct TripleDiff {
    std::vector<DiracTriple> missing;    // expected, not found
    std::vector<DiracTriple> unexpected; // found, not expected
    std::vector<std::pair<DiracTriple, DiracTriple>> length_mismatch; // (expected, found)

    bool empty() const { return missing.empty() && unexpected.empty() && length_mismatch.empty(); }
};

/// Set comparison on (s, rho, lambda); lengths are compared only where the
/// expected triple carries one.
inline TripleDiff compare_triples(std::vector<DiracTriple> expected, std::vector<DiracTriple> found) {
    std::sort(expected.begin(), expected.end(), canonical_less);
    std::sort(found.begin(), found.end(), canonical_less);
    TripleDiff d;
    std::size_t i = 0, j = 0;
    while (i < expected.size() || j < found.size()) {
        if (j == found.size() || (i < expected.size() && canonical_less(expected[i], found[j]))) {
            d.missing.push_back(expected[i++]);
        } else if (i == expected.size() || canonical_less(found[j], expected[i])) {
            d.unexpected.push_back(found[j++]);
        } else {
            if (expected[i].length && expected[i].length != found[j].length)
                d.length_mismatch.emplace_back(expected[i], found[j]);
            ++i;
            ++j;
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Closed forms for the orthogonal families

namespace detail {

/// Subsets of `items` of the given size, each returned in the order of `items`.
inline std::vector<std::vector<int>> subsets(const std::vector<int>& items, std::size_t k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < items.size(); ++i) {
            cur.push_back(items[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<int> complement(const std::vector<int>& items, const std::vector<int>& p) {
    std::vector<int> out;
    for (int x : items)
        if (std::find(p.begin(), p.end(), x) == p.end()) out.push_back(x);
    return out;
}

inline std::vector<int> descending(int hi, int lo) {
    std::vector<int> v;
    for (int x = hi; x >= lo; --x) v.push_back(x);
    return v;
}

inline std::vector<DiracTriple> finish(std::vector<DiracTriple> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
}

} // namespace detail

/// A subset P of N with its complement, both descending.
struct Partition {
    std::vector<int> a; // P
    std::vector<int> b; // N - P
    bool contains_zero() const { return !a.empty() && a.back() == 0; }
};

/// All P subset of {hi,...,lo} with |P| = size.
inline std::vector<Partition> partitions(int hi, int lo, std::size_t size) {
    auto n = detail::descending(hi, lo);
    std::vector<Partition> out;
    for (auto& p : detail::subsets(n, size)) out.push_back({p, detail::complement(n, p)});
    return out;
}

/// so(2m,2n): lambda_P^eps.
inline WeightVec so_even_lambda(int m, int n, const Partition& P, int eps) {
    WeightVec v(static_cast<std::size_t>(m + n));
    for (int i = 0; i < m - 1; ++i) v[i] = P.a[i] + 1;
    for (int i = 0; i < n - 1; ++i) v[m + i] = P.b[i] + 1;
    if (P.contains_zero()) {
        v[m - 1] = 0;
        v[m + n - 1] = eps;
    } else {
        v[m - 1] = eps;
        v[m + n - 1] = 0;
    }
    return v;
}

/// so(2m,2n): rho_P^{eps,sigma}.
inline WeightVec so_even_rho(int m, int n, const Partition& P, int eps, int sigma) {
    const int r = m + n;
    WeightVec v(static_cast<std::size_t>(r));
    v[0] = Rat(2 * r - 3 + sigma, 2);
    v[m] = Rat(2 * r - 3 - sigma, 2);
    for (int i = 0; i < m - 1; ++i) v[1 + i] = P.a[i];
    for (int i = 0; i < n - 1; ++i) v[m + 1 + i] = P.b[i];
    if (P.contains_zero()) v[r - 1] = v[r - 1] * eps;
    else v[m - 1] = v[m - 1] * eps;
    return v;
}

/// Which K-type of the pair mu_n, mu_{n-1} goes with rho_P^{-eps,.}.
enum class SoEvenPairing {
    mu_n_with_minus_eps, // (mu_n, rho^{-eps,+/-}), (mu_{n-1}, rho^{eps,-/+})
    mu_n_with_eps,       // (mu_n, rho^{eps,+/-}), (mu_{n-1}, rho^{-eps,-/+})
    by_block_parity,     // mu_n_with_minus_eps when the block holding eps has even size, else flipped
};

inline std::string pairing_name(SoEvenPairing p) {
    switch (p) {
    case SoEvenPairing::mu_n_with_minus_eps: return "mu_n_with_minus_eps";
    case SoEvenPairing::mu_n_with_eps: return "mu_n_with_eps";
    case SoEvenPairing::by_block_parity: return "by_block_parity";
    }
    return {};
}

/// Closed-form triple set for so(2m,2n). With mu_n_with_minus_eps:
///   0 in P:     (mu_n, rho^{-eps,+}), (mu_{n-1}, rho^{eps,-})
///   0 not in P: (mu_n, rho^{-eps,-}), (mu_{n-1}, rho^{eps,+})
/// With mu_n_with_eps:
///   0 in P:     (mu_{n-1}, rho^{-eps,+}), (mu_n, rho^{eps,-})
///   0 not in P: (mu_n, rho^{eps,+}), (mu_{n-1}, rho^{-eps,-})
/// With by_block_parity, s and sigma follow mu_n_with_minus_eps, and the eps
/// signs of the two rho flip when the block carrying the eps coordinate of
/// lambda (the n-block if 0 in P, else the m-block) has odd size.
/// All triples sit at lambda_P^eps.
inline std::vector<DiracTriple> oracle_so_even(int m, int n, SoEvenPairing pairing) {
    Case c = build(CaseSpec::so_even(m, n));
    auto mu = [&](int s) { return c.module.mu0 + scale(c.module.beta, s); };
    std::vector<DiracTriple> out;
    for (const auto& P : partitions(m + n - 3, 0, static_cast<std::size_t>(m - 1))) {
        const bool z = P.contains_zero();
        for (int eps : {1, -1}) {
            WeightVec lam = so_even_lambda(m, n, P, eps);
            // s paired with rho^{-eps,.} and with rho^{eps,.}; sigma on rho^{-eps,.}
            const bool minus_eps_at_n = pairing != SoEvenPairing::mu_n_with_eps;
            const int s_minus = minus_eps_at_n ? n : n - 1;
            const int s_plus = minus_eps_at_n ? n - 1 : n;
            const int sig_minus = z ? 1 : -1;
            int e = eps;
            if (pairing == SoEvenPairing::by_block_parity && (z ? n : m) % 2 != 0) e = -eps;
            out.push_back({s_minus, mu(s_minus), so_even_rho(m, n, P, -e, sig_minus), lam, {}});
            out.push_back({s_plus, mu(s_plus), so_even_rho(m, n, P, e, -sig_minus), lam, {}});
        }
    }
    return detail::finish(std::move(out));
}

/// so(2m+1,2n+1): lambda_P, with the trailing split coordinate 0.
inline WeightVec so_odd_lambda(int m, int n, const Partition& P) {
    WeightVec v(static_cast<std::size_t>(m + n + 1));
    for (int i = 0; i < m - 1; ++i) v[i] = P.a[i] + 1;
    v[m - 1] = 1;
    for (int i = 0; i < n - 1; ++i) v[m + i] = P.b[i] + 1;
    v[m + n - 1] = 1;
    return v;
}

/// so(2m+1,2n+1): rho_P^sigma, with the trailing split coordinate 0.
inline WeightVec so_odd_rho(int m, int n, const Partition& P, int sigma) {
    const int r = m + n;
    WeightVec v(static_cast<std::size_t>(r + 1));
    v[0] = Rat(2 * r - 1 + sigma, 2);
    for (int i = 0; i < m - 1; ++i) v[1 + i] = P.a[i];
    v[m] = Rat(2 * r - 1 - sigma, 2);
    for (int i = 0; i < n - 1; ++i) v[m + 1 + i] = P.b[i];
    return v;
}

inline std::vector<DiracTriple> oracle_so_odd(int m, int n) {
    Case c = build(CaseSpec::so_odd(m, n));
    WeightVec mu = c.module.mu0 + scale(c.module.beta, n);
    std::vector<DiracTriple> out;
    for (const auto& P : partitions(m + n - 2, 1, static_cast<std::size_t>(m - 1)))
        for (int sigma : {1, -1}) out.push_back({n, mu, so_odd_rho(m, n, P, sigma), so_odd_lambda(m, n, P), {}});
    return detail::finish(std::move(out));
}

/// so(2n,3): rho_i^eps, i = 1..n+1.
inline WeightVec so_2n3_rho(int n, int i, int eps) {
    WeightVec v(static_cast<std::size_t>(n + 1));
    if (i <= n) {
        // (n+1/2, ..., 3/2) without n+3/2-i, then eps/2, then n+3/2-i
        std::size_t k = 0;
        for (int j = 1; j <= n; ++j)
            if (j != i) v[k++] = Rat(2 * (n - j) + 3, 2);
        v[k++] = Rat(eps, 2);
        v[k] = Rat(2 * (n - i) + 3, 2);
    } else {
        for (int j = 0; j < n - 1; ++j) v[j] = Rat(2 * (n - j) + 1, 2);
        v[n - 1] = Rat(3 * eps, 2);
        v[n] = Rat(1, 2);
    }
    return v;
}

/// so(2n,3): lambda_i^eps, i = 1..n+1.
inline WeightVec so_2n3_lambda(int n, int i, int eps) {
    WeightVec v(static_cast<std::size_t>(n + 1));
    if (i <= n - 1) {
        // (n-1/2, ..., 3/2) without n+1/2-i, then 1, eps/2, then n+1/2-i
        std::size_t k = 0;
        for (int j = 1; j <= n - 1; ++j)
            if (j != i) v[k++] = Rat(2 * (n - j) + 1, 2);
        v[k++] = 1;
        v[k++] = Rat(eps, 2);
        v[k] = Rat(2 * (n - i) + 1, 2);
    } else {
        for (int j = 0; j < n - 1; ++j) v[j] = Rat(2 * (n - j) - 1, 2);
        if (i == n) {
            v[n - 1] = eps;
            v[n] = Rat(1, 2);
        } else {
            v[n - 1] = Rat(eps, 2);
            v[n] = 1;
        }
    }
    return v;
}

/// Closed-form triples for so(2n,3), with lengths n, n+1, n-1, n for
/// rho_1^+, rho_1^-, rho_2^+, rho_2^-.
inline std::vector<DiracTriple> oracle_so_2n3(int n) {
    Case c = build(CaseSpec::so_2n3(n));
    WeightVec mu = c.module.mu0 + c.module.beta;
    const int flip = n % 2 == 0 ? 1 : -1; // lambda sign relative to the even-n pattern
    std::vector<DiracTriple> out = {
        {1, mu, so_2n3_rho(n, 1, 1), so_2n3_lambda(n, n + 1, -flip), n},
        {1, mu, so_2n3_rho(n, 1, -1), so_2n3_lambda(n, n + 1, flip), n + 1},
        {1, mu, so_2n3_rho(n, 2, 1), so_2n3_lambda(n, n + 1, flip), n - 1},
        {1, mu, so_2n3_rho(n, 2, -1), so_2n3_lambda(n, n + 1, -flip), n},
    };
    return detail::finish(std::move(out));
}

/// Dirac index of so(2n,3) in closed form: 2E_{lambda^-} - 2E_{lambda^+} for
/// even n, the negative for odd n (highest weights lambda_{n+1}^eps - rho_k).
inline KTypeSum oracle_so_2n3_index(int n) {
    Case c = build(CaseSpec::so_2n3(n));
    const int sign = n % 2 == 0 ? 1 : -1;
    KTypeSum di;
    di.add(so_2n3_lambda(n, n + 1, -1) - c.datum.rho_k, 2 * sign);
    di.add(so_2n3_lambda(n, n + 1, 1) - c.datum.rho_k, -2 * sign);
    return di;
}

/// f4(4) closed forms, lambda given in the f-basis:
/// H_D = 2E at each of (3,5,2,1), (1,5,3,2), (2,5,3,1), (5,3,2,1) (minus rho_k);
/// DI = +2, +2, -2, -2 at the same four.
inline KTypeSum oracle_f4_cohomology() {
    Case c = build(CaseSpec::f4_4());
    KTypeSum hd;
    for (const WeightVec& f : {WeightVec{3, 5, 2, 1}, WeightVec{1, 5, 3, 2}, WeightVec{2, 5, 3, 1}, WeightVec{5, 3, 2, 1}})
        hd.add(f_to_e(f) - c.datum.rho_k, 2);
    return hd;
}

inline KTypeSum oracle_f4_index() {
    Case c = build(CaseSpec::f4_4());
    KTypeSum di;
    di.add(f_to_e({3, 5, 2, 1}) - c.datum.rho_k, 2);
    di.add(f_to_e({1, 5, 3, 2}) - c.datum.rho_k, 2);
    di.add(f_to_e({2, 5, 3, 1}) - c.datum.rho_k, -2);
    di.add(f_to_e({5, 3, 2, 1}) - c.datum.rho_k, -2);
    return di;
}

/// H_D of so(2m,2n) in closed form: 2E at every lambda_P^eps - rho_k.
inline KTypeSum oracle_so_even_cohomology(int m, int n) {
    Case c = build(CaseSpec::so_even(m, n));
    KTypeSum hd;
    for (const auto& P : partitions(m + n - 3, 0, static_cast<std::size_t>(m - 1)))
        for (int eps : {1, -1}) hd.add(so_even_lambda(m, n, P, eps) - c.datum.rho_k, 2);
    return hd;
}

/// H_D coefficient per lambda as displayed in closed form for the case, if any.
inline std::optional<std::int64_t> stated_hd_coefficient(Family f) {
    switch (f) {
    case Family::so_even:
    case Family::so_odd:
    case Family::so_2n3:
    case Family::f4_4: return 2;
    default: return std::nullopt;
    }
}

/// Expected (cohomology, index, infinitesimal character) verdicts per family.
struct Verdicts {
    std::string cohomology; // "Nonzero" or "Zero"
    std::string index;      // "Nonzero", "Zero" or "N/A"
    std::string infinitesimal_character; // "Regular" or "Singular"
    friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

inline Verdicts expected_verdicts(Family f) {
    switch (f) {
    case Family::so_even: return {"Nonzero", "Zero", "Singular"};
    case Family::so_odd: return {"Nonzero", "N/A", "Singular"};
    case Family::so_2n3: return {"Nonzero", "Nonzero", "Regular"};
    case Family::f4_4: return {"Nonzero", "Nonzero", "Regular"};
    case Family::e8_8: return {"Nonzero", "Zero", "Singular"};
    case Family::e8_m24: return {"Nonzero", "Zero", "Singular"};
    }
    return {};
}

inline Verdicts computed_verdicts(const SearchReport& r) {
    Verdicts v;
    v.cohomology = r.hd.is_zero() ? "Zero" : "Nonzero";
    v.index = !r.di ? "N/A" : r.di->is_zero() ? "Zero" : "Nonzero";
    v.infinitesimal_character = r.structure.all_lambda_singular ? "Singular" : "Regular";
    return v;
}

} // namespace dirac
