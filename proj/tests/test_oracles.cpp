#include <gtest/gtest.h>

#include <set>

#include "dirac/catalog.hpp"
#include "dirac/oracles.hpp"
#include "dirac/reference.hpp"
#include "dirac/search.hpp"

using namespace dirac;

namespace {

bool in_e8_lattice(const WeightVec& v) {
    bool all_int = true, all_half = true;
    Rat sum = 0;
    for (const auto& x : v) {
        all_int = all_int && x.is_integer();
        all_half = all_half && !x.is_integer() && (x * 2).is_integer();
        sum += x;
    }
    return (all_int || all_half) && sum.is_integer() && (sum.numerator() % 2 == 0);
}

// Single-coordinate replacements of v (half-integer steps in [-30,30]) that
// restore the norm, E8-lattice membership and K-dominance (of v - shift).
std::vector<std::pair<std::size_t, Rat>> repairs(const WeightVec& v, const Rat& norm, const RootDatum& d,
                                                 const WeightVec& shift) {
    std::vector<std::pair<std::size_t, Rat>> out;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (int k = -60; k <= 60; ++k) {
            WeightVec w = v;
            w[i] = Rat(k, 2);
            if (w == v) continue;
            if (norm2(w) == norm && in_e8_lattice(w) && is_k_dominant(w - shift, d)) out.emplace_back(i, w[i]);
        }
    return out;
}

} // namespace

TEST(Oracles, TableParseFormatRoundTrip) {
    Table t = parse_table(reference::f4_4_table);
    EXPECT_TRUE(t.f_basis);
    ASSERT_EQ(t.rows.size(), 8u);
    EXPECT_EQ(t.rows.front().rho, (WeightVec{6, 5, 4, 1}));
    Table again = parse_table(format_table(t));
    EXPECT_EQ(format_table(again), format_table(t));
    EXPECT_EQ(parse_table(format_table(e8_m24_table_verbatim())).rows.size(), 56u);
}

TEST(Oracles, TableParseErrors) {
    EXPECT_THROW(parse_table("1; [1,2]; [3,4]\n"), parse_error);
    EXPECT_THROW(parse_table("x; [1,2]; [3,4]; 1\n"), parse_error);
    EXPECT_THROW(parse_table("1; [1,2]; [3,4; 1\n"), parse_error);
    EXPECT_EQ(parse_table("# only a comment\n\n").rows.size(), 0u);
    Table t = parse_table("0; [1]; [2]; -\n");
    ASSERT_EQ(t.rows.size(), 1u);
    EXPECT_FALSE(t.rows[0].length);
}

TEST(Oracles, ReferenceLengthsInTheFTable) {
    std::vector<int> lengths;
    for (const auto& r : parse_table(reference::f4_4_table).rows) lengths.push_back(*r.length);
    EXPECT_EQ(lengths, (std::vector<int>{12, 8, 10, 10, 11, 9, 13, 7}));
}

// Each corrected vector is broken as transcribed, and the correction is the
// only single-coordinate change that repairs it.
TEST(Oracles, ErrataAreForcedAndUnique) {
    Case c = build(CaseSpec::e8_m24());
    const auto& d = c.datum;
    const Rat rho_norm = norm2(d.rho_g), lam_norm = norm2(c.module.lambda0);
    EXPECT_EQ(rho_norm, Rat(620));
    Table raw = e8_m24_table_verbatim();
    auto errata = e8_m24_errata();
    EXPECT_EQ(errata.size(), 11u);
    std::set<std::size_t> rows;
    for (const auto& e : errata) {
        rows.insert(e.row);
        const auto& row = raw.rows.at(e.row - 1);
        const WeightVec& v = e.rho ? row.rho : row.lam;
        const Rat& norm = e.rho ? rho_norm : lam_norm;
        const WeightVec shift = e.rho ? WeightVec::zero(8) : d.rho_k;
        bool broken = norm2(v) != norm || !in_e8_lattice(v) || !is_k_dominant(v - shift, d);
        EXPECT_TRUE(broken) << "row " << e.row;
        auto fixes = repairs(v, norm, d, shift);
        ASSERT_EQ(fixes.size(), 1u) << "row " << e.row;
        EXPECT_EQ(fixes[0].first, e.coord - 1) << "row " << e.row;
        EXPECT_EQ(fixes[0].second, e.value) << "row " << e.row;
    }
    EXPECT_EQ(rows.size(), 10u);

    // Every other vector is sound as transcribed.
    for (std::size_t i = 0; i < raw.rows.size(); ++i) {
        if (rows.count(i + 1)) continue;
        EXPECT_EQ(norm2(raw.rows[i].rho), rho_norm) << "row " << i + 1;
        EXPECT_EQ(norm2(raw.rows[i].lam), lam_norm) << "row " << i + 1;
    }
}

TEST(Oracles, ErrataParsing) {
    auto e = parse_errata("1; lambda; 2; -1/2\n");
    ASSERT_EQ(e.size(), 1u);
    EXPECT_FALSE(e[0].rho);
    EXPECT_EQ(e[0].value, Rat(-1, 2));
    EXPECT_THROW(parse_errata("3; mu; 2; 1\n"), parse_error);
    Table t = parse_table("0; [1,2]; [3,4]; 0\n");
    EXPECT_EQ(apply_errata(t, e).rows[0].lam, (WeightVec{3, Rat(-1, 2)}));
    EXPECT_THROW(apply_errata(t, parse_errata("2; rho; 1; 0\n")), parse_error);
    EXPECT_THROW(apply_errata(t, parse_errata("1; rho; 3; 0\n")), parse_error);
}

TEST(Oracles, CompareTriplesReportsEachKind) {
    WeightVec a{1}, b{2}, c{3};
    std::vector<DiracTriple> expected = {{0, a, a, a, 1}, {1, a, b, a, 2}};
    std::vector<DiracTriple> found = {{0, a, a, a, 3}, {2, a, c, a, 0}};
    TripleDiff d = compare_triples(expected, found);
    EXPECT_EQ(d.missing.size(), 1u);
    EXPECT_EQ(d.unexpected.size(), 1u);
    EXPECT_EQ(d.length_mismatch.size(), 1u);
    EXPECT_TRUE(compare_triples(expected, expected).empty());
    // Expected triples without a length only compare (s, rho, lambda).
    std::vector<DiracTriple> bare = {{0, a, a, a, {}}};
    EXPECT_TRUE(compare_triples(bare, {{0, a, a, a, 5}}).empty());
}

TEST(Oracles, SmallInstances) {
    auto so_even = oracle_so_even(2, 2, SoEvenPairing::mu_n_with_minus_eps);
    EXPECT_EQ(so_even.size(), 8u);
    std::set<WeightVec> lambdas;
    for (const auto& t : so_even) lambdas.insert(t.lam);
    EXPECT_EQ(lambdas.size(), 4u);
    EXPECT_EQ(oracle_so_odd(2, 1).size(), 2u);
    EXPECT_EQ(oracle_so_2n3(2).size(), 4u);
    EXPECT_EQ(oracle_f4().size(), 8u);
    EXPECT_EQ(partitions(3, 0, 2).size(), 6u);
}

// The triple set of so(2m,2n) follows the printed pairing exactly when m and
// n are both even; the block-parity pairing holds throughout.
TEST(Oracles, SoEvenPairingRule) {
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= m && m + n <= 8; ++n) {
            auto found = run_search(build(CaseSpec::so_even(m, n))).triples;
            bool stated = compare_triples(oracle_so_even(m, n, SoEvenPairing::mu_n_with_minus_eps), found).empty();
            EXPECT_EQ(stated, m % 2 == 0 && n % 2 == 0) << m << "," << n;
            EXPECT_TRUE(compare_triples(oracle_so_even(m, n, SoEvenPairing::by_block_parity), found).empty())
                << m << "," << n;
        }
}

TEST(Oracles, SoOddAndSo2n3ClosedForms) {
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n)
            EXPECT_TRUE(compare_triples(oracle_so_odd(m, n), run_search(build(CaseSpec::so_odd(m, n))).triples).empty())
                << m << "," << n;
    for (int n = 2; n <= 6; ++n)
        EXPECT_TRUE(compare_triples(oracle_so_2n3(n), run_search(build(CaseSpec::so_2n3(n))).triples).empty()) << n;
}

TEST(Oracles, Verdicts) {
    for (const auto& s : {CaseSpec::so_even(3, 2), CaseSpec::so_odd(2, 1), CaseSpec::so_2n3(3), CaseSpec::f4_4(),
                          CaseSpec::e8_8(), CaseSpec::e8_m24()})
        EXPECT_EQ(computed_verdicts(run_search(build(s))), expected_verdicts(s.family)) << s.id();
    EXPECT_EQ(stated_hd_coefficient(Family::so_odd), 2);
    EXPECT_FALSE(stated_hd_coefficient(Family::e8_8));
}
