#include <gtest/gtest.h>

#include <set>

#include "dirac/catalog.hpp"

using namespace dirac;

namespace {

std::vector<CaseSpec> all_specs() {
    std::vector<CaseSpec> out = {CaseSpec::f4_4(), CaseSpec::e8_8(), CaseSpec::e8_m24()};
    for (int m = 2; m <= 7; ++m)
        for (int n = 1; n <= m && m + n <= 8; ++n) {
            if (n >= 2) out.push_back(CaseSpec::so_even(m, n));
            out.push_back(CaseSpec::so_odd(m, n));
        }
    for (int n = 2; n <= 6; ++n) out.push_back(CaseSpec::so_2n3(n));
    return out;
}

// Positive-root counts from the Cartan types of g and k, not from the catalog.
std::size_t pos_g_count(const CaseSpec& s) {
    switch (s.family) {
    case Family::so_even: return static_cast<std::size_t>((s.m + s.n) * (s.m + s.n - 1));      // D_{m+n}
    case Family::so_odd: return static_cast<std::size_t>((s.m + s.n + 1) * (s.m + s.n));       // D_{m+n+1}
    case Family::so_2n3: return static_cast<std::size_t>((s.n + 1) * (s.n + 1));               // B_{n+1}
    case Family::f4_4: return 24;
    case Family::e8_8:
    case Family::e8_m24: return 120;
    }
    return 0;
}

std::size_t pos_k_count(const CaseSpec& s) {
    switch (s.family) {
    case Family::so_even: return static_cast<std::size_t>(s.m * (s.m - 1) + s.n * (s.n - 1)); // D_m + D_n
    case Family::so_odd: return static_cast<std::size_t>(s.m * s.m + s.n * s.n);               // B_m + B_n
    case Family::so_2n3: return static_cast<std::size_t>(s.n * (s.n - 1) + 1);                 // D_n + A_1
    case Family::f4_4: return 10;                                                              // C_3 + A_1
    case Family::e8_8: return 56;                                                              // D_8
    case Family::e8_m24: return 64;                                                            // E_7 + A_1
    }
    return 0;
}

} // namespace

TEST(Catalog, EveryCaseValidates) {
    for (const auto& s : all_specs()) {
        Case c = build(s);
        EXPECT_EQ(validate(c), std::vector<std::string>{}) << s.id();
    }
}

TEST(Catalog, RootCountsFollowTheCartanTypes) {
    for (const auto& s : all_specs()) {
        Case c = build(s);
        EXPECT_EQ(c.datum.pos_roots_g.size(), pos_g_count(s)) << s.id();
        EXPECT_EQ(c.datum.pos_roots_k.size(), pos_k_count(s)) << s.id();
        // For so_odd the short k-roots e_i are restrictions of e_i ± e_{m+n+1},
        // which stay noncompact; only the long k-roots are g-roots.
        std::size_t compact = s.family == Family::so_odd
                                  ? static_cast<std::size_t>(s.m * (s.m - 1) + s.n * (s.n - 1))
                                  : pos_k_count(s);
        EXPECT_EQ(c.datum.noncompact_pos_roots.size(), pos_g_count(s) - compact) << s.id();
    }
    EXPECT_EQ(build(CaseSpec::e8_8()).datum.noncompact_pos_roots.size(), 64u);
    EXPECT_EQ(build(CaseSpec::e8_m24()).datum.noncompact_pos_roots.size(), 56u);
    EXPECT_EQ(build(CaseSpec::so_even(3, 2)).datum.noncompact_pos_roots.size(), 12u); // 2m·2n/2
    EXPECT_EQ(build(CaseSpec::so_2n3(4)).datum.noncompact_pos_roots.size(), 12u);     // 2n·3/2
}

TEST(Catalog, RootsAreClosedUnderNegationAndHaveExpectedLengths) {
    for (const auto& s : all_specs()) {
        Case c = build(s);
        std::set<WeightVec> pos(c.datum.pos_roots_g.begin(), c.datum.pos_roots_g.end());
        EXPECT_EQ(pos.size(), c.datum.pos_roots_g.size()) << s.id();
        for (const auto& a : c.datum.pos_roots_g) {
            EXPECT_FALSE(pos.count(-a)) << s.id() << " " << a;
            Rat n = norm2(a);
            EXPECT_TRUE(n == Rat(1) || n == Rat(2)) << s.id() << " " << a;
        }
    }
}

TEST(Catalog, EqualRankExactlyOffSoOdd) {
    for (const auto& s : all_specs()) {
        Case c = build(s);
        bool odd = s.family == Family::so_odd;
        EXPECT_EQ(c.datum.equal_rank, !odd) << s.id();
        EXPECT_EQ(c.datum.dim_a, odd ? 1 : 0) << s.id();
    }
}

TEST(Catalog, BuildExamples) {
    EXPECT_EQ(build(CaseSpec::e8_8()).datum.rho_k, (WeightVec{0, 1, 2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(build(CaseSpec::e8_m24()).datum.rho_k, (WeightVec{0, 1, 2, 3, 4, 5, -8, 9}));
    EXPECT_EQ(build(CaseSpec::e8_8()).datum.rho_g, (WeightVec{0, 1, 2, 3, 4, 5, 6, 23}));
    Case f4 = build(CaseSpec::f4_4());
    EXPECT_EQ(f4.module.mu0, (WeightVec{Rat(1, 2), Rat(1, 2), 0, 0}));
    EXPECT_EQ(f4.module.beta, (WeightVec{1, 0, 1, 0}));
    EXPECT_EQ(f4.datum.rho_g, (WeightVec{Rat(11, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)}));
    EXPECT_EQ(e_to_f(f4.datum.rho_k), (WeightVec{1, 3, 2, 1}));
    EXPECT_EQ(build(CaseSpec::so_even(2, 2)).datum.rho_g, (WeightVec{3, 2, 1, 0}));
}

TEST(Catalog, PerturbedRhoGivesOneViolation) {
    RootDatum d = build(CaseSpec::f4_4()).datum;
    d.rho_g = d.rho_g + WeightVec::unit(4, 0);
    auto bad = validate(d);
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_NE(bad.front().find("rho_g"), std::string::npos);
}

TEST(Catalog, DroppedRootIsReported) {
    RootDatum d = build(CaseSpec::e8_8()).datum;
    d.noncompact_pos_roots.pop_back();
    EXPECT_FALSE(validate(d).empty());
}

TEST(Catalog, FBasis) {
    EXPECT_EQ(f_to_e(WeightVec{8, 3, 2, 1}), (WeightVec{Rat(11, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)}));
    EXPECT_EQ(f_to_e(WeightVec{1, 1, 1, 1}), (WeightVec{1, 0, 1, 0}));
    WeightVec v{Rat(7, 3), -2, Rat(1, 2), 9};
    EXPECT_EQ(e_to_f(f_to_e(v)), v);
    EXPECT_EQ(f_to_e(e_to_f(v)), v);
    EXPECT_THROW(f_to_e(WeightVec{1, 2}), dimension_mismatch);
}

TEST(Catalog, ParameterConstraints) {
    EXPECT_THROW(CaseSpec::so_even(1, 1), invalid_case);
    EXPECT_THROW(CaseSpec::so_even(2, 3), invalid_case);
    EXPECT_NO_THROW(CaseSpec::so_even(2, 2));
    EXPECT_THROW(CaseSpec::so_odd(1, 1), invalid_case);
    EXPECT_THROW(CaseSpec::so_odd(2, 0), invalid_case);
    EXPECT_THROW(CaseSpec::so_odd(2, 3), invalid_case);
    EXPECT_NO_THROW(CaseSpec::so_odd(2, 1));
    EXPECT_THROW(CaseSpec::so_2n3(1), invalid_case);
    EXPECT_THROW(parse_family("g2"), invalid_case);
    EXPECT_EQ(make_case(parse_family("so_even"), 3, 2), CaseSpec::so_even(3, 2));
}

TEST(Catalog, IdentifiersAndRegistry) {
    EXPECT_EQ(CaseSpec::so_even(3, 2).id(), "so_even(3,2)");
    EXPECT_EQ(CaseSpec::so_even(3, 2).real_form(), "so(6,4)");
    EXPECT_EQ(CaseSpec::so_odd(2, 1).real_form(), "so(5,3)");
    EXPECT_EQ(CaseSpec::so_2n3(4).real_form(), "so(8,3)");
    EXPECT_EQ(registry().size(), 6u);
    for (const auto& e : registry()) EXPECT_NO_THROW(parse_family(e.name));
}
