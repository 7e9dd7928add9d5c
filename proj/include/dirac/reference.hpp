#pragma once

// Reference tables embedded from data/ by the build (see cmake/reference_tables.hpp.in).

#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/oracles.hpp"
#include "dirac/reference_tables.hpp"

namespace dirac {

/// The eight f4(4) triples with lengths, canonically ordered.
inline std::vector<DiracTriple> oracle_f4() {
    return table_triples(parse_table(reference::f4_4_table), build(CaseSpec::f4_4()));
}

/// The e8(-24) table exactly as transcribed, before corrections.
inline Table e8_m24_table_verbatim() { return parse_table(reference::e8_m24_table); }

inline std::vector<Erratum> e8_m24_errata() { return parse_errata(reference::e8_m24_errata); }

/// The 56 e8(-24) triples with lengths, corrections applied.
inline std::vector<DiracTriple> oracle_e8_m24() {
    return table_triples(apply_errata(e8_m24_table_verbatim(), e8_m24_errata()), build(CaseSpec::e8_m24()));
}

/// Frozen e8(8) result used as a regression fixture.
inline std::vector<DiracTriple> e8_8_fixture() {
    return table_triples(parse_table(reference::e8_8_table), build(CaseSpec::e8_8()));
}

} // namespace dirac
