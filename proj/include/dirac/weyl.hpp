#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "dirac/catalog.hpp"
#include "dirac/weight.hpp"

namespace dirac {

/// K-dominant representatives found by orbit_k_dominant, sorted ascending.
struct OrbitSet {
    std::vector<WeightVec> elements;
    WeightVec seed;
    int generations = 0;

    std::size_t size() const { return elements.size(); }
    bool contains(const WeightVec& v) const { return std::binary_search(elements.begin(), elements.end(), v); }
};

inline bool is_k_dominant(const WeightVec& v, const RootDatum& d) {
    for (const auto& a : d.simple_roots_k)
        if (inner(v, a).sign() < 0) return false;
    return true;
}

/// The K-dominant element of the W(k,t)-orbit of v, by simple-root descent.
inline WeightVec normalize_k_dominant(WeightVec v, const RootDatum& d) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (const auto& a : d.simple_roots_k) {
            if (inner(v, a).sign() < 0) {
                v = reflect(v, a);
                moved = true;
            }
        }
    }
    return v;
}

/// Descent with reflections prepared once; used in the hot search loop.
class Normalizer {
public:
    explicit Normalizer(const RootDatum& d) {
        for (const auto& a : d.simple_roots_k) refl_.emplace_back(a);
    }
    WeightVec operator()(WeightVec v) const {
        bool moved = true;
        while (moved) {
            moved = false;
            for (const auto& s : refl_) {
                if (inner(v, s.root()).sign() < 0) {
                    v = s.apply(v);
                    moved = true;
                }
            }
        }
        return v;
    }

private:
    std::vector<Reflection> refl_;
};

/// All K-dominant representatives inside W(g,h)·seed. Breadth-first search
/// from {seed} through reflections in noncompact positive roots, normalizing
/// each image, until no new element appears.
inline OrbitSet orbit_k_dominant(const WeightVec& seed, const RootDatum& d) {
    Normalizer norm(d);
    std::vector<Reflection> moves;
    for (const auto& g : d.noncompact_pos_roots) moves.emplace_back(g);

    OrbitSet out;
    out.seed = seed;
    WeightVec start = norm(seed);
    std::set<WeightVec> seen{start};
    std::vector<WeightVec> frontier{start};
    while (!frontier.empty()) {
        std::vector<WeightVec> next;
        for (const auto& v : frontier)
            for (const auto& r : moves) {
                WeightVec w = norm(r.apply(v));
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        if (!next.empty()) ++out.generations;
        frontier = std::move(next);
    }
    out.elements.assign(seen.begin(), seen.end());
    return out;
}

/// Length of the w with rho = w·rho_g: the number of positive g-roots
/// pairing negatively with rho.
inline int weyl_length(const WeightVec& rho, const RootDatum& d) {
    int n = 0;
    for (const auto& a : d.pos_roots_g)
        if (inner(rho, a).sign() < 0) ++n;
    return n;
}

inline bool is_g_regular(const WeightVec& lam, const RootDatum& d) {
    for (const auto& a : d.pos_roots_g)
        if (inner(lam, a).is_zero()) return false;
    return true;
}

} // namespace dirac
