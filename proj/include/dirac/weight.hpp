#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dirac/errors.hpp"
#include "dirac/rational.hpp"

namespace dirac {

/// Exact coordinate vector in the orthonormal e-basis of h* (or t*).
///
/// Carries weights, roots and rho-shifts alike. Every binary operation
/// requires equal dimensions and throws dimension_mismatch otherwise.
/// Ordering is lexicographic on coordinates, which is what all canonical
/// sorting in the library relies on.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::size_t dim) : coords_(dim) {}
    WeightVec(std::initializer_list<Rat> c) : coords_(c) {}
    explicit WeightVec(std::vector<Rat> c) : coords_(std::move(c)) {}

    static WeightVec zero(std::size_t dim) { return WeightVec(dim); }
    static WeightVec unit(std::size_t dim, std::size_t i) {
        WeightVec v(dim);
        v[i] = 1;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    std::span<const Rat> coords() const { return coords_; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Bracketed comma-separated list, e.g. "[1/2,-3/2,0]".
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) out += ',';
            out += coords_[i].str();
        }
        return out + "]";
    }

    /// Inverse of str(); also accepts round brackets and spaces.
    static WeightVec parse(std::string_view text) {
        while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
        while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
        if (text.size() < 2 || !((text.front() == '[' && text.back() == ']') || (text.front() == '(' && text.back() == ')')))
            throw parse_error("vector must be enclosed in brackets: '" + std::string(text) + "'");
        text = text.substr(1, text.size() - 2);
        std::vector<Rat> c;
        while (true) {
            auto comma = text.find(',');
            auto piece = text.substr(0, comma);
            bool blank = piece.find_first_not_of(" \t") == std::string_view::npos;
            if (blank) {
                if (c.empty() && comma == std::string_view::npos) break; // "[]"
                throw parse_error("empty vector coordinate");
            }
            c.push_back(Rat::parse(piece));
            if (comma == std::string_view::npos) break;
            text.remove_prefix(comma + 1);
        }
        return WeightVec(std::move(c));
    }

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
    friend std::strong_ordering operator<=>(const WeightVec& a, const WeightVec& b) {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                      b.coords_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const WeightVec& v) { return os << v.str(); }

private:
    std::vector<Rat> coords_;
};

inline void require_same_dim(const WeightVec& u, const WeightVec& v) {
    if (u.dim() != v.dim()) throw dimension_mismatch(u.dim(), v.dim());
}

/// Standard Euclidean form sum u_i v_i.
inline Rat inner(const WeightVec& u, const WeightVec& v) {
    require_same_dim(u, v);
    Rat s;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i].is_zero() || v[i].is_zero()) continue;
        s += u[i] * v[i];
    }
    return s;
}

inline Rat norm2(const WeightVec& v) { return inner(v, v); }

inline WeightVec add(const WeightVec& u, const WeightVec& v) {
    require_same_dim(u, v);
    WeightVec r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i] + v[i];
    return r;
}

inline WeightVec sub(const WeightVec& u, const WeightVec& v) {
    require_same_dim(u, v);
    WeightVec r(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) r[i] = u[i] - v[i];
    return r;
}

inline WeightVec scale(const WeightVec& v, const Rat& s) {
    WeightVec r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] * s;
    return r;
}

inline WeightVec operator+(const WeightVec& u, const WeightVec& v) { return add(u, v); }
inline WeightVec operator-(const WeightVec& u, const WeightVec& v) { return sub(u, v); }
inline WeightVec operator-(const WeightVec& v) { return scale(v, -1); }
inline WeightVec operator*(const Rat& s, const WeightVec& v) { return scale(v, s); }

/// v - (2<v,alpha>/<alpha,alpha>) alpha
inline WeightVec reflect(const WeightVec& v, const WeightVec& alpha) {
    require_same_dim(v, alpha);
    Rat a2 = norm2(alpha);
    if (a2.is_zero()) throw zero_root();
    Rat ip = inner(v, alpha);
    if (ip.is_zero()) return v;
    Rat c = Rat(2) * ip / a2;
    WeightVec r = v;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!alpha[i].is_zero()) r[i] -= c * alpha[i];
    }
    return r;
}

/// Reflection with the scalar 2/<alpha,alpha> precomputed, for hot loops.
class Reflection {
public:
    explicit Reflection(WeightVec root) : root_(std::move(root)) {
        Rat a2 = norm2(root_);
        if (a2.is_zero()) throw zero_root();
        coroot_scale_ = Rat(2) / a2;
    }
    const WeightVec& root() const { return root_; }
    /// <v, alpha^vee>
    Rat pairing(const WeightVec& v) const { return inner(v, root_) * coroot_scale_; }
    WeightVec apply(const WeightVec& v) const {
        Rat c = pairing(v);
        if (c.is_zero()) return v;
        WeightVec r = v;
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (!root_[i].is_zero()) r[i] -= c * root_[i];
        }
        return r;
    }

private:
    WeightVec root_;
    Rat coroot_scale_;
};

struct WeightVecHash {
    std::size_t operator()(const WeightVec& v) const noexcept {
        std::size_t h = v.dim();
        for (const auto& c : v) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace dirac
