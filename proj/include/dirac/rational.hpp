#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "dirac/errors.hpp"

namespace dirac {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are kept inline and
/// combined through 128-bit intermediates; anything larger moves to an
/// arbitrary-precision boost::multiprecision::cpp_rational. The representation
/// is canonical (a value is stored inline whenever it fits), so results never
/// depend on which path produced them.
class Rat {
public:
    using BigInt = boost::multiprecision::cpp_int;
    using Big = boost::multiprecision::cpp_rational;

    Rat() = default;
    Rat(std::int64_t v) { // NOLINT(google-explicit-constructor): integer literals read naturally
        if (v == kMin) {
            set_big(Big(v));
        } else {
            num_ = v;
        }
    }
    Rat(int v) : Rat(static_cast<std::int64_t>(v)) {} // NOLINT(google-explicit-constructor)

    Rat(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        set_wide(num, den);
    }

    explicit Rat(const Big& b) { set_big(b); }

    Rat(const Rat& o) : num_(o.num_), den_(o.den_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
    Rat(Rat&&) noexcept = default;
    Rat& operator=(const Rat& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rat& operator=(Rat&&) noexcept = default;
    ~Rat() = default;

    /// Parses "p" or "p/q" (q > 0); surrounding whitespace is ignored.
    static Rat parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto slash = text.find('/');
        BigInt num = parse_int(trim(text.substr(0, slash)), text);
        BigInt den = 1;
        if (slash != std::string_view::npos) {
            auto d = trim(text.substr(slash + 1));
            if (!d.empty() && (d.front() == '-' || d.front() == '+'))
                throw parse_error("rational denominator must be unsigned: '" + std::string(text) + "'");
            den = parse_int(d, text);
            if (den == 0) throw parse_error("rational with zero denominator: '" + std::string(text) + "'");
        }
        return Rat(Big(num, den));
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (!big_) {
            return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
        }
        BigInt n = boost::multiprecision::numerator(*big_);
        BigInt d = boost::multiprecision::denominator(*big_);
        return d == 1 ? n.str() : n.str() + "/" + d.str();
    }

    BigInt numerator() const { return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_); }
    BigInt denominator() const { return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_); }
    Big to_big() const { return big_ ? *big_ : Big(num_, den_); }

    bool is_small() const { return !big_; }
    bool is_integer() const { return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1; }
    bool is_zero() const { return !big_ && num_ == 0; }
    int sign() const {
        if (big_) return big_->sign();
        return (num_ > 0) - (num_ < 0);
    }

    /// Lossy conversion for display and diagnostics only.
    double to_double() const {
        return big_ ? static_cast<double>(*big_) : static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::size_t hash() const {
        if (big_) return std::hash<std::string>{}(str());
        std::size_t h = std::hash<std::int64_t>{}(num_);
        return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

    Rat operator-() const {
        Rat r;
        if (big_) {
            r.set_big(-*big_);
        } else {
            r.num_ = -num_;
            r.den_ = den_;
        }
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.big_ || b.big_) return from_big(a.to_big() + b.to_big());
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<Wide>(a.num_) + b.num_, 1);
        Wide g = std::gcd(a.den_, b.den_);
        Wide bd = b.den_ / g;
        return from_wide(static_cast<Wide>(a.num_) * bd + static_cast<Wide>(b.num_) * (a.den_ / g), a.den_ * bd);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        if (a.big_ || b.big_) return from_big(a.to_big() - b.to_big());
        if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<Wide>(a.num_) - b.num_, 1);
        Wide g = std::gcd(a.den_, b.den_);
        Wide bd = b.den_ / g;
        return from_wide(static_cast<Wide>(a.num_) * bd - static_cast<Wide>(b.num_) * (a.den_ / g), a.den_ * bd);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        if (a.big_ || b.big_) return from_big(a.to_big() * b.to_big());
        std::int64_t g1 = std::gcd(a.num_, b.den_);
        std::int64_t g2 = std::gcd(b.num_, a.den_);
        return from_reduced(static_cast<Wide>(a.num_ / g1) * (b.num_ / g2),
                            static_cast<Wide>(a.den_ / g2) * (b.den_ / g1));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        if (a.big_ || b.big_) return from_big(a.to_big() / b.to_big());
        std::int64_t g1 = std::gcd(a.num_, b.num_);
        std::int64_t g2 = std::gcd(a.den_, b.den_);
        Wide num = static_cast<Wide>(a.num_ / g1) * (b.den_ / g2);
        Wide den = static_cast<Wide>(a.den_ / g2) * (b.num_ / g1);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return from_reduced(num, den);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false; // canonical form: a small value never equals a big one
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            if (a.den_ == b.den_) return a.num_ <=> b.num_;
            Wide l = static_cast<Wide>(a.num_) * b.den_;
            Wide r = static_cast<Wide>(b.num_) * a.den_;
            return l <=> r;
        }
        Big l = a.to_big();
        Big r = b.to_big();
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    using Wide = __int128;
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<Big> big_; // engaged iff the value does not fit inline

    static BigInt parse_int(std::string_view digits, std::string_view whole) {
        std::string_view body = digits;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        if (body.empty()) throw parse_error("malformed rational: '" + std::string(whole) + "'");
        for (char c : body) {
            if (c < '0' || c > '9') throw parse_error("malformed rational: '" + std::string(whole) + "'");
        }
        BigInt v{std::string(body)};
        return (!digits.empty() && digits.front() == '-') ? BigInt(-v) : v;
    }

    static unsigned __int128 gcd_wide(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static bool fits(Wide v) { return v > kMin && v <= kMax; }

    static Rat from_big(const Big& b) {
        Rat r;
        r.set_big(b);
        return r;
    }

    // num/den already coprime, den > 0
    static Rat from_reduced(Wide num, Wide den) {
        if (fits(num) && fits(den)) {
            Rat r;
            r.num_ = static_cast<std::int64_t>(num);
            r.den_ = static_cast<std::int64_t>(den);
            return r;
        }
        return from_big(Big(to_bigint(num), to_bigint(den)));
    }

    // den > 0, not necessarily reduced
    static Rat from_wide(Wide num, Wide den) {
        if (den != 1) {
            unsigned __int128 an = num < 0 ? static_cast<unsigned __int128>(-num) : static_cast<unsigned __int128>(num);
            auto g = static_cast<Wide>(gcd_wide(an, static_cast<unsigned __int128>(den)));
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
        return from_reduced(num, den);
    }

    static BigInt to_bigint(Wide v) {
        bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return neg ? BigInt(-r) : r;
    }

    void set_wide(std::int64_t num, std::int64_t den) {
        Wide n = num;
        Wide d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        *this = from_wide(n, d);
    }

    void set_big(const Big& b) {
        const auto& n = boost::multiprecision::numerator(b);
        const auto& d = boost::multiprecision::denominator(b);
        if (n > kMin && n <= kMax && d <= kMax) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            big_.reset();
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_unique<Big>(b);
        }
    }
};

} // namespace dirac

template <>
struct std::hash<dirac::Rat> {
    std::size_t operator()(const dirac::Rat& r) const noexcept { return r.hash(); }
};
