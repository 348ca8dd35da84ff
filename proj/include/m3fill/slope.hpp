#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "m3fill/errors.hpp"

namespace m3fill {

/// A slope p/q in lowest terms. Canonical form has q >= 0, and the single
/// infinite slope is stored as 1/0. (p,q) and (-p,-q) name the same slope.
class Slope {
public:
    Slope() : p_(0), q_(1) {}

    Slope(std::int64_t p, std::int64_t q) {
        if (p == 0 && q == 0) throw ZeroSlopePair();
        std::int64_t g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
        p /= g;
        q /= g;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
        p_ = p;
        q_ = q;
    }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    bool is_infinite() const { return q_ == 0; }
    bool is_integer() const { return q_ == 1; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    // Total order used only for deterministic tie-breaking and container keys.
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.q_ < b.q_;
    }

    std::string str() const {
        return std::to_string(p_) + "/" + std::to_string(q_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
        return os << s.str();
    }

private:
    std::int64_t p_;
    std::int64_t q_;
};

inline Slope make_slope(std::int64_t p, std::int64_t q) { return Slope(p, q); }

inline Slope infinity_slope() { return Slope(1, 0); }

/// |det| of the pair, i.e. the geometric intersection number of the two curves.
inline std::int64_t slope_det(const Slope& a, const Slope& b) {
    std::int64_t d = a.p() * b.q() - b.p() * a.q();
    return d < 0 ? -d : d;
}

inline bool is_farey_neighbor(const Slope& a, const Slope& b) {
    return slope_det(a, b) == 1;
}

/// Accepts "p/q", a bare integer "p", or "inf".
inline Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return infinity_slope();
    auto bar = text.find('/');
    try {
        if (bar == std::string::npos) {
            return Slope(std::stoll(text), 1);
        }
        std::int64_t p = std::stoll(text.substr(0, bar));
        std::int64_t q = std::stoll(text.substr(bar + 1));
        return Slope(p, q);
    } catch (const std::invalid_argument&) {
        throw Error("not a slope: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw Error("slope out of range: '" + text + "'");
    }
}

}  // namespace m3fill
