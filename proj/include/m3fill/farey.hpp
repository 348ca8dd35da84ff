#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m3fill/contfrac.hpp"
#include "m3fill/errors.hpp"
#include "m3fill/slope.hpp"

namespace m3fill {

/// Three slopes that are pairwise Farey neighbors; a vertex of the dual tree
/// of the Farey triangulation. Stored sorted so equal triples compare equal.
struct FareyTriple {
    std::array<Slope, 3> slopes;

    FareyTriple(Slope a, Slope b, Slope c) : slopes{a, b, c} {
        std::sort(slopes.begin(), slopes.end());
        if (!(is_farey_neighbor(slopes[0], slopes[1]) &&
              is_farey_neighbor(slopes[0], slopes[2]) &&
              is_farey_neighbor(slopes[1], slopes[2]))) {
            throw Error("not a Farey triple: " + slopes[0].str() + ", " +
                        slopes[1].str() + ", " + slopes[2].str());
        }
        if (slopes[0] == slopes[1] || slopes[1] == slopes[2]) {
            throw Error("degenerate Farey triple");
        }
    }

    bool contains(const Slope& s) const {
        return slopes[0] == s || slopes[1] == s || slopes[2] == s;
    }

    /// The two members other than `s`.
    std::array<Slope, 2> others(const Slope& s) const {
        std::array<Slope, 2> out{slopes[0], slopes[0]};
        int k = 0;
        for (const Slope& t : slopes)
            if (!(t == s)) out[static_cast<std::size_t>(k++)] = t;
        if (k != 2) throw Error("slope not in triple: " + s.str());
        return out;
    }

    friend bool operator==(const FareyTriple& a, const FareyTriple& b) {
        return a.slopes == b.slopes;
    }
    friend bool operator!=(const FareyTriple& a, const FareyTriple& b) {
        return !(a == b);
    }
};

/// The slope adjacent to both y and z other than x. {x,y,z} must be a triple;
/// the two common neighbors of y,z are their mediant and their difference.
inline Slope farey_flip(const Slope& x, const Slope& y, const Slope& z) {
    Slope sum(y.p() + z.p(), y.q() + z.q());
    if (y.p() == z.p() && y.q() == z.q()) throw Error("farey_flip: y == z");
    Slope diff = (y.p() - z.p() == 0 && y.q() - z.q() == 0)
                     ? sum
                     : Slope(y.p() - z.p(), y.q() - z.q());
    if (sum == x) return diff;
    if (diff == x) return sum;
    throw Error("farey_flip: " + x.str() + " is not adjacent to both " +
                y.str() + " and " + z.str());
}

inline FareyTriple flip_triple(const FareyTriple& t, const Slope& leave) {
    auto yz = t.others(leave);
    Slope enter = farey_flip(leave, yz[0], yz[1]);
    return FareyTriple(enter, yz[0], yz[1]);
}

struct FareyStep {
    Slope leave;
    Slope enter;
};

/// The unique shortest dual-tree path from `start` to the nearest triple
/// containing `target`.
struct FareyPath {
    FareyTriple start;
    std::vector<FareyStep> steps;
    FareyTriple end;

    std::size_t length() const { return steps.size(); }
};

namespace detail {

// Unimodular change of basis sending the target slope to 1/0. In the new
// coordinates "t lies on the arc (y,z) avoiding x" becomes an ordinary
// betweenness test of finite rationals.
struct ToInfinity {
    std::int64_t m00, m01, m10, m11;

    static ToInfinity at(const Slope& t) {
        // extended gcd: x*p + y*q = 1
        std::int64_t p = t.p(), q = t.q();
        std::int64_t old_r = p, r = q;
        std::int64_t old_x = 1, x = 0;
        std::int64_t old_y = 0, y = 1;
        while (r != 0) {
            std::int64_t quo = old_r / r;
            std::int64_t tmp;
            tmp = old_r - quo * r; old_r = r; r = tmp;
            tmp = old_x - quo * x; old_x = x; x = tmp;
            tmp = old_y - quo * y; old_y = y; y = tmp;
        }
        if (old_r < 0) { old_x = -old_x; old_y = -old_y; }
        return ToInfinity{old_x, old_y, -q, p};
    }

    std::pair<std::int64_t, std::int64_t> apply(const Slope& s) const {
        return {m00 * s.p() + m01 * s.q(), m10 * s.p() + m11 * s.q()};
    }
};

// a/b < c/d for finite fractions with nonzero denominators of either sign.
inline bool frac_less(std::pair<std::int64_t, std::int64_t> a,
                      std::pair<std::int64_t, std::int64_t> b) {
    if (a.second < 0) { a.first = -a.first; a.second = -a.second; }
    if (b.second < 0) { b.first = -b.first; b.second = -b.second; }
    return a.first * b.second < b.first * a.second;
}

}  // namespace detail

inline FareyPath farey_path(const FareyTriple& start, const Slope& target) {
    FareyPath path{start, {}, start};
    if (start.contains(target)) return path;

    auto tr = detail::ToInfinity::at(target);
    FareyTriple cur = start;
    // Path lengths in this artifact are tiny; the guard is a safety net.
    for (int guard = 0; guard < 4096; ++guard) {
        // Leave the member that separates the other two from the target: in
        // coordinates where the target is at infinity, the one strictly
        // between the other two.
        std::array<std::pair<std::int64_t, std::int64_t>, 3> v;
        for (int i = 0; i < 3; ++i)
            v[static_cast<std::size_t>(i)] =
                tr.apply(cur.slopes[static_cast<std::size_t>(i)]);
        int mid = -1;
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            auto& a = v[static_cast<std::size_t>(i)];
            auto& b = v[static_cast<std::size_t>(j)];
            auto& c = v[static_cast<std::size_t>(k)];
            if ((detail::frac_less(b, a) && detail::frac_less(a, c)) ||
                (detail::frac_less(c, a) && detail::frac_less(a, b))) {
                mid = i;
                break;
            }
        }
        if (mid < 0) throw Error("farey_path: no separating member");
        Slope leave = cur.slopes[static_cast<std::size_t>(mid)];
        FareyTriple next = flip_triple(cur, leave);
        Slope enter = farey_flip(leave, cur.others(leave)[0], cur.others(leave)[1]);
        path.steps.push_back({leave, enter});
        cur = next;
        if (cur.contains(target)) {
            path.end = cur;
            return path;
        }
    }
    throw Error("farey_path: did not reach " + target.str());
}

// ---------------------------------------------------------------------------
// Boundary slope classes and the closed-form tetrahedron counts.

enum class BoundaryClass { P, Q, R, Rp, Uhat, Vhat };

inline std::string to_string(BoundaryClass b) {
    switch (b) {
        case BoundaryClass::P: return "P";
        case BoundaryClass::Q: return "Q";
        case BoundaryClass::R: return "R";
        case BoundaryClass::Rp: return "Rp";
        case BoundaryClass::Uhat: return "Uh";
        case BoundaryClass::Vhat: return "Vh";
    }
    return "?";
}

inline std::optional<BoundaryClass> parse_boundary_class(const std::string& s) {
    if (s == "P") return BoundaryClass::P;
    if (s == "Q") return BoundaryClass::Q;
    if (s == "R") return BoundaryClass::R;
    if (s == "Rp" || s == "R'") return BoundaryClass::Rp;
    if (s == "Uh" || s == "Uhat") return BoundaryClass::Uhat;
    if (s == "Vh" || s == "Vhat") return BoundaryClass::Vhat;
    return std::nullopt;
}

inline bool is_lst_class(BoundaryClass b) {
    return b != BoundaryClass::Uhat && b != BoundaryClass::Vhat;
}

/// The slope triple of a one-vertex boundary class.
inline FareyTriple class_triple(BoundaryClass b) {
    switch (b) {
        case BoundaryClass::P:
            return FareyTriple(Slope(1, 0), Slope(-1, 1), Slope(-2, 1));
        case BoundaryClass::Q:
            return FareyTriple(Slope(1, 0), Slope(-2, 1), Slope(-3, 1));
        case BoundaryClass::R:
            return FareyTriple(Slope(1, 0), Slope(1, 1), Slope(0, 1));
        case BoundaryClass::Rp:
            return FareyTriple(Slope(1, 0), Slope(-1, 1), Slope(0, 1));
        default:
            throw Error("class_triple: not a one-vertex boundary class");
    }
}

/// (alpha, beta, diagonal sign) of a permissible boundary class.
struct ChainSlopes {
    Slope alpha;
    Slope beta;
    int sign;  // +1 or -1
};

inline ChainSlopes class_chain_slopes(BoundaryClass b) {
    switch (b) {
        case BoundaryClass::Uhat: return {Slope(1, 0), Slope(-5, 1), +1};
        case BoundaryClass::Vhat: return {Slope(1, 0), Slope(1, 1), -1};
        default: throw Error("class_chain_slopes: not a permissible class");
    }
}

namespace detail {

// Offsets a by open interval of the filling slope, per boundary class.
// Intervals: (-inf,-2), (-2,-1), (-1,0), (0,inf).
inline std::int64_t lst_offset(BoundaryClass b, int interval) {
    static constexpr std::int64_t table[4][4] = {
        /* P  */ {-3, -3, -1, 0},
        /* Q  */ {-4, -2, 0, 1},
        /* R  */ {-1, -1, -1, -2},
        /* Rp */ {-2, -2, -2, -1},
    };
    int row;
    switch (b) {
        case BoundaryClass::P: row = 0; break;
        case BoundaryClass::Q: row = 1; break;
        case BoundaryClass::R: row = 2; break;
        case BoundaryClass::Rp: row = 3; break;
        default: throw Error("lst_offset: not a one-vertex boundary class");
    }
    return table[row][interval];
}

// Interval index of a finite slope, or -1 at an endpoint {-2,-1,0}.
inline int slope_interval(const Slope& s) {
    std::int64_t p = s.p(), q = s.q();  // q >= 1
    if (p == -2 * q || p == -q || p == 0) return -1;
    if (p < -2 * q) return 0;
    if (p < -q) return 1;
    if (p < 0) return 2;
    return 3;
}

}  // namespace detail

/// Tetrahedra needed to fill slope s through a one-vertex boundary of class b
/// with a layered solid torus. Equals max(|Farey path| - 1, 0).
inline std::int64_t lst_tet_count(BoundaryClass b, const Slope& s) {
    if (!is_lst_class(b)) throw Error("lst_tet_count: permissible class");
    if (s.is_infinite()) throw InfiniteSlope("lst_tet_count");
    FareyTriple triple = class_triple(b);
    if (triple.contains(s)) return 0;  // degenerate fold
    std::int64_t n = slope_norm(s);
    int iv = detail::slope_interval(s);
    if (iv >= 0) {
        std::int64_t c = n + detail::lst_offset(b, iv);
        if (c < 0) throw Error("lst_tet_count: negative count for " + s.str());
        return c;
    }
    // Interval endpoint not in the triple. These slopes are never filled in
    // production (the classifier rejects them), but direct calls still get
    // the true value: the Farey path length minus the closing fold.
    auto len = static_cast<std::int64_t>(farey_path(triple, s).length());
    return std::max<std::int64_t>(len - 1, 0);
}

/// Integer k with filling = k*alpha + beta, if the slope is realizable by a
/// layered chain over the given permissible boundary class.
inline std::int64_t chain_parameter(BoundaryClass b, const Slope& s) {
    ChainSlopes cs = class_chain_slopes(b);
    // Solve (s.p, s.q) ~ k*(alpha) + (beta) projectively.
    std::int64_t den = s.p() * cs.alpha.q() - s.q() * cs.alpha.p();
    std::int64_t num = s.q() * cs.beta.p() - s.p() * cs.beta.q();
    if (den == 0 || num % den != 0)
        throw UnrealizableSlope("chain filling must be an integer slope, got " +
                                s.str());
    return num / den;
}

/// Tetrahedra needed to fill slope s through a permissible boundary of class b
/// with a layered chain. Only integer slopes are realizable.
inline std::int64_t chain_tet_count(BoundaryClass b, const Slope& s) {
    if (is_lst_class(b)) throw Error("chain_tet_count: one-vertex class");
    if (!s.is_integer())
        throw UnrealizableSlope("chain filling must be an integer slope, got " +
                                s.str());
    std::int64_t m = s.p();
    std::int64_t t = (b == BoundaryClass::Uhat) ? (m + 4 < 0 ? -(m + 4) : m + 4)
                                                : (m < 0 ? -m : m);
    return t;
}

}  // namespace m3fill
