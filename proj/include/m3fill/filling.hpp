#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m3fill/contfrac.hpp"
#include "m3fill/errors.hpp"
#include "m3fill/farey.hpp"
#include "m3fill/layered.hpp"
#include "m3fill/seeds.hpp"
#include "m3fill/slope.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

/// Slopes whose filling is never a hyperbolic knot, whichever cusp they land
/// in: {inf, -3, -2, -1, 0}.
inline bool exceptional(const Slope& s) {
    if (s.is_infinite()) return true;
    return s.is_integer() && s.p() >= -3 && s.p() <= 0;
}

/// Which case of the S^3 filling classification a slope pair satisfies.
/// Type A: tr - us = +-1. Type B: r/s = -2 + 1/k and (3k-2)t + (6k-1)u = +-1.
/// Type C: r/s = -3 + 1/k and (2k-1)t + (6k-1)u = +-1.
struct KnotType {
    char type = 'A';
    std::int64_t k = 0;  // parameter for types B and C

    friend bool operator==(const KnotType& a, const KnotType& b) {
        return a.type == b.type && a.k == b.k;
    }
    std::string str() const {
        std::string out(1, type);
        if (type != 'A') out += " (k=" + std::to_string(k) + ")";
        return out;
    }
};

namespace detail {

inline std::int64_t iabs64(std::int64_t x) { return x < 0 ? -x : x; }

// k with primary = c + 1/k for integer c in {-2,-3}, or nullopt.
inline std::optional<std::int64_t> shift_reciprocal(const Slope& s, std::int64_t c) {
    std::int64_t num = s.p() - c * s.q();  // primary - c = num / q
    if (iabs64(num) != 1) return std::nullopt;
    return num == 1 ? s.q() : -s.q();
}

inline bool type_a_pair(const Slope& rs, const Slope& tu) {
    return iabs64(tu.p() * rs.p() - tu.q() * rs.q()) == 1;
}

inline bool type_bc_partner(const Slope& tu, std::int64_t k, char type) {
    std::int64_t x = (type == 'B') ? (3 * k - 2) : (2 * k - 1);
    std::int64_t y = 6 * k - 1;
    return iabs64(x * tu.p() + y * tu.q()) == 1;
}

}  // namespace detail

/// Classifies a filling pair, trying both slope orderings; std::nullopt when
/// no case matches or either slope is exceptional.
inline std::optional<KnotType> classify_pair(const Slope& rs, const Slope& tu) {
    if (exceptional(rs) || exceptional(tu)) return std::nullopt;
    std::vector<KnotType> matches;
    if (detail::type_a_pair(rs, tu)) matches.push_back({'A', 0});
    for (char type : {'B', 'C'}) {
        std::int64_t c = (type == 'B') ? -2 : -3;
        for (const auto& [primary, secondary] :
             {std::pair{rs, tu}, std::pair{tu, rs}}) {
            auto k = detail::shift_reciprocal(primary, c);
            if (k && detail::type_bc_partner(secondary, *k, type))
                matches.push_back({type, *k});
        }
    }
    if (matches.empty()) return std::nullopt;
    std::sort(matches.begin(), matches.end(), [](const KnotType& a, const KnotType& b) {
        if (a.type != b.type) return a.type < b.type;
        if (detail::iabs64(a.k) != detail::iabs64(b.k))
            return detail::iabs64(a.k) < detail::iabs64(b.k);
        return a.k < b.k;
    });
    return matches.front();
}

/// The n-th secondary slope of a family with the given primary slope; the
/// output always satisfies the type's defining identity with the primary.
inline Slope secondary_slope(const KnotType& type, const Slope& primary,
                             std::int64_t n) {
    if (exceptional(primary))
        throw ExceptionalPrimary("secondary_slope: primary " + primary.str());
    Slope out(1, 0);
    if (type.type == 'A') {
        // t_n/u_n = (s n + s')/(r n + r') with r'/s' the penultimate
        // convergent of the primary's continued fraction.
        SignedCF cf = signed_cf(primary);
        auto [rp, sp] = cf.convergent(static_cast<int>(cf.coefficients.size()) - 2);
        std::int64_t r = primary.p(), s = primary.q();
        out = Slope(s * n + sp, r * n + rp);
        if (!detail::type_a_pair(primary, out))
            throw Error("secondary_slope: identity failed for " + primary.str());
    } else {
        std::int64_t c = (type.type == 'B') ? -2 : -3;
        auto k = detail::shift_reciprocal(primary, c);
        if (!k)
            throw Error("secondary_slope: primary " + primary.str() +
                        " is not of type " + std::string(1, type.type));
        std::int64_t kk = *k;
        std::int64_t t, u;
        if (type.type == 'B') {
            t = (2 * kk - 1) - n * (6 * kk - 1);
            u = (1 - kk) + n * (3 * kk - 2);
        } else {
            t = (3 * kk - 2) - n * (6 * kk - 1);
            u = (1 - kk) + n * (2 * kk - 1);
        }
        out = Slope(t, u);
        if (!detail::type_bc_partner(out, kk, type.type))
            throw Error("secondary_slope: identity failed for " + primary.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Planning and assembly

struct FillingPlan {
    SeedId seed = SeedId::T1;
    Slope slope_for_boundary1{1, 1};
    Slope slope_for_boundary2{1, 1};
    std::int64_t t0 = 0;
    std::int64_t t1 = 0;
    std::int64_t t2 = 0;

    std::int64_t total() const { return t0 + t1 + t2; }
};

namespace detail {

inline bool boundary_accepts(const SeedBoundary& b, const Slope& s,
                             std::int64_t* count) {
    if (s.is_infinite()) return false;
    if (b.permissible) {
        if (!s.is_integer()) return false;
        *count = chain_tet_count(b.cls(), s);
        return true;
    }
    *count = lst_tet_count(b.cls(), s);
    return true;
}

// The slope assigned to a Q boundary must lie in (-inf, -2).
inline bool q_rule_ok(BoundaryClass cls, const Slope& s) {
    if (cls != BoundaryClass::Q) return true;
    return s.p() < -2 * s.q();
}

}  // namespace detail

/// Chooses the seed and cusp assignment: among all admissible plans the one
/// with the fewest tetrahedra, ties broken by seed order then by keeping the
/// first slope on boundary 1.
inline FillingPlan plan_filling(const Slope& rs, const Slope& tu) {
    if (!classify_pair(rs, tu))
        throw NotAKnotFilling("plan_filling: " + rs.str() + ", " + tu.str() +
                              " is not a knot filling");
    std::optional<FillingPlan> best;
    int best_rank = 0;
    int seed_index = 0;
    for (SeedId id : kAllSeeds) {
        SeedTriangulation seed = build_seed(id);
        for (int assignment = 0; assignment < 2; ++assignment) {
            Slope s1 = assignment == 0 ? rs : tu;
            Slope s2 = assignment == 0 ? tu : rs;
            std::int64_t t1 = 0, t2 = 0;
            if (!detail::boundary_accepts(seed.boundary1, s1, &t1)) continue;
            if (!detail::boundary_accepts(seed.boundary2, s2, &t2)) continue;
            if (!detail::q_rule_ok(seed.boundary1.cls(), s1)) continue;
            if (!detail::q_rule_ok(seed.boundary2.cls(), s2)) continue;
            FillingPlan plan{id, s1, s2, seed.core.size(), t1, t2};
            int rank = static_cast<int>(plan.total()) * 100 + seed_index * 10 + assignment;
            if (!best || rank < best_rank) {
                best = plan;
                best_rank = rank;
            }
        }
        ++seed_index;
    }
    if (!best) throw NotAKnotFilling("plan_filling: no admissible seed");
    return *best;
}

struct FillingResult {
    FillingPlan plan;
    Triangulation triangulation;
    std::array<std::int64_t, 3> actual_counts{0, 0, 0};
};

inline FillingResult execute_plan(const FillingPlan& plan) {
    SeedTriangulation seed = build_seed(plan.seed);
    FillingResult out;
    out.plan = plan;
    out.triangulation = seed.core;
    auto fill_boundary = [&](const SeedBoundary& b, const Slope& s) -> std::int64_t {
        if (b.permissible) return build_chain(out.triangulation, b.perm, s);
        return build_lst(out.triangulation, b.one_vertex, s);
    };
    out.actual_counts[0] = seed.core.size();
    out.actual_counts[1] = fill_boundary(seed.boundary1, plan.slope_for_boundary1);
    out.actual_counts[2] = fill_boundary(seed.boundary2, plan.slope_for_boundary2);
    if (out.actual_counts[0] != plan.t0 || out.actual_counts[1] != plan.t1 ||
        out.actual_counts[2] != plan.t2)
        throw Error("execute_plan: built counts disagree with the plan");
    return out;
}

inline FillingResult fill(const Slope& rs, const Slope& tu) {
    return execute_plan(plan_filling(rs, tu));
}

}  // namespace m3fill
