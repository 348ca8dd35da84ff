#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/perm.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

namespace detail {

// Canonical encoding of the component containing `start`, for one choice of
// start tetrahedron and start labelling: breadth-first relabelling where every
// tree gluing becomes the identity permutation, serialized face by face.
inline std::vector<int> canonical_encoding(const Triangulation& tri, int start,
                                           const Perm4& rho) {
    int n = tri.size();
    std::vector<int> canon_of(static_cast<std::size_t>(n), -1);
    std::vector<int> orig_of(static_cast<std::size_t>(n), -1);
    std::vector<Perm4> mu(static_cast<std::size_t>(n));  // original -> canonical labels

    canon_of[static_cast<std::size_t>(start)] = 0;
    orig_of[0] = start;
    mu[static_cast<std::size_t>(start)] = rho;
    int assigned = 1;

    std::vector<int> enc;
    enc.reserve(static_cast<std::size_t>(n) * 8);
    for (int ci = 0; ci < assigned; ++ci) {
        int t = orig_of[static_cast<std::size_t>(ci)];
        const Perm4 mu_t = mu[static_cast<std::size_t>(t)];
        const Perm4 mu_t_inv = mu_t.inverse();
        for (int cf = 0; cf < 4; ++cf) {
            int f = mu_t_inv[cf];
            const auto& g = tri.gluing(t, f);
            if (!g) {
                enc.push_back(-1);
                enc.push_back(-1);
                continue;
            }
            int u = g->tet;
            if (canon_of[static_cast<std::size_t>(u)] < 0) {
                canon_of[static_cast<std::size_t>(u)] = assigned;
                orig_of[static_cast<std::size_t>(assigned)] = u;
                // choose the new labelling so this gluing reads as identity
                mu[static_cast<std::size_t>(u)] = mu_t.of(g->perm.inverse());
                ++assigned;
            }
            Perm4 canon_perm =
                mu[static_cast<std::size_t>(u)].of(g->perm).of(mu_t_inv);
            enc.push_back(canon_of[static_cast<std::size_t>(u)]);
            enc.push_back(canon_perm.index());
        }
    }
    return enc;
}

}  // namespace detail

/// Deterministic string equal for exactly the triangulations related by
/// relabelling tetrahedra and vertices: per connected component, the
/// lexicographically least canonical encoding over all (start tetrahedron,
/// start labelling) pairs; component strings sorted and joined.
inline std::string iso_signature(const Triangulation& tri) {
    require_valid(tri, "iso_signature");
    if (tri.empty()) return "sig:empty";

    std::vector<int> comp(static_cast<std::size_t>(tri.size()), -1);
    int ncomp = 0;
    for (int seed = 0; seed < tri.size(); ++seed) {
        if (comp[static_cast<std::size_t>(seed)] >= 0) continue;
        comp[static_cast<std::size_t>(seed)] = ncomp;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (g && comp[static_cast<std::size_t>(g->tet)] < 0) {
                    comp[static_cast<std::size_t>(g->tet)] = ncomp;
                    stack.push_back(g->tet);
                }
            }
        }
        ++ncomp;
    }

    std::vector<std::string> parts;
    for (int c = 0; c < ncomp; ++c) {
        std::optional<std::vector<int>> best;
        int csize = 0;
        for (int start = 0; start < tri.size(); ++start) {
            if (comp[static_cast<std::size_t>(start)] != c) continue;
            ++csize;
            for (int pi = 0; pi < 24; ++pi) {
                auto enc = detail::canonical_encoding(tri, start, Perm4::from_index(pi));
                if (!best || enc < *best) best = std::move(enc);
            }
        }
        std::string part = std::to_string(csize);
        for (int v : *best) {
            part += ".";
            part += (v == -1) ? "b" : std::to_string(v);
        }
        parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "sig:";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "+";
        out += parts[i];
    }
    return out;
}

}  // namespace m3fill
