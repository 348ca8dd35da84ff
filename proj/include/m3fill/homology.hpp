#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

/// Finitely generated abelian group: Z^betti + sum Z/torsion[i], with the
/// invariant factors in a divisibility chain.
struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<std::int64_t> torsion;

    bool is_free_of_rank(std::int64_t r) const {
        return betti == r && torsion.empty();
    }

    std::string str() const {
        std::string out;
        if (betti == 1) out = "Z";
        else if (betti > 1) out = "Z^" + std::to_string(betti);
        for (std::int64_t t : torsion) {
            if (!out.empty()) out += " + ";
            out += "Z/" + std::to_string(t);
        }
        if (out.empty()) out = "0";
        return out;
    }

    friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
        return a.betti == b.betti && a.torsion == b.torsion;
    }
};

namespace detail {

inline std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

/// Smith normal form over Z, destructive; returns the diagonal entries (>=0)
/// in a divisibility chain. Matrices in this project stay tiny, so least
/// absolute value pivoting is plenty.
inline std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> diag;
    std::size_t r0 = 0, c0 = 0;
    auto check = [](std::int64_t v) {
        if (v > (std::int64_t{1} << 56) || v < -(std::int64_t{1} << 56))
            throw Error("smith_diagonal: entry overflow");
        return v;
    };
    while (r0 < rows && c0 < cols) {
        // find pivot of least absolute value
        std::size_t pr = r0, pc = c0;
        std::int64_t best = 0;
        for (std::size_t i = r0; i < rows; ++i)
            for (std::size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || iabs(m[i][j]) < best)) {
                    best = iabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        bool dirty = false;
        for (std::size_t i = r0 + 1; i < rows; ++i) {
            if (m[i][c0] == 0) continue;
            std::int64_t q = m[i][c0] / m[r0][c0];
            for (std::size_t j = c0; j < cols; ++j)
                m[i][j] = check(m[i][j] - q * m[r0][j]);
            if (m[i][c0] != 0) dirty = true;
        }
        for (std::size_t j = c0 + 1; j < cols; ++j) {
            if (m[r0][j] == 0) continue;
            std::int64_t q = m[r0][j] / m[r0][c0];
            for (std::size_t i = r0; i < rows; ++i)
                m[i][j] = check(m[i][j] - q * m[i][c0]);
            if (m[r0][j] != 0) dirty = true;
        }
        if (dirty) continue;  // remainders left; pick a new pivot
        diag.push_back(iabs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce divisibility chain
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[j] % diag[i] != 0) {
                std::int64_t a = diag[i], b = diag[j];
                std::int64_t g = std::gcd(a, b);
                diag[i] = g;
                diag[j] = a / g * b;
            }
        }
    }
    return diag;
}

}  // namespace detail

/// H1 of the underlying open manifold, from the dual-graph presentation:
/// one generator per non-tree face-pairing arc, one relation per interior
/// edge class (the abelianized word of arcs crossed around the edge).
inline HomologyGroup first_homology(const Triangulation& tri) {
    require_valid(tri, "first_homology");
    if (!tri.is_closed())
        throw OpenBoundary("first_homology: triangulation has open faces");
    if (tri.empty()) return HomologyGroup{0, {}};

    // Arcs: one per glued face pair, canonical side = lexicographically least.
    std::map<std::pair<int, int>, int> arc_of_slot;  // (tet,face) -> arc id
    std::vector<std::pair<int, int>> arc_canonical;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            std::pair<int, int> me{t, f}, other{g->tet, g->perm[f]};
            if (other < me) continue;
            int id = static_cast<int>(arc_canonical.size());
            arc_canonical.push_back(me);
            arc_of_slot[me] = id;
            arc_of_slot[other] = id;
        }

    // Spanning forest of the dual graph.
    int n = tri.size();
    std::vector<bool> arc_in_tree(arc_canonical.size(), false);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int t = queue[qi];
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g || seen[static_cast<std::size_t>(g->tet)]) continue;
                seen[static_cast<std::size_t>(g->tet)] = true;
                arc_in_tree[static_cast<std::size_t>(arc_of_slot.at({t, f}))] = true;
                queue.push_back(g->tet);
            }
        }
    }

    std::vector<int> gen_of_arc(arc_canonical.size(), -1);
    int gens = 0;
    for (std::size_t a = 0; a < arc_canonical.size(); ++a)
        if (!arc_in_tree[a]) gen_of_arc[a] = gens++;

    // One relation per closed edge class.
    std::vector<std::vector<std::int64_t>> rel;
    for (const EdgeClass& ec : edge_classes(tri)) {
        if (!ec.closed) continue;
        std::vector<std::int64_t> row(static_cast<std::size_t>(gens), 0);
        for (std::size_t i = 0; i < ec.slots.size(); ++i) {
            const EdgeSlot& s = ec.slots[i];
            int exit = s.exit_face;
            if (exit < 0) throw Error("first_homology: broken fan");
            int arc = arc_of_slot.at({s.tet, exit});
            if (gen_of_arc[static_cast<std::size_t>(arc)] < 0) continue;
            bool canonical_side = arc_canonical[static_cast<std::size_t>(arc)] ==
                                  std::pair<int, int>{s.tet, exit};
            row[static_cast<std::size_t>(gen_of_arc[static_cast<std::size_t>(arc)])] +=
                canonical_side ? 1 : -1;
        }
        rel.push_back(std::move(row));
    }

    std::vector<std::int64_t> diag =
        rel.empty() ? std::vector<std::int64_t>{} : detail::smith_diagonal(std::move(rel));
    HomologyGroup h;
    std::int64_t rank_rel = 0;
    for (std::int64_t d : diag) {
        if (d == 0) continue;
        ++rank_rel;
        if (d > 1) h.torsion.push_back(d);
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    h.betti = gens - rank_rel;
    return h;
}

}  // namespace m3fill
