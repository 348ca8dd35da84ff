#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

/// The link surface of one vertex class: a triangle per incident tetrahedron
/// corner, glued along the face gluings.
struct VertexLink {
    int vertex_class = -1;
    int num_triangles = 0;
    int euler_characteristic = 0;
    bool orientable = false;
    bool closed = false;

    bool is_torus() const { return closed && orientable && euler_characteristic == 0; }
    bool is_sphere() const { return closed && euler_characteristic == 2; }
};

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace detail

/// Links of all vertex classes. Requires a valid triangulation with all faces
/// glued (the closed pseudomanifold the fillings produce).
inline std::vector<VertexLink> vertex_links(const Triangulation& tri) {
    require_valid(tri, "vertex_links");
    if (!tri.is_closed())
        throw OpenBoundary("vertex_links: triangulation has open faces");

    int n = tri.size();
    std::vector<std::array<int, 4>> vcls;
    int num_classes = vertex_classes(tri, vcls);
    std::vector<VertexLink> out(static_cast<std::size_t>(num_classes));
    for (int c = 0; c < num_classes; ++c)
        out[static_cast<std::size_t>(c)].vertex_class = c;
    if (n == 0) return out;

    // Link vertices: edge ends (t, v, w) = corner of the link triangle of
    // (t,v) toward edge {v,w}. Identified across gluings of faces containing
    // the edge.
    auto end_id = [](int t, int v, int w) { return (t * 4 + v) * 4 + w; };
    detail::Dsu ends(static_cast<std::size_t>(n * 16));
    // Link edges: triangle sides (t, v, f), f != v: side of corner (t,v) on
    // face f. Glued sides identified pairwise.
    auto side_id = [](int t, int v, int f) { return (t * 4 + v) * 4 + f; };
    detail::Dsu sides(static_cast<std::size_t>(n * 16));

    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                sides.unite(side_id(t, v, f), side_id(g->tet, g->perm[v], g->perm[f]));
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    ends.unite(end_id(t, v, w), end_id(g->tet, g->perm[v], g->perm[w]));
                }
            }
        }

    // Count cells per vertex class.
    std::vector<std::map<int, int>> vset(static_cast<std::size_t>(num_classes)),
        eset(static_cast<std::size_t>(num_classes));
    std::vector<int> faces(static_cast<std::size_t>(num_classes), 0);
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) {
            int c = vcls[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
            faces[static_cast<std::size_t>(c)]++;
            for (int w = 0; w < 4; ++w) {
                if (w == v) continue;
                vset[static_cast<std::size_t>(c)][ends.find(end_id(t, v, w))] = 1;
                eset[static_cast<std::size_t>(c)][sides.find(side_id(t, v, w))] = 1;
            }
        }

    // Orientability of each link: orient corner triangles and propagate
    // across glued sides. The corner (t,v) triangle has vertices labelled by
    // the three w's; reference orientation is the ascending cycle.
    std::vector<int> tri_sign(static_cast<std::size_t>(n * 4), 0);
    std::vector<bool> link_orientable(static_cast<std::size_t>(num_classes), true);
    auto directed_positive = [](int v, int from_w, int to_w) {
        // The reference cycle on the three labels {w1<w2<w3} of corner v.
        std::array<int, 3> ws{};
        int k = 0;
        for (int w = 0; w < 4; ++w)
            if (w != v) ws[static_cast<std::size_t>(k++)] = w;
        // cycle ws[0]->ws[1]->ws[2]->ws[0]
        for (int i = 0; i < 3; ++i)
            if (ws[static_cast<std::size_t>(i)] == from_w)
                return ws[static_cast<std::size_t>((i + 1) % 3)] == to_w;
        return false;
    };
    for (int t0 = 0; t0 < n; ++t0)
        for (int v0 = 0; v0 < 4; ++v0) {
            if (tri_sign[static_cast<std::size_t>(t0 * 4 + v0)] != 0) continue;
            tri_sign[static_cast<std::size_t>(t0 * 4 + v0)] = 1;
            std::vector<std::pair<int, int>> stack{{t0, v0}};
            while (!stack.empty()) {
                auto [t, v] = stack.back();
                stack.pop_back();
                int mysign = tri_sign[static_cast<std::size_t>(t * 4 + v)];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const auto& g = tri.gluing(t, f);
                    if (!g) continue;
                    // shared side joins ends {v,w} for the two w's on face f
                    std::array<int, 2> ws{};
                    int k = 0;
                    for (int w = 0; w < 4; ++w)
                        if (w != v && w != f) ws[static_cast<std::size_t>(k++)] = w;
                    bool mine_pos = directed_positive(v, ws[0], ws[1]);
                    bool theirs_pos = directed_positive(g->perm[v], g->perm[ws[0]],
                                                        g->perm[ws[1]]);
                    // Compatible orientations induce opposite directions.
                    int want = (mine_pos != theirs_pos) ? mysign : -mysign;
                    int& s =
                        tri_sign[static_cast<std::size_t>(g->tet * 4 + g->perm[v])];
                    if (s == 0) {
                        s = want;
                        stack.push_back({g->tet, g->perm[v]});
                    } else if (s != want) {
                        int c = vcls[static_cast<std::size_t>(t)]
                                    [static_cast<std::size_t>(v)];
                        link_orientable[static_cast<std::size_t>(c)] = false;
                    }
                }
            }
        }

    for (int c = 0; c < num_classes; ++c) {
        auto& link = out[static_cast<std::size_t>(c)];
        link.num_triangles = faces[static_cast<std::size_t>(c)];
        int V = static_cast<int>(vset[static_cast<std::size_t>(c)].size());
        int E = static_cast<int>(eset[static_cast<std::size_t>(c)].size());
        link.euler_characteristic = V - E + link.num_triangles;
        link.orientable = link_orientable[static_cast<std::size_t>(c)];
        link.closed = true;  // all faces glued, so every side is paired
    }
    return out;
}

/// Number of torus links; the filled census triangulations must have exactly
/// one, with every other vertex class a sphere.
inline int count_torus_links(const std::vector<VertexLink>& links) {
    int k = 0;
    for (const auto& l : links)
        if (l.is_torus()) ++k;
    return k;
}

}  // namespace m3fill
