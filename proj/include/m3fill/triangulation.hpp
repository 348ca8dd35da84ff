#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/perm.hpp"

namespace m3fill {

/// One glued face: the partner tetrahedron and the vertex bijection from this
/// tetrahedron's labels to the partner's. Face i is the face omitting vertex i;
/// the gluing sends face f to the partner's face perm[f].
struct FaceGluing {
    int tet = -1;
    Perm4 perm;

    friend bool operator==(const FaceGluing& a, const FaceGluing& b) {
        return a.tet == b.tet && a.perm == b.perm;
    }
};

struct Tetrahedron {
    std::array<std::optional<FaceGluing>, 4> face;
    std::string label;
};

/// Identifies one face slot.
struct FaceSlot {
    int tet = -1;
    int face = -1;

    friend bool operator==(const FaceSlot& a, const FaceSlot& b) {
        return a.tet == b.tet && a.face == b.face;
    }
    friend bool operator<(const FaceSlot& a, const FaceSlot& b) {
        if (a.tet != b.tet) return a.tet < b.tet;
        return a.face < b.face;
    }
};

class Triangulation {
public:
    Triangulation() = default;

    int add_tet(std::string label = {}) {
        tets_.push_back(Tetrahedron{{}, std::move(label)});
        return static_cast<int>(tets_.size()) - 1;
    }

    int size() const { return static_cast<int>(tets_.size()); }
    bool empty() const { return tets_.empty(); }

    const Tetrahedron& tet(int i) const { return tets_[static_cast<std::size_t>(i)]; }
    Tetrahedron& tet(int i) { return tets_[static_cast<std::size_t>(i)]; }

    const std::optional<FaceGluing>& gluing(int t, int f) const {
        return tets_[static_cast<std::size_t>(t)].face[static_cast<std::size_t>(f)];
    }

    /// Glues face f of tetrahedron t to the partner determined by `perm`
    /// (this tet's labels -> partner's labels); sets both sides.
    void glue(int t, int f, int other, const Perm4& perm) {
        auto& mine = tets_[static_cast<std::size_t>(t)].face[static_cast<std::size_t>(f)];
        if (mine) throw Error("glue: face already glued");
        int of = perm[f];
        auto& theirs =
            tets_[static_cast<std::size_t>(other)].face[static_cast<std::size_t>(of)];
        if (t == other && f == of) throw Error("glue: face glued to itself");
        if (theirs) throw Error("glue: partner face already glued");
        mine = FaceGluing{other, perm};
        theirs = FaceGluing{t, perm.inverse()};
    }

    void unglue(int t, int f) {
        auto& mine = tets_[static_cast<std::size_t>(t)].face[static_cast<std::size_t>(f)];
        if (!mine) return;
        int other = mine->tet, of = mine->perm[f];
        tets_[static_cast<std::size_t>(other)].face[static_cast<std::size_t>(of)].reset();
        mine.reset();
    }

    bool is_closed() const {
        for (const auto& t : tets_)
            for (const auto& g : t.face)
                if (!g) return false;
        return true;
    }

    std::vector<FaceSlot> open_faces() const {
        std::vector<FaceSlot> out;
        for (int t = 0; t < size(); ++t)
            for (int f = 0; f < 4; ++f)
                if (!gluing(t, f)) out.push_back({t, f});
        return out;
    }

private:
    std::vector<Tetrahedron> tets_;
};

// ---------------------------------------------------------------------------
// Validity

struct Violation {
    std::string kind;  // "involution", "identity-gluing", "bad-target", "reversed-edge"
    std::string detail;
};

/// One slot of an edge class: a tetrahedron and an ordered vertex pair. The
/// ordering is aligned along the fan so every crossing maps (a,b) to (a,b).
/// exit_face is the face crossed to reach the next slot in fan order (-1 at
/// the free end of an open fan).
struct EdgeSlot {
    int tet;
    int a;
    int b;
    int exit_face = -1;
};

/// All slots around one edge, in fan order. For a closed fan the sequence is
/// cyclic (crossing out of the last slot's exit face returns to the first);
/// for an open fan the first and last slots have free entry/exit faces.
struct EdgeClass {
    std::vector<EdgeSlot> slots;
    bool closed = false;

    int degree() const { return static_cast<int>(slots.size()); }
};

namespace detail {

inline std::array<int, 2> edge_faces(int a, int b) {
    // The two faces of a tetrahedron containing edge {a,b} are those omitting
    // the other two vertices.
    std::array<int, 2> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != a && v != b) out[static_cast<std::size_t>(k++)] = v;
    return out;
}

}  // namespace detail

/// Computes all edge classes with their fans. Throws only on malformed
/// structure (bad indices); orientation-reversed edges are reported via
/// validate(), and edge_classes() marks them by throwing.
inline std::vector<EdgeClass> edge_classes(const Triangulation& tri) {
    std::vector<EdgeClass> out;
    // seen[t][edge-code], edge-code = 4*a + b with a < b
    std::vector<std::array<bool, 16>> seen(static_cast<std::size_t>(tri.size()),
                                           std::array<bool, 16>{});
    auto code = [](int a, int b) {
        if (a > b) std::swap(a, b);
        return 4 * a + b;
    };

    for (int t0 = 0; t0 < tri.size(); ++t0) {
        for (int a0 = 0; a0 < 4; ++a0) {
            for (int b0 = a0 + 1; b0 < 4; ++b0) {
                if (seen[static_cast<std::size_t>(t0)][static_cast<std::size_t>(code(a0, b0))])
                    continue;
                // Walk backwards from (t0,a0,b0) through the first face until
                // hitting an open face or returning to the start.
                EdgeSlot cur{t0, a0, b0};
                auto faces0 = detail::edge_faces(a0, b0);
                int exit_face = faces0[0];
                bool closed = false;
                {
                    int guard = 0;
                    while (true) {
                        auto g = tri.gluing(cur.tet, exit_face);
                        if (!g) break;  // open end; cur is the first slot
                        EdgeSlot nxt{g->tet, g->perm[cur.a], g->perm[cur.b]};
                        int entry = g->perm[exit_face];
                        if (nxt.tet == t0 && code(nxt.a, nxt.b) == code(a0, b0)) {
                            closed = true;
                            break;
                        }
                        auto fs = detail::edge_faces(nxt.a, nxt.b);
                        exit_face = (fs[0] == entry) ? fs[1] : fs[0];
                        cur = nxt;
                        if (++guard > 4 * tri.size() * 6)
                            throw Error("edge_classes: fan does not terminate");
                    }
                }
                // Now walk forward from cur collecting the fan.
                EdgeClass ec;
                ec.closed = closed;
                EdgeSlot first = closed ? EdgeSlot{t0, a0, b0} : cur;
                auto ffs = detail::edge_faces(first.a, first.b);
                int exit = ffs[1];
                if (!closed) {
                    // enter through the free side: exit through the face the
                    // backward walk arrived from
                    exit = (tri.gluing(first.tet, ffs[0])) ? ffs[0] : ffs[1];
                    // if both open, single-slot class; exit choice irrelevant
                }
                EdgeSlot s = first;
                int guard = 0;
                while (true) {
                    s.exit_face = tri.gluing(s.tet, exit) ? exit : -1;
                    ec.slots.push_back(s);
                    seen[static_cast<std::size_t>(s.tet)]
                        [static_cast<std::size_t>(code(s.a, s.b))] = true;
                    auto g = tri.gluing(s.tet, exit);
                    if (!g) break;
                    EdgeSlot nxt{g->tet, g->perm[s.a], g->perm[s.b], -1};
                    int entry = g->perm[exit];
                    if (nxt.tet == first.tet &&
                        code(nxt.a, nxt.b) == code(first.a, first.b)) {
                        if (!(nxt.a == first.a && nxt.b == first.b))
                            throw InvalidTriangulation(
                                "edge identified with itself in reverse");
                        break;  // closed fan complete
                    }
                    auto fs = detail::edge_faces(nxt.a, nxt.b);
                    exit = (fs[0] == entry) ? fs[1] : fs[0];
                    s = nxt;
                    if (++guard > 4 * tri.size() * 6)
                        throw Error("edge_classes: fan does not terminate");
                }
                out.push_back(std::move(ec));
            }
        }
    }
    return out;
}

/// Structural checks: gluings form an involution, no face glued to itself by
/// the identity, all targets in range, and every edge fan is coherent (no
/// edge identified with itself in reverse). Violations are data, not errors.
inline std::vector<Violation> validate(const Triangulation& tri) {
    std::vector<Violation> out;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            if (g->tet < 0 || g->tet >= tri.size()) {
                out.push_back({"bad-target",
                               "tet " + std::to_string(t) + " face " + std::to_string(f)});
                continue;
            }
            int of = g->perm[f];
            if (g->tet == t && of == f) {
                out.push_back({"identity-gluing",
                               "tet " + std::to_string(t) + " face " + std::to_string(f)});
                continue;
            }
            const auto& back = tri.gluing(g->tet, of);
            if (!back || back->tet != t || !(back->perm == g->perm.inverse())) {
                out.push_back({"involution",
                               "tet " + std::to_string(t) + " face " + std::to_string(f)});
            }
        }
    }
    if (out.empty()) {
        try {
            edge_classes(tri);
        } catch (const InvalidTriangulation& e) {
            out.push_back({"reversed-edge", e.what()});
        }
    }
    return out;
}

inline void require_valid(const Triangulation& tri, const std::string& op) {
    auto v = validate(tri);
    if (!v.empty())
        throw InvalidTriangulation(op + ": " + v.front().kind + " at " + v.front().detail);
}

// ---------------------------------------------------------------------------
// Orientability

/// True iff tetrahedron orientations +-1 exist making every gluing
/// orientation-reversing (odd permutation between same-sign tets). Fills
/// `orientation` with a consistent assignment when orientable.
inline bool orientable(const Triangulation& tri, std::vector<int>* orientation = nullptr) {
    require_valid(tri, "orientable");
    std::vector<int> sign(static_cast<std::size_t>(tri.size()), 0);
    for (int seedt = 0; seedt < tri.size(); ++seedt) {
        if (sign[static_cast<std::size_t>(seedt)] != 0) continue;
        sign[static_cast<std::size_t>(seedt)] = 1;
        std::vector<int> stack{seedt};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri.gluing(t, f);
                if (!g) continue;
                int want = (g->perm.sign() < 0) ? sign[static_cast<std::size_t>(t)]
                                                : -sign[static_cast<std::size_t>(t)];
                int& s = sign[static_cast<std::size_t>(g->tet)];
                if (s == 0) {
                    s = want;
                    stack.push_back(g->tet);
                } else if (s != want) {
                    return false;
                }
            }
        }
    }
    if (orientation) *orientation = sign;
    return true;
}

// ---------------------------------------------------------------------------
// Vertex classes

/// vertex_class[t][v] = class index; returns number of classes.
inline int vertex_classes(const Triangulation& tri,
                          std::vector<std::array<int, 4>>& cls) {
    int n = tri.size();
    std::vector<int> parent(static_cast<std::size_t>(4 * n));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) unite(4 * t + v, 4 * g->tet + g->perm[v]);
        }
    cls.assign(static_cast<std::size_t>(n), {});
    std::map<int, int> remap;
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) {
            int root = find(4 * t + v);
            auto [it, fresh] = remap.try_emplace(root, static_cast<int>(remap.size()));
            cls[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)] = it->second;
        }
    return static_cast<int>(remap.size());
}

}  // namespace m3fill
