#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>

#include "m3fill/boundary.hpp"
#include "m3fill/errors.hpp"
#include "m3fill/farey.hpp"
#include "m3fill/perm.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

namespace detail {

/// Lays one tetrahedron across a boundary edge: faces 012 and 013 of the new
/// tetrahedron cover the edge's two sides with edge 01 over it. The exposed
/// faces are T(023), replacing side a's face, and T(123), replacing side b's.
struct Layering {
    int tet;
    FaceSlot exposedA;  // (tet, face 1) = T(023)
    FaceSlot exposedB;  // (tet, face 0) = T(123)
    FaceSlot oldA, oldB;
    std::array<int, 3> mapA;  // old corner -> T label, indexed by corner value
    std::array<int, 3> mapB;
    std::array<int, 4> invA{-1, -1, -1, -1};  // corner value -> T label
    std::array<int, 4> invB{-1, -1, -1, -1};

    /// Transports a boundary side of one of the two covered faces onto the
    /// new exposed faces.
    BoundarySide transport(const BoundarySide& s) const {
        const std::array<int, 4>* inv = nullptr;
        if (s.face == oldA) inv = &invA;
        else if (s.face == oldB) inv = &invB;
        else throw Error("layering transport: side not on a covered face");
        std::array<int, 2> nv{(*inv)[static_cast<std::size_t>(s.v[0])],
                              (*inv)[static_cast<std::size_t>(s.v[1])]};
        bool onA = (nv[0] == 0 || nv[1] == 0);
        return BoundarySide{onA ? exposedA : exposedB, nv};
    }
};

inline Layering layer_over(Triangulation& tri, const BoundaryEdge& edge) {
    const BoundarySide& A = edge.sa;
    const BoundarySide& B = edge.sb;
    if (A.face == B.face) throw Error("layer_over: sides on one face");
    int f3 = third_corner(A.face.face, A.v[0], A.v[1]);
    int g3 = third_corner(B.face.face, B.v[0], B.v[1]);

    int t = tri.add_tet();
    // T(012) -> A's face: 0,1 over the edge, 2 to the third corner.
    {
        std::array<int, 4> img{};
        img[0] = A.v[0];
        img[1] = A.v[1];
        img[2] = f3;
        img[3] = A.face.face;
        tri.glue(t, 3, A.face.tet, Perm4(img[0], img[1], img[2], img[3]));
    }
    // T(013) -> B's face.
    {
        std::array<int, 4> img{};
        img[0] = B.v[0];
        img[1] = B.v[1];
        img[3] = g3;
        img[2] = B.face.face;
        tri.glue(t, 2, B.face.tet, Perm4(img[0], img[1], img[2], img[3]));
    }

    Layering lay;
    lay.tet = t;
    lay.exposedA = FaceSlot{t, 1};
    lay.exposedB = FaceSlot{t, 0};
    lay.oldA = A.face;
    lay.oldB = B.face;
    lay.invA[static_cast<std::size_t>(A.v[0])] = 0;
    lay.invA[static_cast<std::size_t>(A.v[1])] = 1;
    lay.invA[static_cast<std::size_t>(f3)] = 2;
    lay.invB[static_cast<std::size_t>(B.v[0])] = 0;
    lay.invB[static_cast<std::size_t>(B.v[1])] = 1;
    lay.invB[static_cast<std::size_t>(g3)] = 3;
    return lay;
}

/// The edge created by a layering: T(23) seen on both exposed faces.
inline BoundaryEdge layered_edge(const Layering& lay, const Slope& slope) {
    return BoundaryEdge{BoundarySide{lay.exposedA, {2, 3}},
                        BoundarySide{lay.exposedB, {2, 3}}, slope};
}

/// Book fold: glues the edge's two faces together, matching the edge sides by
/// their stored correspondence and third corner to third corner.
inline void fold_across(Triangulation& tri, const BoundaryEdge& edge) {
    const BoundarySide& A = edge.sa;
    const BoundarySide& B = edge.sb;
    if (A.face == B.face) throw Error("fold_across: sides on one face");
    int f3 = third_corner(A.face.face, A.v[0], A.v[1]);
    int g3 = third_corner(B.face.face, B.v[0], B.v[1]);
    std::array<int, 4> img{};
    img[static_cast<std::size_t>(A.v[0])] = B.v[0];
    img[static_cast<std::size_t>(A.v[1])] = B.v[1];
    img[static_cast<std::size_t>(f3)] = g3;
    img[static_cast<std::size_t>(A.face.face)] = B.face.face;
    tri.glue(A.face.tet, A.face.face, B.face.tet, Perm4(img[0], img[1], img[2], img[3]));
}

}  // namespace detail

/// Fills a one-vertex boundary with a layered solid torus along `filling`.
/// Returns the number of tetrahedra added; the boundary's two faces end up
/// glued. The boundary value is consumed (its slots become stale).
inline int build_lst(Triangulation& tri, OneVertexBoundary boundary, const Slope& filling) {
    if (filling.is_infinite()) throw InfiniteSlope("build_lst");
    FareyTriple triple = boundary.triple();

    if (triple.contains(filling)) {
        // Degenerate fold: close along the least of the other two edges,
        // producing the one-triangle spine with no new tetrahedra.
        auto others = triple.others(filling);
        Slope w = std::min(others[0], others[1]);
        detail::fold_across(tri, boundary.edge_with_slope(w));
        return 0;
    }

    FareyPath path = farey_path(triple, filling);
    int added = 0;
    for (std::size_t i = 0; i + 1 < path.steps.size(); ++i) {
        const FareyStep& st = path.steps[i];
        // Find and flip the edge carrying the leaving slope.
        int which = -1;
        for (int k = 0; k < 3; ++k)
            if (boundary.edges[static_cast<std::size_t>(k)].slope == st.leave) which = k;
        if (which < 0) throw Error("build_lst: boundary lost slope " + st.leave.str());
        detail::Layering lay =
            detail::layer_over(tri, boundary.edges[static_cast<std::size_t>(which)]);
        ++added;
        for (int k = 0; k < 3; ++k) {
            auto& e = boundary.edges[static_cast<std::size_t>(k)];
            if (k == which) {
                e = detail::layered_edge(lay, st.enter);
            } else {
                e.sa = lay.transport(e.sa);
                e.sb = lay.transport(e.sb);
                if (e.sa.face == lay.exposedB) std::swap(e.sa, e.sb);
                if (!(e.sa.face == lay.exposedA && e.sb.face == lay.exposedB))
                    throw Error("build_lst: boundary lost its torus pattern");
            }
        }
        boundary.fa = lay.exposedA;
        boundary.fb = lay.exposedB;
    }
    detail::fold_across(tri, boundary.edge_with_slope(path.steps.back().leave));
    return added;
}

namespace detail {

// Corner of `face` lying on both sides (as vertex sets).
inline int common_corner(const BoundarySide& x, const BoundarySide& y) {
    for (int v : x.v)
        if (v == y.v[0] || v == y.v[1]) return v;
    throw Error("common_corner: disjoint sides");
}

inline int side_corr(const BoundaryEdge& e, int corner) {
    if (corner == e.sa.v[0]) return e.sb.v[0];
    if (corner == e.sa.v[1]) return e.sb.v[1];
    throw Error("side_corr: corner not on side");
}

}  // namespace detail

/// Attaches the fixed two-tetrahedron cusp complex over a one-vertex
/// boundary; the new ideal vertex's link is a torus. Returns (X, Y).
inline std::pair<int, int> attach_standard_cusp(Triangulation& tri,
                                                const OneVertexBoundary& boundary) {
    for (FaceSlot fs : {boundary.fa, boundary.fb})
        if (tri.gluing(fs.tet, fs.face))
            throw OpenBoundary("attach_standard_cusp: boundary face already glued");

    int X = tri.add_tet("cusp-x");
    int Y = tri.add_tet("cusp-y");
    tri.glue(X, 3, Y, Perm4(0, 2, 1, 3));  // X(012) -> Y(021)
    tri.glue(X, 2, Y, Perm4(0, 3, 2, 1));  // X(013) -> Y(031)
    tri.glue(X, 1, Y, Perm4(0, 1, 3, 2));  // X(023) -> Y(032)

    // The cusp's free boundary has edges {X(12)~Y(12)}, {X(13)~Y(13)},
    // {X(23)~Y(23)} with crossed correspondences (X1<->Y2 etc). Search for a
    // labelling of X over fa that maps them onto the boundary's edges.
    struct CuspEdge {
        std::array<int, 2> xv, yv;  // xv[i] <-> yv[i]
    };
    static const std::array<CuspEdge, 3> cusp_edges{
        CuspEdge{{1, 2}, {2, 1}}, CuspEdge{{1, 3}, {3, 1}}, CuspEdge{{2, 3}, {3, 2}}};

    auto corr_of = [&](const BoundarySide& from, const BoundarySide& to, int corner) {
        if (corner == from.v[0]) return to.v[0];
        if (corner == from.v[1]) return to.v[1];
        throw Error("attach_standard_cusp: corner not on side");
    };

    auto corners_a = detail::face_corners(boundary.fa.face);
    static const std::array<std::array<int, 3>, 6> orders{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& ord : orders) {
        // phi: X corner (1,2,3) -> fa corner
        std::array<int, 4> phi{-1, -1, -1, -1};
        for (int i = 0; i < 3; ++i)
            phi[static_cast<std::size_t>(i + 1)] =
                corners_a[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])];
        std::array<int, 4> psi{-1, -1, -1, -1};
        bool ok = true;
        for (const CuspEdge& ce : cusp_edges) {
            std::array<int, 2> side{phi[static_cast<std::size_t>(ce.xv[0])],
                                    phi[static_cast<std::size_t>(ce.xv[1])]};
            // find the boundary edge whose fa side is this pair
            const BoundaryEdge* match = nullptr;
            for (const auto& be : boundary.edges) {
                if ((be.sa.v[0] == side[0] && be.sa.v[1] == side[1]) ||
                    (be.sa.v[0] == side[1] && be.sa.v[1] == side[0])) {
                    match = &be;
                    break;
                }
            }
            if (!match) { ok = false; break; }
            for (int i = 0; i < 2; ++i) {
                int yc = ce.yv[i];
                int img = corr_of(match->sa, match->sb,
                                  phi[static_cast<std::size_t>(ce.xv[i])]);
                if (psi[static_cast<std::size_t>(yc)] == -1)
                    psi[static_cast<std::size_t>(yc)] = img;
                else if (psi[static_cast<std::size_t>(yc)] != img) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        // bijectivity of psi on {1,2,3}
        bool used[4] = {false, false, false, false};
        for (int i = 1; i <= 3; ++i) {
            int v = psi[static_cast<std::size_t>(i)];
            if (v < 0 || used[v]) { ok = false; break; }
            used[v] = true;
        }
        if (!ok) continue;

        phi[0] = boundary.fa.face;
        psi[0] = boundary.fb.face;
        tri.glue(X, 0, boundary.fa.tet, Perm4(phi[0], phi[1], phi[2], phi[3]));
        tri.glue(Y, 0, boundary.fb.tet, Perm4(psi[0], psi[1], psi[2], psi[3]));
        return {X, Y};
    }
    throw Error("attach_standard_cusp: boundary does not match the cusp template");
}

/// Attaches the four-tetrahedron permissible cusp over a permissible
/// boundary. Returns the indices of tetrahedra A..D.
inline std::array<int, 4> attach_permissible_cusp(Triangulation& tri,
                                                  const PermissibleBoundary& pb) {
    using detail::common_corner;
    using detail::side_corr;
    for (FaceSlot fs : {pb.faceA, pb.faceB, pb.faceC, pb.faceD})
        if (tri.gluing(fs.tet, fs.face))
            throw OpenBoundary("attach_permissible_cusp: face already glued");

    // Template corner roles: A1 on a&e, A2 on a&u, A3 on e&u; B1 on b&e,
    // B2 on b&u, B3 on e&u; C1 on b&f, C2 on b&w, C3 on f&w; D1 on a&f,
    // D2 on a&w, D3 on f&w. (Sides of a,e,u at A are sa/sa/sa; of b at B is
    // sa; of e,u at B are sb; of b at C is sb; of f,w at C are sa; of a at D
    // is sb; of f,w at D are sb.)
    std::array<int, 4> phiA{-1, 0, 0, 0}, phiB{-1, 0, 0, 0}, phiC{-1, 0, 0, 0},
        phiD{-1, 0, 0, 0};
    phiA[1] = common_corner(pb.a.sa, pb.e.sa);
    phiA[2] = common_corner(pb.a.sa, pb.u.sa);
    phiA[3] = common_corner(pb.e.sa, pb.u.sa);
    phiB[1] = common_corner(pb.b.sa, pb.e.sb);
    phiB[2] = common_corner(pb.b.sa, pb.u.sb);
    phiB[3] = common_corner(pb.e.sb, pb.u.sb);
    phiC[1] = common_corner(pb.b.sb, pb.f.sa);
    phiC[2] = common_corner(pb.b.sb, pb.w.sa);
    phiC[3] = common_corner(pb.f.sa, pb.w.sa);
    phiD[1] = common_corner(pb.a.sb, pb.f.sb);
    phiD[2] = common_corner(pb.a.sb, pb.w.sb);
    phiD[3] = common_corner(pb.f.sb, pb.w.sb);

    // Template edge correspondences, transported: a: A1<->D2, A2<->D1;
    // b: B1<->C2, B2<->C1; e: A1<->B3, A3<->B1; u: A2<->B3, A3<->B2;
    // f: C1<->D3, C3<->D1; w: C2<->D3, C3<->D2.
    auto expect = [&](const BoundaryEdge& edge, int from, int to) {
        if (side_corr(edge, from) != to)
            throw Error("attach_permissible_cusp: boundary does not match template");
    };
    expect(pb.a, phiA[1], phiD[2]);
    expect(pb.a, phiA[2], phiD[1]);
    expect(pb.b, phiB[1], phiC[2]);
    expect(pb.b, phiB[2], phiC[1]);
    expect(pb.e, phiA[1], phiB[3]);
    expect(pb.e, phiA[3], phiB[1]);
    expect(pb.u, phiA[2], phiB[3]);
    expect(pb.u, phiA[3], phiB[2]);
    expect(pb.f, phiC[1], phiD[3]);
    expect(pb.f, phiC[3], phiD[1]);
    expect(pb.w, phiC[2], phiD[3]);
    expect(pb.w, phiC[3], phiD[2]);

    int base = tri.size();
    for (const char* l : {"cusp-a", "cusp-b", "cusp-c", "cusp-d"}) tri.add_tet(l);
    int A = base, B = base + 1, C = base + 2, D = base + 3;
    tri.glue(A, 3, D, Perm4(0, 2, 1, 3));
    tri.glue(A, 2, B, Perm4(0, 3, 2, 1));
    tri.glue(A, 1, B, Perm4(0, 1, 3, 2));
    tri.glue(B, 3, C, Perm4(0, 2, 1, 3));
    tri.glue(C, 2, D, Perm4(0, 3, 2, 1));
    tri.glue(C, 1, D, Perm4(0, 1, 3, 2));

    auto attach = [&](int cusp_tet, std::array<int, 4>& phi, FaceSlot fs) {
        phi[0] = fs.face;
        tri.glue(cusp_tet, 0, fs.tet, Perm4(phi[0], phi[1], phi[2], phi[3]));
    };
    attach(A, phiA, pb.faceA);
    attach(B, phiB, pb.faceB);
    attach(C, phiC, pb.faceC);
    attach(D, phiD, pb.faceD);
    return {A, B, C, D};
}

namespace detail {

/// Chain layering over one boundary edge. The covered faces drop out of the
/// boundary; the sides of the other tracked edges move onto the new
/// tetrahedron's exposed faces.
inline void chain_layer_over(Triangulation& tri, PermissibleBoundary& pb,
                             BoundaryEdge& target) {
    FaceSlot oldC = target.sa.face, oldD = target.sb.face;
    Layering lay = layer_over(tri, target);

    auto carry = [&](BoundarySide& s) {
        if (s.face == oldC || s.face == oldD) s = lay.transport(s);
    };
    for (BoundaryEdge* e : {&pb.a, &pb.b, &pb.e, &pb.u, &pb.f, &pb.w}) {
        if (e == &target) continue;
        carry(e->sa);
        carry(e->sb);
    }
    target = BoundaryEdge{BoundarySide{lay.exposedA, {2, 3}},
                          BoundarySide{lay.exposedB, {2, 3}}, target.slope};

    auto replace = [&](FaceSlot& f) {
        if (f == oldC) f = lay.exposedA;
        if (f == oldD) f = lay.exposedB;
    };
    replace(pb.faceA);
    replace(pb.faceB);
    replace(pb.faceC);
    replace(pb.faceD);
}

inline void chain_layer(Triangulation& tri, PermissibleBoundary& pb, bool over_w) {
    chain_layer_over(tri, pb, over_w ? pb.w : pb.f);
}

}  // namespace detail

/// Fills a permissible boundary with a layered chain along `filling`
/// (realizable slopes are k*alpha + beta). Returns tetrahedra added.
///
/// The column is laid down by alternating flips starting over the f edge, and
/// closed by folding across the a edge and then across the b edge. The chain
/// complexes are mirror-symmetric: this one construction realizes both k and
/// its mirror image, which give the same filled manifold. The one-tetrahedron
/// chain over a negative-diagonal boundary instead layers over a, giving the
/// realization whose interior edge has degree three (the 3-2 move target).
inline int build_chain(Triangulation& tri, PermissibleBoundary pb, const Slope& filling) {
    if (!filling.is_integer())
        throw UnrealizableSlope("build_chain: " + filling.str());
    std::int64_t layers = chain_tet_count(pb.cls, filling);

    if (pb.sign < 0 && layers == 1) {
        detail::chain_layer_over(tri, pb, pb.a);
        detail::fold_across(tri, pb.a);
        auto cb = detail::face_corners(pb.faceB.face);
        auto cc = detail::face_corners(pb.faceC.face);
        std::array<int, 4> img{-1, -1, -1, -1};
        for (int i = 0; i < 3; ++i)
            img[static_cast<std::size_t>(cb[static_cast<std::size_t>(i)])] =
                cc[static_cast<std::size_t>(2 - i)];
        img[static_cast<std::size_t>(pb.faceB.face)] = pb.faceC.face;
        tri.glue(pb.faceB.tet, pb.faceB.face, pb.faceC.tet,
                 Perm4(img[0], img[1], img[2], img[3]));
        return 1;
    }

    bool over_w = false;
    for (std::int64_t i = 0; i < layers; ++i) {
        detail::chain_layer(tri, pb, over_w);
        over_w = !over_w;  // next flip consumes the older column edge
    }
    detail::fold_across(tri, pb.a);
    detail::fold_across(tri, pb.b);
    return static_cast<int>(layers);
}

}  // namespace m3fill
