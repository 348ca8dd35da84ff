#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "m3fill/farey.hpp"
#include "m3fill/slope.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

/// One side of a boundary edge: an open face and an ordered pair of that
/// tetrahedron's vertex labels.
struct BoundarySide {
    FaceSlot face;
    std::array<int, 2> v;
};

/// An edge of a boundary surface: two sides identified vertexwise
/// (sa.v[i] <-> sb.v[i]) carrying the slope of the edge in the cusp framing.
struct BoundaryEdge {
    BoundarySide sa;
    BoundarySide sb;
    Slope slope;
};

/// A once-punctured torus boundary: two open faces whose three edges form a
/// Farey triple of slopes. Filled by layered solid tori.
struct OneVertexBoundary {
    BoundaryClass cls = BoundaryClass::P;
    FaceSlot fa, fb;
    std::array<BoundaryEdge, 3> edges;  // each with sa on fa, sb on fb

    FareyTriple triple() const {
        return FareyTriple(edges[0].slope, edges[1].slope, edges[2].slope);
    }

    const BoundaryEdge& edge_with_slope(const Slope& s) const {
        for (const auto& e : edges)
            if (e.slope == s) return e;
        throw Error("boundary has no edge of slope " + s.str());
    }
};

/// A permissible two-vertex torus boundary: four open faces in the cusp
/// template roles. Edges a (A-D), b (B-C), e/u (A-B), f/w (C-D); layering
/// happens over the column edges f and w. Filled by layered chains along
/// slopes k*alpha + beta.
struct PermissibleBoundary {
    BoundaryClass cls = BoundaryClass::Vhat;
    FaceSlot faceA, faceB, faceC, faceD;
    BoundaryEdge a;  // sa on A, sb on D
    BoundaryEdge b;  // sa on B, sb on C
    BoundaryEdge e;  // sa on A, sb on B
    BoundaryEdge u;  // sa on A, sb on B
    BoundaryEdge f;  // sa on C, sb on D
    BoundaryEdge w;  // sa on C, sb on D
    Slope alpha{1, 0};
    Slope beta{1, 1};
    int sign = -1;
};

namespace detail {

inline std::array<int, 3> face_corners(int face) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != face) out[static_cast<std::size_t>(k++)] = v;
    return out;
}

inline int third_corner(int face, int x, int y) {
    for (int v = 0; v < 4; ++v)
        if (v != face && v != x && v != y) return v;
    throw Error("third_corner: degenerate side");
}

}  // namespace detail

}  // namespace m3fill
