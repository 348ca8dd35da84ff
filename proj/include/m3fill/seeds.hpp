#pragma once

#include <array>
#include <optional>
#include <string>

#include "m3fill/boundary.hpp"
#include "m3fill/errors.hpp"
#include "m3fill/farey.hpp"
#include "m3fill/perm.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

enum class SeedId { T1, T2, T2p, T3, T4hat, T5hat };

inline std::string to_string(SeedId id) {
    switch (id) {
        case SeedId::T1: return "T1";
        case SeedId::T2: return "T2";
        case SeedId::T2p: return "T2p";
        case SeedId::T3: return "T3";
        case SeedId::T4hat: return "T4h";
        case SeedId::T5hat: return "T5h";
    }
    return "?";
}

inline std::optional<SeedId> parse_seed_id(const std::string& s) {
    if (s == "T1") return SeedId::T1;
    if (s == "T2") return SeedId::T2;
    if (s == "T2p") return SeedId::T2p;
    if (s == "T3") return SeedId::T3;
    if (s == "T4h" || s == "T4hat") return SeedId::T4hat;
    if (s == "T5h" || s == "T5hat") return SeedId::T5hat;
    return std::nullopt;
}

constexpr std::array<SeedId, 6> kAllSeeds{SeedId::T1,   SeedId::T2,    SeedId::T2p,
                                          SeedId::T3,   SeedId::T4hat, SeedId::T5hat};

/// One filling boundary of a seed: either a once-punctured torus (layered
/// solid torus machinery) or a permissible boundary (layered chain).
struct SeedBoundary {
    bool permissible = false;
    OneVertexBoundary one_vertex;
    PermissibleBoundary perm;

    BoundaryClass cls() const { return permissible ? perm.cls : one_vertex.cls; }
};

struct SeedTriangulation {
    SeedId id = SeedId::T1;
    Triangulation core;
    SeedBoundary boundary1;
    SeedBoundary boundary2;
};

/// The fixed two-tetrahedron cusp complex with free faces X(123), Y(123).
inline Triangulation standard_cusp() {
    Triangulation t;
    t.add_tet("cusp-x");
    t.add_tet("cusp-y");
    t.glue(0, 3, 1, Perm4(0, 2, 1, 3));  // X(012) -> Y(021)
    t.glue(0, 2, 1, Perm4(0, 3, 2, 1));  // X(013) -> Y(031)
    t.glue(0, 1, 1, Perm4(0, 1, 3, 2));  // X(023) -> Y(032)
    return t;
}

/// The fixed four-tetrahedron cone over a permissible boundary, free faces
/// A(123)..D(123); tetrahedra in order A,B,C,D.
inline Triangulation permissible_cusp() {
    Triangulation t;
    for (const char* l : {"cusp-a", "cusp-b", "cusp-c", "cusp-d"}) t.add_tet(l);
    t.glue(0, 3, 3, Perm4(0, 2, 1, 3));  // A(012) -> D(021)
    t.glue(0, 2, 1, Perm4(0, 3, 2, 1));  // A(013) -> B(031)
    t.glue(0, 1, 1, Perm4(0, 1, 3, 2));  // A(023) -> B(032)
    t.glue(1, 3, 2, Perm4(0, 2, 1, 3));  // B(012) -> C(021)
    t.glue(2, 2, 3, Perm4(0, 3, 2, 1));  // C(013) -> D(031)
    t.glue(2, 1, 3, Perm4(0, 1, 3, 2));  // C(023) -> D(032)
    return t;
}

namespace detail {

// Compact form for a one-vertex boundary: faces plus three edges, each as
// (side on fa) <-> (side on fb) with aligned vertex order and a slope.
struct OvEdgeSpec {
    int a0, a1, b0, b1;
    std::int64_t p, q;
};
struct OvSpec {
    BoundaryClass cls;
    int tet_a, face_a, tet_b, face_b;
    std::array<OvEdgeSpec, 3> edges;
};

inline OneVertexBoundary make_one_vertex(const OvSpec& s) {
    OneVertexBoundary b;
    b.cls = s.cls;
    b.fa = FaceSlot{s.tet_a, s.face_a};
    b.fb = FaceSlot{s.tet_b, s.face_b};
    for (int i = 0; i < 3; ++i) {
        const auto& e = s.edges[static_cast<std::size_t>(i)];
        b.edges[static_cast<std::size_t>(i)] =
            BoundaryEdge{BoundarySide{b.fa, {e.a0, e.a1}},
                         BoundarySide{b.fb, {e.b0, e.b1}}, Slope(e.p, e.q)};
    }
    return b;
}

// Permissible boundary from the cusp-template attachment maps: phi[X][i] is
// the core-face corner carrying corner i of cusp tetrahedron X (A..D).
struct PermSpec {
    BoundaryClass cls;
    std::array<FaceSlot, 4> faces;               // A, B, C, D
    std::array<std::array<int, 4>, 4> phi;       // phi[X][0] unused
};

inline PermissibleBoundary make_permissible(const PermSpec& s) {
    PermissibleBoundary pb;
    pb.cls = s.cls;
    ChainSlopes cs = class_chain_slopes(s.cls);
    pb.alpha = cs.alpha;
    pb.beta = cs.beta;
    pb.sign = cs.sign;
    pb.faceA = s.faces[0];
    pb.faceB = s.faces[1];
    pb.faceC = s.faces[2];
    pb.faceD = s.faces[3];
    auto mk = [&](int X, int x0, int x1, int Y, int y0, int y1) {
        return BoundaryEdge{
            BoundarySide{s.faces[static_cast<std::size_t>(X)],
                         {s.phi[static_cast<std::size_t>(X)][static_cast<std::size_t>(x0)],
                          s.phi[static_cast<std::size_t>(X)][static_cast<std::size_t>(x1)]}},
            BoundarySide{s.faces[static_cast<std::size_t>(Y)],
                         {s.phi[static_cast<std::size_t>(Y)][static_cast<std::size_t>(y0)],
                          s.phi[static_cast<std::size_t>(Y)][static_cast<std::size_t>(y1)]}},
            Slope(1, 0)};
    };
    pb.a = mk(0, 1, 2, 3, 2, 1);
    pb.b = mk(1, 1, 2, 2, 2, 1);
    pb.e = mk(0, 1, 3, 1, 3, 1);
    pb.u = mk(0, 2, 3, 1, 3, 2);
    pb.f = mk(2, 1, 3, 3, 3, 1);
    pb.w = mk(2, 2, 3, 3, 3, 2);
    return pb;
}

}  // namespace detail

namespace detail {

inline Triangulation t1_core() {
    Triangulation t;
    t.add_tet();
    t.add_tet();
    t.glue(0, 3, 1, Perm4(2, 1, 0, 3));  // 0(012) -> 1(210)
    t.glue(0, 2, 1, Perm4(0, 3, 2, 1));  // 0(013) -> 1(031)
    return t;
}

inline Triangulation t2_core() {
    Triangulation t;
    t.add_tet();
    t.add_tet();
    t.glue(0, 3, 1, Perm4(1, 0, 2, 3));  // 0(012) -> 1(102)
    t.glue(0, 2, 1, Perm4(3, 1, 2, 0));  // 0(013) -> 1(310)
    return t;
}

inline Triangulation t3_core() {
    Triangulation t;
    for (int i = 0; i < 5; ++i) t.add_tet();
    t.glue(0, 3, 1, Perm4(0, 2, 1, 3));  // 0(012) -> 1(021)
    t.glue(0, 2, 2, Perm4(0, 2, 1, 3));  // 0(013) -> 2(023)
    t.glue(0, 1, 3, Perm4(2, 1, 0, 3));  // 0(023) -> 3(203)
    t.glue(1, 2, 2, Perm4(1, 3, 0, 2));  // 1(013) -> 2(132)
    t.glue(1, 1, 4, Perm4(2, 1, 0, 3));  // 1(023) -> 4(203)
    t.glue(2, 3, 3, Perm4(1, 3, 0, 2));  // 2(012) -> 3(130)
    t.glue(2, 2, 4, Perm4(3, 1, 2, 0));  // 2(013) -> 4(310)
    t.glue(3, 3, 4, Perm4(0, 2, 1, 3));  // 3(012) -> 4(021)
    return t;
}

inline Triangulation t4_core() {
    Triangulation t;
    t.add_tet();
    t.add_tet();
    t.glue(0, 3, 1, Perm4(0, 2, 1, 3));  // 0(012) -> 1(021)
    return t;
}

inline Triangulation t5_core() {
    Triangulation t;
    t.add_tet();
    t.add_tet();
    t.glue(0, 1, 1, Perm4(3, 1, 2, 0));  // 0(023) -> 1(320)
    return t;
}

}  // namespace detail

inline SeedTriangulation build_seed(SeedId id) {
    using detail::OvSpec;
    SeedTriangulation seed;
    seed.id = id;
    switch (id) {
        case SeedId::T1: {
            seed.core = detail::t1_core();
            seed.boundary1.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::P, 0, 1, 1, 1,
                {{{0, 3, 3, 0, 1, 0}, {0, 2, 2, 0, -1, 1}, {2, 3, 3, 2, -2, 1}}}});
            seed.boundary2.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::P, 0, 0, 1, 0,
                {{{1, 2, 2, 1, 1, 0}, {1, 3, 3, 1, -1, 1}, {2, 3, 3, 2, -2, 1}}}});
            return seed;
        }
        case SeedId::T2:
        case SeedId::T2p: {
            seed.core = detail::t2_core();
            SeedBoundary q, p;
            q.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::Q, 0, 1, 1, 1,
                {{{0, 3, 3, 0, -3, 1}, {0, 2, 2, 0, 1, 0}, {2, 3, 3, 2, -2, 1}}}});
            p.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::P, 0, 0, 1, 0,
                {{{1, 2, 2, 1, 1, 0}, {1, 3, 3, 1, -1, 1}, {2, 3, 3, 2, -2, 1}}}});
            // T2 fills Q through cusp 1; T2p is the cusp exchange.
            seed.boundary1 = (id == SeedId::T2) ? q : p;
            seed.boundary2 = (id == SeedId::T2) ? p : q;
            return seed;
        }
        case SeedId::T3: {
            seed.core = detail::t3_core();
            seed.boundary1.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::R, 3, 0, 4, 0,
                {{{1, 2, 2, 1, 1, 1}, {1, 3, 3, 1, 1, 0}, {2, 3, 3, 2, 0, 1}}}});
            seed.boundary2.one_vertex = detail::make_one_vertex(OvSpec{
                BoundaryClass::R, 0, 0, 1, 0,
                {{{1, 2, 2, 1, 1, 1}, {1, 3, 3, 1, 1, 0}, {2, 3, 3, 2, 0, 1}}}});
            return seed;
        }
        case SeedId::T4hat: {
            seed.core = detail::t4_core();
            // alpha runs along edge 0(03), beta along the 0(02)+0(01) pair.
            seed.boundary1.permissible = true;
            seed.boundary1.perm = detail::make_permissible(detail::PermSpec{
                BoundaryClass::Vhat,
                {FaceSlot{0, 1}, FaceSlot{1, 2}, FaceSlot{0, 2}, FaceSlot{1, 1}},
                {{{-1, 3, 0, 2}, {-1, 3, 1, 0}, {-1, 3, 1, 0}, {-1, 3, 0, 2}}}});
            seed.boundary2.one_vertex = detail::make_one_vertex(detail::OvSpec{
                BoundaryClass::R, 0, 0, 1, 0,
                {{{1, 2, 2, 1, 1, 1}, {1, 3, 3, 1, 1, 0}, {2, 3, 3, 2, 0, 1}}}});
            return seed;
        }
        case SeedId::T5hat: {
            seed.core = detail::t5_core();
            seed.boundary1.permissible = true;
            seed.boundary1.perm = detail::make_permissible(detail::PermSpec{
                BoundaryClass::Uhat,
                {FaceSlot{1, 3}, FaceSlot{1, 2}, FaceSlot{0, 2}, FaceSlot{0, 3}},
                {{{-1, 2, 0, 1}, {-1, 3, 1, 0}, {-1, 3, 1, 0}, {-1, 2, 0, 1}}}});
            seed.boundary2.one_vertex = detail::make_one_vertex(detail::OvSpec{
                BoundaryClass::Rp, 0, 0, 1, 0,
                {{{1, 2, 2, 1, -1, 1}, {1, 3, 3, 1, 1, 0}, {2, 3, 3, 2, 0, 1}}}});
            return seed;
        }
    }
    throw Error("build_seed: unknown seed");
}

}  // namespace m3fill
