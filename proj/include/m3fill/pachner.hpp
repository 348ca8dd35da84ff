#pragma once

#include <array>
#include <map>
#include <vector>

#include "m3fill/errors.hpp"
#include "m3fill/perm.hpp"
#include "m3fill/triangulation.hpp"

namespace m3fill {

inline std::vector<int> degree_three_edges(const Triangulation& tri) {
    std::vector<int> out;
    auto ecs = edge_classes(tri);
    for (std::size_t i = 0; i < ecs.size(); ++i) {
        const auto& ec = ecs[i];
        if (!ec.closed || ec.degree() != 3) continue;
        if (ec.slots[0].tet == ec.slots[1].tet || ec.slots[0].tet == ec.slots[2].tet ||
            ec.slots[1].tet == ec.slots[2].tet)
            continue;
        out.push_back(static_cast<int>(i));
    }
    return out;
}

/// Replaces the three tetrahedra around a degree-3 edge by two sharing the
/// equatorial face. `edge` indexes into edge_classes(tri).
inline Triangulation pachner_32(const Triangulation& tri, int edge) {
    require_valid(tri, "pachner_32");
    auto ecs = edge_classes(tri);
    if (edge < 0 || edge >= static_cast<int>(ecs.size()))
        throw Error("pachner_32: no such edge class");
    const EdgeClass& ec = ecs[static_cast<std::size_t>(edge)];
    if (!ec.closed || ec.degree() != 3)
        throw EdgeNotDegreeThree("pachner_32: edge class has degree " +
                                 std::to_string(ec.degree()) +
                                 (ec.closed ? "" : " (open)"));
    std::array<int, 3> T{ec.slots[0].tet, ec.slots[1].tet, ec.slots[2].tet};
    if (T[0] == T[1] || T[0] == T[2] || T[1] == T[2])
        throw SharedTetrahedron("pachner_32: edge meets a tetrahedron twice");

    // Roles per old tetrahedron: edge ends A=3(+apex of NA) / B, equator
    // E1,E2,E3 = labels 0,1,2 of the new tetrahedra. Tet i has equator
    // vertices E_i (entry side) and E_{i+1} (exit side), with E-index mod 3.
    // role[i][v] in {0,1,2} = equator label, 4 = A-end, 5 = B-end.
    std::array<std::array<int, 4>, 3> role{};
    for (int i = 0; i < 3; ++i) {
        const EdgeSlot& s = ec.slots[static_cast<std::size_t>(i)];
        int exit = s.exit_face;
        int shared = 6 - s.a - s.b - exit;  // complement vertex on the exit face
        role[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.a)] = 4;
        role[static_cast<std::size_t>(i)][static_cast<std::size_t>(s.b)] = 5;
        role[static_cast<std::size_t>(i)][static_cast<std::size_t>(shared)] = (i + 1) % 3;
        role[static_cast<std::size_t>(i)][static_cast<std::size_t>(exit)] = i;
    }
    // Consistency across the fan: the shared equator vertex must agree.
    for (int i = 0; i < 3; ++i) {
        const EdgeSlot& s = ec.slots[static_cast<std::size_t>(i)];
        const auto& g = tri.gluing(s.tet, s.exit_face);
        int j = (i + 1) % 3;
        for (int v = 0; v < 4; ++v) {
            if (v == s.exit_face) continue;
            int rv = role[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            int rw = role[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(g->perm[v])];
            bool ok = (rv == 4 && rw == 4) || (rv == 5 && rw == 5) ||
                      (rv == rw && rv < 3);
            if (!ok) throw Error("pachner_32: fan does not close to a bipyramid");
        }
    }

    // New triangulation: copy the other tetrahedra, then NA (apex A) and NB.
    Triangulation out;
    std::vector<int> remap(static_cast<std::size_t>(tri.size()), -1);
    for (int t = 0; t < tri.size(); ++t) {
        if (t == T[0] || t == T[1] || t == T[2]) continue;
        remap[static_cast<std::size_t>(t)] = out.add_tet(tri.tet(t).label);
    }
    int NA = out.add_tet("pachner-a");
    int NB = out.add_tet("pachner-b");

    // Slot map: old (tet,face) -> (new tet, full vertex perm old->new).
    std::map<std::pair<int, int>, std::pair<int, Perm4>> slot_map;
    for (int t = 0; t < tri.size(); ++t) {
        if (remap[static_cast<std::size_t>(t)] < 0) continue;
        for (int f = 0; f < 4; ++f)
            slot_map[{t, f}] = {remap[static_cast<std::size_t>(t)], Perm4()};
    }
    for (int i = 0; i < 3; ++i) {
        const EdgeSlot& s = ec.slots[static_cast<std::size_t>(i)];
        // Face omitting the A-end holds {B, E_i, E_{i+1}} and lands on NB;
        // face omitting the B-end lands on NA. Apex label is 3.
        std::array<int, 4> img{};
        for (int v = 0; v < 4; ++v) {
            int r = role[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            img[static_cast<std::size_t>(v)] = (r >= 4) ? 3 : r;
        }
        // For the face omitting an edge end the other end is not present, so
        // the map is a bijection of the remaining labels with the omitted
        // vertex sent to the missing equator label.
        auto patched = [&](int omit) {
            std::array<int, 4> m = img;
            bool used[4] = {false, false, false, false};
            for (int v = 0; v < 4; ++v)
                if (v != omit) used[m[static_cast<std::size_t>(v)]] = true;
            for (int k = 0; k < 4; ++k)
                if (!used[k]) m[static_cast<std::size_t>(omit)] = k;
            return Perm4(m[0], m[1], m[2], m[3]);
        };
        slot_map[{s.tet, s.a}] = {NB, patched(s.a)};
        slot_map[{s.tet, s.b}] = {NA, patched(s.b)};
    }

    // Interior face of the bipyramid.
    out.glue(NA, 3, NB, Perm4());

    // Re-establish all old gluings that did not run around the removed edge.
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            std::pair<int, int> me{t, f}, other{g->tet, g->perm[f]};
            if (other < me) continue;
            auto it_me = slot_map.find(me);
            auto it_ot = slot_map.find(other);
            if (it_me == slot_map.end() || it_ot == slot_map.end()) continue;  // fan face
            const auto& [nt, np] = it_me->second;
            const auto& [ot, op] = it_ot->second;
            Perm4 perm = op.of(g->perm).of(np.inverse());
            out.glue(nt, np[f], ot, perm);
        }
    }
    require_valid(out, "pachner_32 result");
    return out;
}

}  // namespace m3fill
