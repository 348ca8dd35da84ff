#include <catch2/catch_amalgamated.hpp>

#include "m3fill/gluing_io.hpp"
#include "m3fill/homology.hpp"
#include "m3fill/isosig.hpp"
#include "m3fill/layered.hpp"
#include "m3fill/seeds.hpp"
#include "m3fill/vertex_link.hpp"
#include "oracles.hpp"

using namespace m3fill;

static const char* kSixTetTable =
    "tet | 012 | 013 | 023 | 123\n"
    "0 | 1(210) | 1(031) | 2(123) | 4(132)\n"
    "1 | 0(210) | 0(031) | 3(123) | 5(132)\n"
    "2 | 3(021) | 3(031) | 3(032) | 0(023)\n"
    "3 | 2(021) | 2(031) | 2(032) | 1(023)\n"
    "4 | 5(021) | 5(031) | 5(032) | 0(132)\n"
    "5 | 4(021) | 4(031) | 4(032) | 1(132)\n";

static Triangulation closed_seed(const SeedTriangulation& seed) {
    Triangulation t = seed.core;
    for (const SeedBoundary* b : {&seed.boundary1, &seed.boundary2}) {
        if (b->permissible)
            attach_permissible_cusp(t, b->perm);
        else
            attach_standard_cusp(t, b->one_vertex);
    }
    return t;
}

static void check_is_unfilled_manifold(const Triangulation& t) {
    CHECK(validate(t).empty());
    CHECK(t.is_closed());
    CHECK(orientable(t));
    auto links = vertex_links(t);
    int tori = 0;
    for (const auto& l : links)
        if (l.is_torus()) ++tori;
    CHECK(tori == 3);
    CHECK(static_cast<int>(links.size()) == 3);
    CHECK(first_homology(t).is_free_of_rank(3));
}

TEST_CASE("cusp templates stand alone") {
    Triangulation sc = standard_cusp();
    CHECK(validate(sc).empty());
    CHECK(sc.open_faces().size() == 2);
    Triangulation pc = permissible_cusp();
    CHECK(validate(pc).empty());
    CHECK(pc.open_faces().size() == 4);
}

TEST_CASE("T1 with cusps reproduces the hand-entered table") {
    SeedTriangulation seed = build_seed(SeedId::T1);
    CHECK(seed.core.size() == 2);
    CHECK(validate(seed.core).empty());
    Triangulation t = closed_seed(seed);
    REQUIRE(t.size() == 6);
    check_is_unfilled_manifold(t);
    CHECK(iso_signature(t) == iso_signature(import_gluing_table(kSixTetTable)));
}

TEST_CASE("T2 and T2p close up to the chain-link complement") {
    SeedTriangulation seed = build_seed(SeedId::T2);
    CHECK(seed.core.size() == 2);
    Triangulation t = closed_seed(seed);
    REQUIRE(t.size() == 6);
    check_is_unfilled_manifold(t);

    SeedTriangulation swapped = build_seed(SeedId::T2p);
    CHECK(swapped.boundary1.cls() == BoundaryClass::P);
    CHECK(swapped.boundary2.cls() == BoundaryClass::Q);
    CHECK(iso_signature(swapped.core) == iso_signature(seed.core));
    check_is_unfilled_manifold(closed_seed(swapped));
}

TEST_CASE("layered solid torus fills of T1") {
    SECTION("K3_1: fillings -1/2 and -3/2, three tetrahedra") {
        SeedTriangulation seed = build_seed(SeedId::T1);
        Triangulation t = seed.core;
        int n1 = build_lst(t, seed.boundary1.one_vertex, make_slope(-1, 2));
        int n2 = build_lst(t, seed.boundary2.one_vertex, make_slope(-3, 2));
        CHECK(n1 == 1);
        CHECK(n2 == 0);
        REQUIRE(t.is_closed());
        CHECK(validate(t).empty());
        CHECK(orientable(t));
        CHECK(t.size() == 3);
        auto links = vertex_links(t);
        int tori = 0;
        for (const auto& l : links) {
            if (l.is_torus()) ++tori;
            else CHECK(l.is_sphere());
        }
        CHECK(tori == 1);
        CHECK(first_homology(t).is_free_of_rank(1));
    }
    SECTION("added tetrahedra match the closed form") {
        for (auto [p, q] : std::vector<std::pair<int, int>>{
                 {-1, 2}, {-3, 2}, {-5, 2}, {-7, 4}, {5, 1}, {7, 3}, {-9, 5}}) {
            SeedTriangulation seed = build_seed(SeedId::T1);
            Triangulation t = seed.core;
            int n = build_lst(t, seed.boundary1.one_vertex, make_slope(p, q));
            CHECK(n == lst_tet_count(BoundaryClass::P, make_slope(p, q)));
            attach_standard_cusp(t, seed.boundary2.one_vertex);
            CHECK(validate(t).empty());
            REQUIRE(t.is_closed());
            CHECK(orientable(t));
            CHECK(first_homology(t).is_free_of_rank(2));
        }
    }
}

TEST_CASE("linking-sign calibration and homology battery over T1 fills") {
    // (5,1)+(5,1) has torsion Z/4 with linking-sign product +1 and Z/6 with -1.
    auto fill_t1 = [&](Slope s1, Slope s2) {
        SeedTriangulation seed = build_seed(SeedId::T1);
        Triangulation t = seed.core;
        build_lst(t, seed.boundary1.one_vertex, s1);
        build_lst(t, seed.boundary2.one_vertex, s2);
        REQUIRE(validate(t).empty());
        REQUIRE(t.is_closed());
        return first_homology(t);
    };
    HomologyGroup probe = fill_t1(make_slope(5, 1), make_slope(5, 1));
    INFO("probe torsion for (5,1),(5,1): " << probe.str());
    int sigma = 0;
    if (probe == oracles::expected_filled_h1(make_slope(5, 1), make_slope(5, 1), +1))
        sigma = +1;
    if (probe == oracles::expected_filled_h1(make_slope(5, 1), make_slope(5, 1), -1))
        sigma = -1;
    REQUIRE(sigma != 0);

    for (auto [a, b] : std::vector<std::pair<Slope, Slope>>{
             {make_slope(5, 1), make_slope(7, 1)},
             {make_slope(5, 2), make_slope(7, 2)},
             {make_slope(-7, 2), make_slope(9, 4)},
             {make_slope(3, 4), make_slope(5, 3)},
             {make_slope(-9, 2), make_slope(-7, 3)},
             {make_slope(11, 3), make_slope(4, 1)}}) {
        INFO("fill " << a.str() << " " << b.str());
        CHECK(fill_t1(a, b) == oracles::expected_filled_h1(a, b, sigma));
    }
}
