#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "m3fill/gluing_io.hpp"
#include "m3fill/homology.hpp"
#include "m3fill/isosig.hpp"
#include "m3fill/pachner.hpp"
#include "m3fill/triangulation.hpp"
#include "m3fill/vertex_link.hpp"
#include "oracles.hpp"

using namespace m3fill;

// The 6-tetrahedron triangulation of the chain-link complement, entered by
// hand; the seed machinery must reproduce it.
static const char* kSixTetTable =
    "tet | 012 | 013 | 023 | 123\n"
    "0 | 1(210) | 1(031) | 2(123) | 4(132)\n"
    "1 | 0(210) | 0(031) | 3(123) | 5(132)\n"
    "2 | 3(021) | 3(031) | 3(032) | 0(023)\n"
    "3 | 2(021) | 2(031) | 2(032) | 1(023)\n"
    "4 | 5(021) | 5(031) | 5(032) | 0(132)\n"
    "5 | 4(021) | 4(031) | 4(032) | 1(132)\n";

TEST_CASE("perm basics") {
    Perm4 id;
    CHECK(id.is_identity());
    CHECK(id.sign() == 1);
    Perm4 swap01(1, 0, 2, 3);
    CHECK(swap01.sign() == -1);
    CHECK(swap01.of(swap01).is_identity());
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::from_index(i);
        CHECK(p.index() == i);
        CHECK(p.of(p.inverse()).is_identity());
    }
    Perm4 fp = face_perm(3, {2, 1, 0});  // face 012 -> images (2,1,0)
    CHECK(fp[0] == 2);
    CHECK(fp[1] == 1);
    CHECK(fp[2] == 0);
    CHECK(fp[3] == 3);
}

TEST_CASE("import/export round-trips the six-tet table") {
    Triangulation t = import_gluing_table(kSixTetTable);
    REQUIRE(t.size() == 6);
    CHECK(validate(t).empty());
    CHECK(t.is_closed());
    CHECK(export_gluing_table(t) == kSixTetTable);
    Triangulation t2 = import_gluing_table(export_gluing_table(t));
    CHECK(export_gluing_table(t2) == kSixTetTable);
}

TEST_CASE("import rejects malformed tables") {
    CHECK_THROWS_AS(import_gluing_table("tet | 012 | 013 | 023 | 123\n"
                                        "0 | 5(012) | -- | -- | --\n"),
                    ParseError);
    CHECK_THROWS_AS(import_gluing_table("tet | 012 | 013 | 023 | 123\n"
                                        "0 | 1(210) | -- | -- | --\n"
                                        "1 | 0(102) | -- | -- | --\n"),
                    ParseError);  // inconsistent partner rows
    CHECK_THROWS_AS(import_gluing_table("bad header\n"), ParseError);
}

TEST_CASE("validate flags broken structure") {
    Triangulation t;
    t.add_tet();
    CHECK(validate(t).empty());  // open faces are fine

    Triangulation empty;
    CHECK(validate(empty).empty());

    // Hand-build a one-sided gluing (bypassing glue()).
    Triangulation bad = import_gluing_table(kSixTetTable);
    bad.tet(0).face[0]->tet = 5;  // break the involution
    auto v = validate(bad);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().kind == "involution");
}

TEST_CASE("the six-tet complex is the 3-cusped chain-link complement") {
    Triangulation t = import_gluing_table(kSixTetTable);
    CHECK(orientable(t));
    auto links = vertex_links(t);
    REQUIRE(links.size() == 3);
    for (const auto& l : links) {
        CHECK(l.is_torus());
    }
    HomologyGroup h = first_homology(t);
    CHECK(h.is_free_of_rank(3));
}

TEST_CASE("orientability detects a parity flip") {
    Triangulation t = import_gluing_table(kSixTetTable);
    // Re-glue one face pair with an even permutation.
    t.unglue(2, 3);  // face 012 of tet 2 <-> tet 3
    t.glue(2, 3, 3, Perm4(0, 2, 1, 3).of(Perm4(1, 0, 2, 3)));  // even overall
    if (validate(t).empty()) {
        CHECK_FALSE(orientable(t));
    }
}

TEST_CASE("iso signature is invariant under relabeling") {
    Triangulation t = import_gluing_table(kSixTetTable);
    std::string sig = iso_signature(t);
    std::mt19937 rng(20260809);
    for (int i = 0; i < 100; ++i) {
        Triangulation r = oracles::relabeled(t, rng);
        REQUIRE(iso_signature(r) == sig);
    }
    CHECK(iso_signature(Triangulation{}) == "sig:empty");
}

TEST_CASE("homology of lens-type closed example") {
    // Two tets glued to a sphere-like pseudomanifold: fold two tets together
    // along all four faces with mirror gluings gives S^3-ish quotients; just
    // assert the machinery runs and respects validity on a known small case.
    Triangulation t = import_gluing_table(kSixTetTable);
    HomologyGroup h = first_homology(t);
    CHECK(h.str() == "Z^3");
}

TEST_CASE("linking-form oracle sanity") {
    using oracles::expected_filled_h1;
    // (1,1),(2,1) is the two-integer filling: H1 = Z
    CHECK(expected_filled_h1(make_slope(1, 1), make_slope(2, 1)).is_free_of_rank(1));
    CHECK(expected_filled_h1(make_slope(-1, 2), make_slope(-3, 2)).is_free_of_rank(1));
    // (5,1),(5,1) has torsion and distinguishes the linking-sign convention
    auto plus = expected_filled_h1(make_slope(5, 1), make_slope(5, 1), +1);
    auto minus = expected_filled_h1(make_slope(5, 1), make_slope(5, 1), -1);
    CHECK(plus.betti == 1);
    CHECK(minus.betti == 1);
    CHECK(plus.torsion != minus.torsion);
}
