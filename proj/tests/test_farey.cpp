#include <catch2/catch_amalgamated.hpp>

#include "m3fill/contfrac.hpp"
#include "m3fill/farey.hpp"
#include "m3fill/slope.hpp"
#include "oracles.hpp"

using namespace m3fill;

TEST_CASE("slope canonical form") {
    CHECK(make_slope(-10, 4) == make_slope(-5, 2));
    CHECK(make_slope(3, -1) == make_slope(-3, 1));
    CHECK(make_slope(2, 0) == make_slope(1, 0));
    CHECK(make_slope(-1, 0) == infinity_slope());
    CHECK(make_slope(7, 3) == make_slope(-7, -3));
    CHECK_THROWS_AS(make_slope(0, 0), ZeroSlopePair);
}

TEST_CASE("slope parse and print") {
    CHECK(parse_slope("-5/2") == make_slope(-5, 2));
    CHECK(parse_slope("7") == make_slope(7, 1));
    CHECK(parse_slope("inf") == infinity_slope());
    CHECK(parse_slope("3/-1") == make_slope(-3, 1));
    CHECK(make_slope(-5, 2).str() == "-5/2");
    CHECK(infinity_slope().str() == "1/0");
    CHECK_THROWS(parse_slope("x/y"));
}

TEST_CASE("positive continued fractions") {
    CHECK(positive_cf(make_slope(-5, 2)).coefficients == std::vector<std::int64_t>{2, 2});
    CHECK(positive_cf(make_slope(-7, 4)).coefficients ==
          std::vector<std::int64_t>{1, 1, 3});
    CHECK(positive_cf(make_slope(17, 9)).coefficients ==
          std::vector<std::int64_t>{1, 1, 8});
    CHECK(positive_cf(make_slope(0, 1)).coefficients == std::vector<std::int64_t>{0});
    CHECK(positive_cf(make_slope(1, 1)).coefficients == std::vector<std::int64_t>{1});
    CHECK_THROWS_AS(positive_cf(infinity_slope()), InfiniteSlope);

    CHECK(PositiveCF{{1, 1, 8}}.value() == make_slope(17, 9));
    CHECK(PositiveCF{{2, 2}}.str() == "[2;2]");
    CHECK(PositiveCF{{5}}.str() == "[5]");
}

TEST_CASE("cf round-trip reproduces |p/q| for all small slopes") {
    for (std::int64_t p = -30; p <= 30; ++p) {
        for (std::int64_t q = 1; q <= 30; ++q) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Slope s(p, q);
            PositiveCF cf = positive_cf(s);
            REQUIRE(cf.value() == Slope(p < 0 ? -p : p, q));
            // canonical shape
            REQUIRE(cf.coefficients.front() >= 0);
            for (std::size_t i = 1; i < cf.coefficients.size(); ++i)
                REQUIRE(cf.coefficients[i] >= 1);
            if (cf.coefficients.size() > 1) REQUIRE(cf.coefficients.back() >= 2);
        }
    }
}

TEST_CASE("norm") {
    CHECK(slope_norm(make_slope(-5, 2)) == 4);
    CHECK(slope_norm(make_slope(-1, 3)) == 3);
    CHECK(slope_norm(make_slope(0, 1)) == 0);
    CHECK_THROWS_AS(slope_norm(infinity_slope()), InfiniteSlope);
}

TEST_CASE("farey neighbors") {
    CHECK(is_farey_neighbor(make_slope(1, 0), make_slope(5, 1)));
    CHECK(is_farey_neighbor(make_slope(1, 2), make_slope(2, 3)));
    CHECK_FALSE(is_farey_neighbor(make_slope(1, 2), make_slope(3, 4)));
    // symmetric, and invariant under simultaneous negation
    for (std::int64_t p = -8; p <= 8; ++p)
        for (std::int64_t q = 0; q <= 8; ++q) {
            if ((p == 0 && q == 0) || std::gcd(p < 0 ? -p : p, q) != 1) continue;
            Slope a(p, q), b(3, 5);
            CHECK(is_farey_neighbor(a, b) == is_farey_neighbor(b, a));
            CHECK(is_farey_neighbor(a, b) == is_farey_neighbor(make_slope(-p, -q), b));
        }
}

TEST_CASE("farey paths") {
    FareyTriple rp = class_triple(BoundaryClass::Rp);
    FareyTriple r = class_triple(BoundaryClass::R);

    SECTION("member of the start triple gives the empty path") {
        auto path = farey_path(r, make_slope(1, 1));
        CHECK(path.length() == 0);
        CHECK(path.end == r);
    }
    SECTION("one step to 2/1") {
        auto path = farey_path(r, make_slope(2, 1));
        REQUIRE(path.length() == 1);
        CHECK(path.end == FareyTriple(make_slope(1, 1), make_slope(2, 1), make_slope(1, 0)));
        CHECK(path.steps[0].leave == make_slope(0, 1));
        CHECK(path.steps[0].enter == make_slope(2, 1));
    }
    SECTION("norm counts steps from Rp for positive slopes") {
        auto path = farey_path(rp, make_slope(17, 9));
        CHECK(path.length() == 10);
        CHECK(static_cast<std::int64_t>(path.length()) == slope_norm(make_slope(17, 9)));
        CHECK(path.end.contains(make_slope(17, 9)));
    }
    SECTION("every step flips exactly one slope through a valid triple") {
        auto path = farey_path(class_triple(BoundaryClass::P), make_slope(13, 7));
        FareyTriple cur = path.start;
        for (const auto& st : path.steps) {
            REQUIRE(cur.contains(st.leave));
            FareyTriple nxt = flip_triple(cur, st.leave);
            REQUIRE(nxt.contains(st.enter));
            int common = 0;
            for (const Slope& s : cur.slopes)
                if (nxt.contains(s)) ++common;
            REQUIRE(common == 2);
            cur = nxt;
        }
        REQUIRE(cur == path.end);
    }
}

TEST_CASE("farey path length agrees with breadth-first oracle") {
    for (BoundaryClass b : {BoundaryClass::P, BoundaryClass::Q, BoundaryClass::R,
                            BoundaryClass::Rp}) {
        FareyTriple start = class_triple(b);
        auto dist = oracles::bfs_triple_distances(start, 60);
        for (std::int64_t p = -12; p <= 12; ++p) {
            for (std::int64_t q = 0; q <= 12; ++q) {
                if ((p == 0 && q == 0) || std::gcd(p < 0 ? -p : p, q) != 1) continue;
                if (q == 0 && p != 1) continue;
                Slope s(p, q);
                auto path = farey_path(start, s);
                REQUIRE(static_cast<int>(path.length()) ==
                        oracles::bfs_path_length(dist, s));
            }
        }
    }
}

TEST_CASE("lst tetrahedron counts") {
    CHECK(lst_tet_count(BoundaryClass::P, make_slope(-3, 2)) == 0);
    CHECK(lst_tet_count(BoundaryClass::Q, make_slope(-5, 2)) == 0);
    CHECK(lst_tet_count(BoundaryClass::R, make_slope(7, 2)) == 3);
    CHECK(lst_tet_count(BoundaryClass::Rp, make_slope(-1, 5)) == 3);
    CHECK(lst_tet_count(BoundaryClass::R, make_slope(1, 1)) == 0);  // triple member
    CHECK_THROWS_AS(lst_tet_count(BoundaryClass::P, infinity_slope()), InfiniteSlope);
}

TEST_CASE("lst count equals path length minus one, clamped") {
    for (BoundaryClass b : {BoundaryClass::P, BoundaryClass::Q, BoundaryClass::R,
                            BoundaryClass::Rp}) {
        FareyTriple start = class_triple(b);
        for (std::int64_t p = -10; p <= 10; ++p) {
            for (std::int64_t q = 1; q <= 10; ++q) {
                if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
                Slope s(p, q);
                auto n = static_cast<std::int64_t>(farey_path(start, s).length());
                CHECK(lst_tet_count(b, s) == std::max<std::int64_t>(n - 1, 0));
            }
        }
    }
}

TEST_CASE("chain tetrahedron counts") {
    CHECK(chain_tet_count(BoundaryClass::Uhat, make_slope(-4, 1)) == 0);
    CHECK(chain_tet_count(BoundaryClass::Uhat, make_slope(-3, 1)) == 1);
    CHECK(chain_tet_count(BoundaryClass::Uhat, make_slope(-5, 1)) == 1);
    CHECK(chain_tet_count(BoundaryClass::Uhat, make_slope(-6, 1)) == 2);
    CHECK(chain_tet_count(BoundaryClass::Vhat, make_slope(1, 1)) == 1);
    CHECK(chain_tet_count(BoundaryClass::Vhat, make_slope(0, 1)) == 0);
    CHECK(chain_tet_count(BoundaryClass::Vhat, make_slope(4, 1)) == 4);
    CHECK_THROWS_AS(chain_tet_count(BoundaryClass::Uhat, make_slope(-7, 2)),
                    UnrealizableSlope);
    CHECK_THROWS_AS(chain_tet_count(BoundaryClass::Vhat, infinity_slope()),
                    UnrealizableSlope);
}

TEST_CASE("chain parameter recovers k") {
    // Uhat: filling m/1 is (m+5)*alpha + beta in the cusp framing.
    CHECK(chain_parameter(BoundaryClass::Uhat, make_slope(-5, 1)) == 0);
    CHECK(chain_parameter(BoundaryClass::Uhat, make_slope(-4, 1)) == 1);
    CHECK(chain_parameter(BoundaryClass::Vhat, make_slope(1, 1)) == 0);
    CHECK(chain_parameter(BoundaryClass::Vhat, make_slope(3, 1)) == 2);
    CHECK_THROWS_AS(chain_parameter(BoundaryClass::Uhat, make_slope(1, 2)),
                    UnrealizableSlope);
}
