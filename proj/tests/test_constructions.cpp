#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/verifier.hpp"

using namespace prodtop;

TEST_CASE("theta graphs") {
    CHECK(is_circle(theta(2)));
    CHECK(homology_of(theta(3)).betti == std::vector<long long>{1, 2});
    CHECK(homology_of(theta(5)).betti == std::vector<long long>{1, 4});
    CHECK_THROWS_AS(theta(0), std::invalid_argument);
}

TEST_CASE("m0 surfaces") {
    SUBCASE("m = 1 is the full square of theta(2)") {
        ProductSubcomplex s = m0_surface(1);
        CHECK(s.cells_of_dim(2).size() == 4);
        CHECK(s.cells().size() == 16);
    }
    SUBCASE("m = 2 has six squares, genus two") {
        ProductSubcomplex s = m0_surface(2);
        CHECK(s.cells_of_dim(2).size() == 6);
        SurfaceReport r = surface_report(s);
        CHECK(r.genus == 2);
        CHECK(r.chi == -2);
    }
    SUBCASE("m = 4 has genus four") {
        SurfaceReport r = surface_report(m0_surface(4));
        CHECK(r.genus == 4);
        CHECK(r.rank_h1 == 8);
    }
}

TEST_CASE("m0 surfaces equal their dual description") {
    // The same square set arises column-wise: (m_{j-1} u m_j) x m_j.
    for (std::size_t m = 1; m <= 4; ++m) {
        const std::size_t n = m + 1;
        std::set<CellTuple> dual;
        for (std::size_t j = 0; j < n; ++j) {
            dual.insert(CellTuple{{"m" + std::to_string((j + n - 1) % n),
                                   "m" + std::to_string(j)}});
            dual.insert(CellTuple{{"m" + std::to_string(j), "m" + std::to_string(j)}});
        }
        CHECK(m0_surface(m).cells_of_dim(2) == dual);
    }
}

TEST_CASE("swap-symmetric surfaces") {
    SUBCASE("m = 1 is the full torus") {
        CHECK(involution_surface(1).cells() == m0_surface(1).cells());
    }
    for (long long m = 1; m <= 5; ++m) {
        CAPTURE(m);
        ProductSubcomplex s = involution_surface(m);
        CHECK(swap_invariance_check(s));
        SurfaceReport r = surface_report(s);
        CHECK(r.orientable);
        CHECK(r.genus == m);
    }
}

TEST_CASE("swap invariance checks") {
    CHECK_FALSE(swap_invariance_check(m0_surface(2)));
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{theta(3), theta(3)});
    CHECK(swap_invariance_check(full_subcomplex(parent)));
}

TEST_CASE("diagonal disjointness checks") {
    CHECK(diagonal_disjointness_check(diagonal_free_surface(4)));
    CHECK_FALSE(diagonal_disjointness_check(involution_surface(2)));  // contains m0 x m0
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{theta(2), theta(2)});
    auto with_vertex_square = ProductSubcomplex::closure(parent, {CellTuple{{"p", "p"}}});
    CHECK_FALSE(diagonal_disjointness_check(with_vertex_square));
}

TEST_CASE("wheel graphs") {
    CHECK(first_betti(wheel(3)) == 3);
    CHECK(wheel(3).vertices().size() == 4);
    CHECK(wheel(3).edges().size() == 6);
    CHECK(first_betti(wheel(5)) == 5);
    CHECK(first_betti(wheel_tilde(3)) == 4);
    CHECK_THROWS_AS(wheel(2), std::invalid_argument);
}

TEST_CASE("even-rank surfaces") {
    SUBCASE("n = 3") {
        ProductSubcomplex s = cauty_even_rank_surface(3);
        CHECK(s.cells_of_dim(2).size() == 21);
        SurfaceReport r = surface_report(s);
        CHECK(r.is_closed_surface);
        CHECK_FALSE(r.orientable);
        CHECK(r.chi == -5);
        CHECK(r.rank_h1 == 6);
    }
    SUBCASE("n = 5") {
        SurfaceReport r = surface_report(cauty_even_rank_surface(5));
        CHECK(r.chi == -9);
        CHECK(r.rank_h1 == 10);
    }
    SUBCASE("plus variant for rank 8") {
        SurfaceReport r = surface_report(cauty_even_rank_surface_plus(4));
        CHECK(r.is_closed_surface);
        CHECK_FALSE(r.orientable);
        CHECK(r.chi == -7);
        CHECK(r.rank_h1 == 8);
    }
    SUBCASE("parity violations are rejected") {
        CHECK_THROWS_AS(cauty_even_rank_surface(4), std::invalid_argument);
        CHECK_THROWS_AS(cauty_even_rank_surface_plus(5), std::invalid_argument);
    }
}

TEST_CASE("odd-rank surfaces") {
    SUBCASE("k = 2") {
        HomologySummary h = homology_of(cauty_odd_rank_surface(2));
        CHECK(h.betti == std::vector<long long>{1, 5, 0});
        CHECK(h.euler == -4);
        CHECK(h.torsion[1] == std::vector<Int>{2});
    }
    SUBCASE("k = 3") {
        HomologySummary h = homology_of(cauty_odd_rank_surface(3));
        CHECK(h.betti[1] == 7);
    }
    SUBCASE("orientation control flips the verdict") {
        HomologySummary h = homology_of(cauty_odd_rank_surface(2, true));
        CHECK(h.betti[2] == 1);
        CHECK(h.euler == -4);
        SurfaceReport r = surface_report(cauty_odd_rank_surface(2, true));
        CHECK(r.orientable);
        CHECK(r.genus == 3);
    }
}

TEST_CASE("diagonal-free surfaces") {
    SUBCASE("n = 4 satisfies all the stated properties") {
        ProductSubcomplex s = diagonal_free_surface(4);
        SurfaceReport r = surface_report(s);
        CHECK(r.is_closed_surface);
        CHECK(diagonal_disjointness_check(s));
        CHECK(swap_invariance_check(s));
        CHECK(r.chi == -8);
    }
    SUBCASE("n = 5 projections cover the whole graph") {
        ProductSubcomplex s = diagonal_free_surface(5);
        CHECK(surface_report(s).chi == -10);
        const Graph1Complex& g = s.parent().factor(0);
        std::set<std::string> seen;
        for (const auto& cell : s.cells()) {
            seen.insert(cell.components[0]);
            seen.insert(cell.components[1]);
        }
        CHECK(seen.size() == g.vertices().size() + g.edges().size());
    }
    CHECK_THROWS_AS(diagonal_free_surface(3), std::invalid_argument);
}

TEST_CASE("cones over graphs") {
    SUBCASE("cone over a single edge is one triangle") {
        Graph1Complex segment({"a", "b"}, {{"e", "a", "b"}});
        Regular2Complex cone = cone_over_graph(segment);
        CHECK(cone.faces().size() == 1);
        CHECK(cone.faces()[0].boundary.size() == 3);
    }
    SUBCASE("cones are acyclic with chi = 1") {
        for (std::size_t n : {2u, 3u, 5u}) {
            Regular2Complex cone = cone_over_graph(theta(n));
            HomologySummary h = homology_of(cone);
            CHECK(h.reduced_trivial());
            CHECK(h.euler == 1);
        }
    }
}

TEST_CASE("fixtures") {
    SUBCASE("dunce hat") {
        Regular2Complex hat = dunce_hat();
        CHECK(free_edges(hat).empty());
        HomologySummary h = homology_of(hat);
        CHECK(h.reduced_trivial());
        CHECK(h.euler == 1);
    }
    SUBCASE("bing house") {
        Regular2Complex house = bing_house();
        CHECK(free_edges(house).empty());
        HomologySummary h = homology_of(house);
        CHECK(h.reduced_trivial());
        CHECK(h.euler == 1);
    }
}

TEST_CASE("triple torus complexes") {
    SUBCASE("n = 2: circles pairwise, point triple") {
        TripleTorusReport r = triple_torus_report(2);
        CHECK(r.hypotheses_ok);
        CHECK(r.pairwise_profiles[0] == std::vector<long long>{1, 1});
        CHECK(r.triple_profile == std::vector<long long>{1});
    }
    SUBCASE("n = 3: triple intersection is a circle profile") {
        TripleTorusReport r = triple_torus_report(3);
        CHECK(r.hypotheses_ok);
        CHECK(r.triple_profile == std::vector<long long>{1, 1});
    }
    SUBCASE("the union is subset-closed") {
        CHECK_NOTHROW(triple_torus_complex(2).validate());
        CHECK_NOTHROW(triple_torus_complex(3).validate());
    }
}

TEST_CASE("expected records hold for every gallery member") {
    for (const auto& member : gallery()) {
        if (!member.expected) continue;
        const auto* sub = std::get_if<ProductSubcomplex>(&member.complex);
        if (!sub) continue;
        CAPTURE(member.name);
        HomologySummary h = homology_of(*sub);
        if (member.expected->chi) CHECK(h.euler == *member.expected->chi);
        if (member.expected->rank_h1) CHECK(h.betti[1] == *member.expected->rank_h1);
        if (member.expected->orientable && sub->parent().factor_count() == 2) {
            SurfaceReport r = surface_report(*sub);
            CHECK(r.orientable == *member.expected->orientable);
            if (member.expected->genus) CHECK(r.genus == *member.expected->genus);
        }
    }
}

TEST_CASE("m0 and swap-symmetric surfaces share surface reports up to m = 6") {
    for (long long m = 1; m <= 6; ++m) {
        SurfaceReport a = surface_report(m0_surface(m));
        SurfaceReport b = surface_report(involution_surface(m));
        CHECK(a.genus == b.genus);
        CHECK(a.chi == b.chi);
        CHECK(a.orientable == b.orientable);
        CHECK(a.rank_h1 == b.rank_h1);
    }
}

TEST_CASE("registry lookups") {
    NamedConstruction c = build_construction("m0-surface", 3);
    CHECK(c.name == "m0-surface");
    REQUIRE(c.expected.has_value());
    CHECK(*c.expected->genus == 3);
    const auto* sub = std::get_if<ProductSubcomplex>(&c.complex);
    REQUIRE(sub != nullptr);
    CHECK(sub->cells_of_dim(2).size() == 8);  // 2(m+1) top cells
    CHECK_THROWS_AS(build_construction("nope", 1), std::invalid_argument);
}
