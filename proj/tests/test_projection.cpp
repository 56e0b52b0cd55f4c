#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/projection.hpp"

using namespace prodtop;

namespace {

Graph1Complex cycle(std::size_t n) {
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.push_back("c" + std::to_string(i));
        edges.push_back({"e" + std::to_string(i), "c" + std::to_string(i),
                         "c" + std::to_string((i + 1) % n)});
    }
    return Graph1Complex(vertices, edges);
}

ProductSubcomplex torus2() {
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{theta(2), theta(2)});
    return full_subcomplex(parent);
}

ProductSubcomplex circle_cross_m04() {
    ProductSubcomplex m0 = m0_surface(2);
    Graph1Complex c = cycle(3);
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{c, m0.parent().factor(0), m0.parent().factor(1)});
    std::set<CellTuple> seed;
    for (const auto& e : c.edges())
        for (const auto& sq : m0.cells_of_dim(2))
            seed.insert(CellTuple{{e.id, sq.components[0], sq.components[1]}});
    return ProductSubcomplex::closure(parent, seed);
}

} // namespace

TEST_CASE("projections") {
    SUBCASE("m0 projections are surjective theta graphs") {
        ProductSubcomplex s = m0_surface(2);
        for (std::size_t j : {0u, 1u}) {
            Graph1Complex img = as_graph(project(s, {j}));
            CHECK(img == theta(3));
        }
    }
    SUBCASE("projection of the full torus is the circle factor") {
        CHECK(as_graph(project(torus2(), {1})) == theta(2));
    }
    SUBCASE("projection of a single square is an edge with endpoints") {
        auto parent = std::make_shared<const ProductComplex>(
            std::vector<Graph1Complex>{theta(2), theta(2)});
        auto square = ProductSubcomplex::closure(parent, {CellTuple{{"m0", "m1"}}});
        Graph1Complex img = as_graph(project(square, {0}));
        CHECK(img.vertices().size() == 2);
        CHECK(img.edges().size() == 1);
    }
    SUBCASE("bad index sets are rejected") {
        CHECK_THROWS_AS(project(torus2(), {}), std::invalid_argument);
        CHECK_THROWS_AS(project(torus2(), {2}), std::invalid_argument);
        CHECK_THROWS_AS(project(torus2(), {1, 0}), std::invalid_argument);
    }
}

TEST_CASE("fibers") {
    ProductSubcomplex s = m0_surface(2);
    SUBCASE("fiber over a meridian is a two-meridian circle") {
        // second-factor fiber over first-factor edge m1: m1 x (m1 u m2)
        ProductSubcomplex fiber = fiber_complex(s, {1}, CellTuple{{"m1"}});
        Graph1Complex g = as_graph(fiber);
        CHECK(is_circle(g));
        CHECK(g.has_edge("m1"));
        CHECK(g.has_edge("m2"));
        CHECK(g.edges().size() == 2);
    }
    SUBCASE("fiber over a pole is the whole theta graph") {
        ProductSubcomplex fiber = fiber_complex(s, {0}, CellTuple{{"q"}});
        CHECK(as_graph(fiber) == theta(3));
    }
    SUBCASE("fibers of the full torus are the other circle") {
        ProductSubcomplex torus = torus2();
        ProductSubcomplex second = project(torus, {1});
        for (const auto& cell : second.cells())
            CHECK(as_graph(fiber_complex(torus, {0}, cell)) == theta(2));
    }
    SUBCASE("cells outside the projection are rejected") {
        CHECK_THROWS_AS(fiber_complex(s, {0}, CellTuple{{"zz"}}), std::invalid_argument);
    }
}

TEST_CASE("circle predicates on fibers and projections") {
    SUBCASE("torus: every fiber a circle, projection a circle") {
        CHECK(fibers_all_circles(torus2(), 0));
        CHECK(fibers_all_circles(torus2(), 1));
    }
    SUBCASE("m0 genus 2: pole fiber is a theta graph") {
        CHECK_FALSE(fibers_all_circles(m0_surface(2), 0));
    }
    SUBCASE("even-rank surface: hub fiber is the whole wheel") {
        CHECK_FALSE(fibers_all_circles(cauty_even_rank_surface(3), 0));
    }
}

TEST_CASE("circle projection sets") {
    SUBCASE("torus has all indices") {
        CHECK(circle_projection_set(torus2()) == std::set<std::size_t>{0, 1});
    }
    SUBCASE("higher-genus surfaces have none") {
        CHECK(circle_projection_set(m0_surface(2)).empty());
        CHECK(circle_projection_set(m0_surface(3)).empty());
    }
    SUBCASE("mixed product has exactly the circle index") {
        CHECK(circle_projection_set(circle_cross_m04()) == std::set<std::size_t>{0});
    }
}

TEST_CASE("product decomposition") {
    SUBCASE("torus decomposes exactly with trivial residual") {
        DecompositionResult d = product_decomposition(torus2());
        CHECK(d.exact);
        CHECK(d.circle_indices == std::set<std::size_t>{0, 1});
        CHECK_FALSE(d.residual.has_value());
    }
    SUBCASE("circle x m0 splits off the circle") {
        DecompositionResult d = product_decomposition(circle_cross_m04());
        CHECK(d.circle_indices == std::set<std::size_t>{0});
        CHECK(d.exact);
        REQUIRE(d.residual.has_value());
        CHECK(d.residual->cells() == m0_surface(2).cells());
    }
    SUBCASE("no circles, no decomposition claimed") {
        DecompositionResult d = product_decomposition(m0_surface(2));
        CHECK(d.circle_indices.empty());
        CHECK(d.exact);
        REQUIRE(d.residual.has_value());
        CHECK(d.residual->cells() == m0_surface(2).cells());
    }
}

TEST_CASE("rank bounds") {
    SUBCASE("torus attains the bound and decomposes") {
        RankBoundReport r = rank_bound_assert(torus2());
        CHECK(r.ok);
        CHECK(r.rank_h1 == 2);
        CHECK(r.circle_indices.size() == 2);
    }
    SUBCASE("m0 genus 2 has rank n + 2 and makes no circle claim") {
        RankBoundReport r = rank_bound_assert(m0_surface(2));
        CHECK(r.ok);
        CHECK(r.rank_h1 == 4);
    }
    SUBCASE("3-torus is the k = 0 case") {
        auto parent = std::make_shared<const ProductComplex>(
            std::vector<Graph1Complex>{cycle(3), cycle(4), cycle(5)});
        RankBoundReport r = rank_bound_assert(full_subcomplex(parent));
        CHECK(r.ok);
        CHECK(r.rank_h1 == 3);
        CHECK(r.circle_indices.size() == 3);
    }
}

TEST_CASE("theta decomposition") {
    SUBCASE("m0 surfaces give the expected meridian count") {
        for (std::size_t m = 1; m <= 4; ++m) {
            ThetaDecomposeResult d = theta_decompose(m0_surface(m));
            REQUIRE_MESSAGE(d.ok, d.reason);
            CHECK(d.meridians.size() == m + 1);
            CHECK(d.genus == m);
        }
    }
    SUBCASE("torus gives a two-meridian sequence") {
        ThetaDecomposeResult d = theta_decompose(torus2());
        REQUIRE(d.ok);
        CHECK(d.meridians.size() == 2);
        CHECK(d.genus == 1);
    }
    SUBCASE("swap-symmetric surfaces decompose") {
        for (std::size_t m = 1; m <= 4; ++m) {
            ThetaDecomposeResult d = theta_decompose(involution_surface(m));
            REQUIRE_MESSAGE(d.ok, d.reason);
            CHECK(2 * d.genus == static_cast<std::size_t>(homology_of(involution_surface(m))
                                                              .betti[1]));
        }
    }
    SUBCASE("non theta factors are rejected") {
        CHECK_THROWS_AS(theta_decompose(cauty_even_rank_surface(3)), std::invalid_argument);
    }
}

TEST_CASE("projection calculus properties on gallery members") {
    for (const auto& member : gallery()) {
        const auto* sub = std::get_if<ProductSubcomplex>(&member.complex);
        if (!sub) continue;
        CAPTURE(member.name);
        const std::size_t n = sub->parent().factor_count();
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(property_c_reconstruction(*sub, {j}));
            CHECK(property_d_monotonicity(*sub, {j}));
            CHECK(property_g_unions(*sub, {j}));
            CHECK(property_j_biconditional(*sub, j));
        }
    }
}

TEST_CASE("fiber tables expose monotonicity directly") {
    FiberTable table = fiber_table(m0_surface(2), {0});
    // the table contains a fiber for every cell of the complementary image
    CHECK(table.fibers.size() == project(m0_surface(2), {1}).cells().size());
    CHECK(property_d_monotonicity(m0_surface(2), {0}));
}
