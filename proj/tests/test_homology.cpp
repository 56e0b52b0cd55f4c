#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/verifier.hpp"

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

Graph1Complex random_graph(std::mt19937& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> vcount(2, max_vertices);
    const std::size_t nv = vcount(rng);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < nv; ++i) vertices.push_back("n" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> ecount(1, 2 * nv);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0, ne = ecount(rng); i < ne; ++i) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) b = (b + 1) % nv;
        edges.push_back({"e" + std::to_string(i), vertices[a], vertices[b]});
    }
    return Graph1Complex(vertices, edges);
}

ProductSubcomplex torus2() {
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{theta(2), theta(2)});
    return full_subcomplex(parent);
}

std::vector<long long> betti_padded(const HomologySummary& h, std::size_t len) {
    std::vector<long long> out = h.betti;
    out.resize(len, 0);
    return out;
}

} // namespace

TEST_CASE("chain complex of a single edge") {
    Graph1Complex g({"a", "b"}, {{"e", "a", "b"}});
    ChainComplex c = chain_complex_of_graph(g);
    REQUIRE(c.boundaries.size() == 1);
    CHECK(c.boundary(1).at(0, 0) == -1);  // tail "a" sorts first
    CHECK(c.boundary(1).at(1, 0) == 1);
}

TEST_CASE("triangle disc is contractible") {
    Regular2Complex disc = triangulated_disc(3);
    HomologySummary h = homology_of(disc);
    CHECK(h.reduced_trivial());
    CHECK(h.euler == 1);
}

TEST_CASE("torus homology via both chain models") {
    ProductSubcomplex t = torus2();
    HomologySummary via_product = homology_of(t);
    HomologySummary via_regular = homology_of(to_regular2(t));
    CHECK(via_product.betti == std::vector<long long>{1, 2, 1});
    CHECK(via_product == via_regular);
    for (const auto& tor : via_product.torsion) CHECK(tor.empty());
}

TEST_CASE("theta(3) is a wedge of two circles up to homology") {
    HomologySummary h = homology_of(theta(3));
    CHECK(h.betti == std::vector<long long>{1, 2});
}

TEST_CASE("theta(5) has first betti number 4") {
    CHECK(homology_of(theta(5)).betti == std::vector<long long>{1, 4});
}

TEST_CASE("full product of theta(3) with itself") {
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{theta(3), theta(3)});
    HomologySummary h = homology_of(full_subcomplex(parent));
    CHECK(h.betti == std::vector<long long>{1, 4, 4});
    CHECK(h.euler == 1);
}

TEST_CASE("three-fold product of 3-cycles is a 3-torus") {
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{cycle(3), cycle(3), cycle(3)});
    HomologySummary h = homology_of(full_subcomplex(parent));
    CHECK(h.betti == std::vector<long long>{1, 3, 3, 1});
}

TEST_CASE("homology rejects broken chain complexes") {
    ChainComplex c;
    c.labels = {{"v"}, {"e"}, {"f"}};
    c.boundaries = {IntegerMatrix(1, 1, {1}), IntegerMatrix(1, 1, {1})};
    CHECK_THROWS_AS(homology(c), std::logic_error);
}

TEST_CASE("orientability") {
    SUBCASE("m0 surfaces are orientable") {
        CHECK(orientability(m0_surface(2)));
        CHECK(orientability(to_regular2(m0_surface(2))));
    }
    SUBCASE("odd-rank surface is not orientable") {
        CHECK_FALSE(orientability(cauty_odd_rank_surface(5)));
    }
    SUBCASE("torus is orientable") { CHECK(orientability(torus2())); }
    SUBCASE("non pseudo-manifold inputs are refused") {
        CHECK_THROWS_AS(orientability(dunce_hat()), std::invalid_argument);
        CHECK_THROWS_AS(orientability(punctured_torus()), std::invalid_argument);
    }
}

TEST_CASE("surface reports") {
    SUBCASE("torus") {
        SurfaceReport r = surface_report(torus2());
        CHECK(r.is_closed_surface);
        CHECK(r.orientable);
        CHECK(r.genus == 1);
        CHECK(r.rank_h1 == 2);
    }
    SUBCASE("genus three") {
        SurfaceReport r = surface_report(m0_surface(3));
        CHECK(r.orientable);
        CHECK(r.genus == 3);
        CHECK(r.chi == -4);
    }
    SUBCASE("even-rank non-orientable surface, n = 3") {
        SurfaceReport r = surface_report(cauty_even_rank_surface(3));
        CHECK(r.is_closed_surface);
        CHECK_FALSE(r.orientable);
        CHECK(r.chi == -5);
        CHECK(r.genus == 7);
        CHECK(r.rank_h1 == 6);
    }
    SUBCASE("odd-rank surface homology") {
        HomologySummary h = homology_of(cauty_odd_rank_surface(2));
        CHECK(h.betti == std::vector<long long>{1, 5, 0});
        CHECK(h.euler == -4);
        REQUIRE(h.torsion.size() >= 2);
        CHECK(h.torsion[1] == std::vector<Int>{2});
    }
    SUBCASE("non-surfaces short-circuit") {
        SurfaceReport r = surface_report(dunce_hat());
        CHECK_FALSE(r.is_closed_surface);
    }
}

TEST_CASE("Kuenneth rank identity for random graph pairs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Graph1Complex g = random_graph(rng, 6), h = random_graph(rng, 6);
        auto parent = std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{g, h});
        HomologySummary hp = homology_of(full_subcomplex(parent));
        auto bg = betti_padded(homology_of(g), 2);
        auto bh = betti_padded(homology_of(h), 2);
        std::vector<long long> expected(3, 0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) expected[i + j] += bg[i] * bh[j];
        CHECK(betti_padded(hp, 3) == expected);
        CHECK(hp.euler == (bg[0] - bg[1]) * (bh[0] - bh[1]));
        for (const auto& t : hp.torsion) CHECK(t.empty());
    }
}

TEST_CASE("subdivision leaves homology unchanged") {
    SUBCASE("on a graph") {
        Graph1Complex g = theta(4);
        CHECK(homology_of(subdivide_edge(g, "m2")) == homology_of(g));
    }
    SUBCASE("on a product subcomplex") {
        ProductSubcomplex s = m0_surface(2);
        ProductSubcomplex divided = subdivide_factor_edge(s, 0, "m1");
        CHECK(homology_of(divided) == homology_of(s));
        ProductSubcomplex twice = subdivide_factor_edge(divided, 1, "m0");
        CHECK(homology_of(twice) == homology_of(s));
    }
}

TEST_CASE("torus skeleton homology") {
    SUBCASE("full torus") {
        for (std::size_t k = 1; k <= 5; ++k) {
            HomologySummary h = torus_skeleton_homology(k, k);
            for (std::size_t i = 0; i <= k; ++i) CHECK(h.betti[i] == binomial(k, i));
        }
    }
    SUBCASE("k=4 n=2") {
        CHECK(torus_skeleton_homology(4, 2).betti == std::vector<long long>{1, 4, 6});
    }
    SUBCASE("k=5 n=3 top rank is C(5,3)") {
        CHECK(torus_skeleton_homology(5, 3).betti.back() == 10);
    }
    SUBCASE("degree above ambient is rejected") {
        CHECK_THROWS_AS(torus_skeleton_homology(2, 3), std::invalid_argument);
    }
}

TEST_CASE("zero-differential skeleton model vs regular product oracle") {
    // Oracle: k bigon circles; a cell is in the n-skeleton iff at most n
    // components leave the base vertex p.
    auto oracle = [](std::size_t k, std::size_t n) {
        std::vector<Graph1Complex> fs(k, theta(2));
        auto parent = std::make_shared<const ProductComplex>(fs);
        std::set<CellTuple> cells;
        for (const auto& cell : parent->all_cells()) {
            std::size_t moved = 0;
            for (const auto& c : cell.components)
                if (c != "p") ++moved;
            if (moved <= n) cells.insert(cell);
        }
        return ProductSubcomplex(parent, cells);
    };
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 0; n <= k; ++n) {
            HomologySummary model = torus_skeleton_homology(k, n);
            HomologySummary observed = homology_of(oracle(k, n));
            CHECK(model.betti == observed.betti);
            for (const auto& t : observed.torsion) CHECK(t.empty());
        }
}

TEST_CASE("torus subset complexes validate subset closure") {
    TorusSubsetComplex bad;
    bad.ambient = 2;
    bad.cells.insert({0, 1});
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
