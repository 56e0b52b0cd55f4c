#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodtop/collapse.hpp"
#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"

using namespace prodtop;

namespace {

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

bool is_point(const Regular2Complex& k) {
    return k.vertices().size() == 1 && k.edges().empty() && k.faces().empty();
}

Regular2Complex single_triangle() {
    return Regular2Complex({"a", "b", "c"},
                           {{"ab", "a", "b"}, {"ac", "a", "c"}, {"bc", "b", "c"}},
                           {Face2{"t", {{"ab", true}, {"bc", true}, {"ac", false}}}});
}

} // namespace

TEST_CASE("free face pairs") {
    SUBCASE("disc: every boundary edge pairs with its triangle") {
        Regular2Complex disc = triangulated_disc(4);
        auto pairs = free_face_pairs(disc);
        std::set<std::string> free_rims;
        for (const auto& p : pairs) free_rims.insert(p.free_face);
        CHECK(free_rims == std::set<std::string>{"r0", "r1", "r2", "r3"});
    }
    SUBCASE("fixtures have none") {
        CHECK(free_face_pairs(dunce_hat()).empty());
        CHECK(free_face_pairs(bing_house()).empty());
    }
    SUBCASE("a bare edge offers both endpoints") {
        Regular2Complex seg({"a", "b"}, {{"e", "a", "b"}}, {});
        auto pairs = free_face_pairs(seg);
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0].free_face == "a");
        CHECK(pairs[1].free_face == "b");
    }
}

TEST_CASE("greedy collapse") {
    SUBCASE("cone over theta(3) collapses to a point") {
        CollapsePlan plan = greedy_collapse(cone_over_graph(theta(3)));
        CHECK(is_point(plan.core));
    }
    SUBCASE("torus complex has no moves") {
        CollapsePlan plan = greedy_collapse(to_regular2(m0_surface(1)));
        CHECK(plan.steps.empty());
        CHECK(plan.core.faces().size() == 4);
    }
    SUBCASE("disc with a dangling edge collapses to a point") {
        Regular2Complex disc = triangulated_disc(3);
        std::vector<std::string> vs = disc.vertices();
        vs.push_back("tail");
        std::vector<GraphEdge> es = disc.edges();
        es.push_back({"dangle", "v0", "tail"});
        Regular2Complex k(vs, es, disc.faces());
        CHECK(is_point(greedy_collapse(k).core));
    }
    SUBCASE("homology is preserved after every step batch of the plan") {
        Regular2Complex k = cone_over_graph(theta(4));
        HomologySummary before = homology_of(k);
        CollapsePlan plan = greedy_collapse(k);
        // replay the plan, re-checking the homology every few steps
        std::set<std::string> vs(k.vertices().begin(), k.vertices().end());
        std::set<std::string> es, fs;
        for (const auto& e : k.edges()) es.insert(e.id);
        for (const auto& f : k.faces()) fs.insert(f.id);
        auto betti_of_state = [&]() {
            std::vector<std::string> v(vs.begin(), vs.end());
            std::vector<GraphEdge> e;
            std::vector<Face2> f;
            for (const auto& edge : k.edges())
                if (es.count(edge.id)) e.push_back(edge);
            for (const auto& face : k.faces())
                if (fs.count(face.id)) f.push_back(face);
            HomologySummary h = homology_of(Regular2Complex(v, e, f));
            h.betti.resize(3, 0);
            return h.betti;
        };
        std::vector<long long> reference = betti_of_state();
        for (std::size_t i = 0; i < plan.steps.size(); ++i) {
            const auto& step = plan.steps[i];
            if (es.count(step.free_face)) {
                es.erase(step.free_face);
                fs.erase(step.coface);
            } else {
                vs.erase(step.free_face);
                es.erase(step.coface);
            }
            if (i % 3 == 2 || i + 1 == plan.steps.size()) CHECK(betti_of_state() == reference);
        }
        CHECK(homology_of(plan.core).betti[0] == before.betti[0]);
    }
    SUBCASE("punctured torus collapses onto an endpoint-free graph") {
        CollapsePlan plan = greedy_collapse(to_regular2(punctured_torus()));
        CHECK(plan.core.faces().empty());
        CHECK_FALSE(plan.core.edges().empty());
        CHECK(classify_core(plan.core) == CoreClass::Quasi1ManifoldGraph);
        HomologySummary h = homology_of(plan.core);
        CHECK(h.betti == std::vector<long long>{1, 2});
    }
}

TEST_CASE("greedy collapse reaches a point on 50 random cones") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        Graph1Complex g = random_graph(rng, 8);
        CollapsePlan plan = greedy_collapse(cone_over_graph(g));
        CHECK(is_point(plan.core));
    }
}

TEST_CASE("exhaustive collapsibility") {
    SUBCASE("cones are collapsible") {
        auto r = exhaustive_collapsibility(cone_over_graph(theta(3)), 100000);
        CHECK(r.status == CollapseStatus::Collapsible);
    }
    SUBCASE("dunce hat is refuted immediately") {
        auto r = exhaustive_collapsibility(dunce_hat(), 100000);
        CHECK(r.status == CollapseStatus::Refuted);
        CHECK(r.nodes_expanded <= 1);
    }
    SUBCASE("triangulated disc is collapsible") {
        auto r = exhaustive_collapsibility(triangulated_disc(5), 100000);
        CHECK(r.status == CollapseStatus::Collapsible);
        TreeEmbedding emb = tree_embed(triangulated_disc(5), r.plan);
        CHECK(verify_tree_embedding(emb, triangulated_disc(5)).verdict);
    }
    SUBCASE("budget exhaustion is reported distinctly") {
        auto r = exhaustive_collapsibility(grid_triangulated_square(2), 1);
        CHECK(r.status == CollapseStatus::NotWithinBudget);
    }
}

TEST_CASE("core classification") {
    CHECK(classify_core(Regular2Complex({"v"}, {}, {})) == CoreClass::Point);
    CHECK(classify_core(greedy_collapse(cone_over_graph(theta(4))).core) == CoreClass::Point);
    CHECK(classify_core(to_regular2(m0_surface(1))) == CoreClass::Torus);
    CHECK(classify_core(dunce_hat()) == CoreClass::Other);
    SUBCASE("endpoint-free graphs") {
        Regular2Complex circle(theta(2).vertices(), theta(2).edges(), {});
        CHECK(classify_core(circle) == CoreClass::Quasi1ManifoldGraph);
    }
    SUBCASE("still-collapsible input is rejected") {
        CHECK_THROWS_AS(classify_core(triangulated_disc(3)), std::invalid_argument);
    }
    SUBCASE("higher-genus surfaces are other") {
        CHECK(classify_core(to_regular2(m0_surface(2))) == CoreClass::Other);
    }
}

TEST_CASE("tree embedding of a single triangle") {
    Regular2Complex k = single_triangle();
    CollapsePlan plan = collapse_to_point(k);
    TreeEmbedding emb = tree_embed(k, plan);
    VerifierReport check = verify_tree_embedding(emb, k);
    std::string why = check.witnesses.empty() ? std::string("ok")
                                              : check.witnesses.front().reason;
    CHECK_MESSAGE(check.verdict, why);
    CHECK(is_tree(emb.tree1));
    CHECK(is_tree(emb.tree2));
    CHECK(emb.assignment.at("t").size() >= 1);
    HomologySummary h = homology_of(emb.image);
    CHECK(h.reduced_trivial());
    CHECK(h.euler == 1);
}

TEST_CASE("tree embedding handles a bigon disc") {
    Regular2Complex bigon({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}},
                          {Face2{"f", {{"e1", true}, {"e2", false}}}});
    CollapsePlan plan = collapse_to_point(bigon);
    TreeEmbedding emb = tree_embed(bigon, plan);
    VerifierReport check = verify_tree_embedding(emb, bigon);
    std::string why = check.witnesses.empty() ? std::string("ok")
                                              : check.witnesses.front().reason;
    CHECK_MESSAGE(check.verdict, why);
    CHECK(emb.assignment.at("f").size() == 1);  // a single product square
}

TEST_CASE("tree embedding is deterministic") {
    Regular2Complex k = cone_over_graph(theta(3));
    CollapsePlan plan = collapse_to_point(k);
    TreeEmbedding a = tree_embed(k, plan);
    TreeEmbedding b = tree_embed(k, plan);
    CHECK(a.tree1 == b.tree1);
    CHECK(a.tree2 == b.tree2);
    CHECK(a.image.cells() == b.image.cells());
    CHECK(a.assignment == b.assignment);
}

TEST_CASE("tree embedding of the gallery of collapsible complexes") {
    const std::vector<std::pair<std::string, Regular2Complex>> inputs = {
        {"cone-theta3", cone_over_graph(theta(3))},
        {"cone-theta4", cone_over_graph(theta(4))},
        {"disc", triangulated_disc(6)},
        {"grid", grid_triangulated_square(3)},
    };
    for (const auto& [name, k] : inputs) {
        CAPTURE(name);
        CollapsePlan plan = collapse_to_point(k);
        TreeEmbedding emb = tree_embed(k, plan);
        VerifierReport check = verify_tree_embedding(emb, k);
        std::string why = name + ": " +
                          (check.witnesses.empty() ? std::string("ok")
                                                   : check.witnesses.front().cell + ": " +
                                                         check.witnesses.front().reason);
        CHECK_MESSAGE(check.verdict, why);
        HomologySummary h = homology_of(emb.image);
        CHECK(h.euler == 1);
        CHECK(h.reduced_trivial());
        // pendant bookkeeping: one pendant per vertex-edge expansion, one per run
        CHECK(emb.stats.pendant_edges == emb.stats.edge_expansions + emb.stats.runs);
        CHECK(emb.stats.face_expansions == k.faces().size());
    }
}

TEST_CASE("tree embedding rejects bad plans") {
    Regular2Complex k = single_triangle();
    SUBCASE("a plan that stops early") {
        CollapsePlan partial = greedy_collapse(k);
        partial.steps.pop_back();
        CHECK_THROWS_AS(tree_embed(k, partial), std::invalid_argument);
    }
    SUBCASE("a plan with an illegal step") {
        CollapsePlan bogus;
        bogus.steps = {{"ab", "t"}, {"ab", "t"}};
        CHECK_THROWS_AS(tree_embed(k, bogus), std::invalid_argument);
    }
}

TEST_CASE("embedding verification catches tampering") {
    Regular2Complex k = cone_over_graph(theta(3));
    TreeEmbedding emb = tree_embed(k, collapse_to_point(k));
    REQUIRE(verify_tree_embedding(emb, k).verdict);

    SUBCASE("overlapping face images fail disjointness") {
        TreeEmbedding tampered = emb;
        // give one 2-cell the image of another
        std::string first, second;
        for (const auto& f : k.faces()) {
            if (first.empty())
                first = f.id;
            else if (second.empty())
                second = f.id;
        }
        tampered.assignment[first] = tampered.assignment[second];
        CHECK_FALSE(verify_tree_embedding(tampered, k).verdict);
    }
    SUBCASE("dropping image cells fails coverage") {
        TreeEmbedding tampered = emb;
        for (auto& [id, cells] : tampered.assignment) {
            bool has_square = false;
            for (const auto& c : cells)
                if (tampered.image.parent().dimension(c) == 2) has_square = true;
            if (has_square) {
                cells.clear();
                break;
            }
        }
        CHECK_FALSE(verify_tree_embedding(tampered, k).verdict);
    }
}
