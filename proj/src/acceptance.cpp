#include "prodtop/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "prodtop/abelian.hpp"
#include "prodtop/collapse.hpp"
#include "prodtop/constructions.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/projection.hpp"
#include "prodtop/verifier.hpp"

namespace prodtop {

namespace {

struct Checker {
    CriterionResult* r;

    void check(bool ok, const std::string& claim, const std::string& expected,
               const std::string& computed) {
        ++r->checks;
        if (ok) return;
        ++r->failures;
        r->pass = false;
        r->lines.push_back("  claim: " + claim + " | expected: " + expected +
                           " | computed: " + computed);
    }
    void note(const std::string& line) { r->lines.push_back("  " + line); }
};

template <typename T>
std::string str(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string vec_str(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

// ---- random complexes shared by the property criteria ---------------------

Graph1Complex random_graph(std::mt19937& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> vcount(2, max_vertices);
    const std::size_t nv = vcount(rng);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < nv; ++i) vertices.push_back("n" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> ecount(1, 2 * nv);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    std::vector<GraphEdge> edges;
    const std::size_t ne = ecount(rng);
    for (std::size_t i = 0; i < ne; ++i) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) b = (b + 1) % nv;
        edges.push_back({"e" + std::to_string(i), vertices[a], vertices[b]});
    }
    return Graph1Complex(std::move(vertices), std::move(edges));
}

ProductSubcomplex random_subcomplex(std::mt19937& rng, std::size_t max_factors,
                                    std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> fcount(1, max_factors);
    const std::size_t nf = fcount(rng);
    std::vector<Graph1Complex> factors;
    for (std::size_t i = 0; i < nf; ++i) factors.push_back(random_graph(rng, max_vertices));
    auto parent = std::make_shared<const ProductComplex>(std::move(factors));

    std::set<CellTuple> seed;
    std::uniform_int_distribution<std::size_t> scount(1, 8);
    const std::size_t wanted = scount(rng);
    for (std::size_t i = 0; i < wanted; ++i) {
        CellTuple cell;
        for (std::size_t f = 0; f < nf; ++f) {
            const Graph1Complex& g = parent->factor(f);
            std::uniform_int_distribution<std::size_t> which(0, g.edges().size() - 1);
            cell.components.push_back(g.edges()[which(rng)].id);
        }
        seed.insert(cell);
    }
    return ProductSubcomplex::closure(std::move(parent), seed);
}

std::vector<long long> graph_betti(const Graph1Complex& g) {
    HomologySummary h = homology_of(g);
    std::vector<long long> out = h.betti;
    out.resize(2, 0);
    return out;
}

// Regular model of a torus skeleton, independent of the zero-differential
// construction: every circle carries two vertices and two meridians, and a
// product cell lies in the n-skeleton iff at most n components leave the
// base vertex.
ProductSubcomplex torus_skeleton_oracle(std::size_t k, std::size_t n) {
    std::vector<Graph1Complex> factors(k, theta(2));
    auto parent = std::make_shared<const ProductComplex>(std::move(factors));
    std::set<CellTuple> cells;
    for (const auto& cell : parent->all_cells()) {
        std::size_t moved = 0;
        for (const auto& c : cell.components)
            if (c != "p") ++moved;
        if (moved <= n) cells.insert(cell);
    }
    return ProductSubcomplex(std::move(parent), std::move(cells));
}

std::vector<std::vector<std::size_t>> proper_index_subsets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<std::size_t> j;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) j.push_back(b);
        out.push_back(j);
    }
    return out;
}

// ---- the thirteen criteria -------------------------------------------------

void criterion_m0(Checker c) {
    for (long long m = 1; m <= 6; ++m) {
        ProductSubcomplex s = m0_surface(m);
        SurfaceReport r = surface_report(s);
        HomologySummary h = homology_of(s);
        std::string who = "m0-surface m=" + str(m);
        c.check(r.is_closed_surface, who + " closed surface", "true", str(r.is_closed_surface));
        c.check(r.orientable, who + " orientable", "true", str(r.orientable));
        c.check(r.genus == m, who + " genus", str(m), str(r.genus));
        c.check(r.chi == 2 - 2 * m, who + " chi", str(2 - 2 * m), str(r.chi));
        c.check(r.rank_h1 == 2 * m, who + " rank H1", str(2 * m), str(r.rank_h1));
        bool torsion_free = true;
        for (const auto& t : h.torsion) torsion_free = torsion_free && t.empty();
        c.check(torsion_free, who + " torsion", "none", h.to_string());
    }
}

void criterion_involution(Checker c) {
    for (long long m = 1; m <= 5; ++m) {
        ProductSubcomplex s = involution_surface(m);
        std::string who = "involution-surface m=" + str(m);
        c.check(swap_invariance_check(s), who + " swap-invariant", "true", "false");
        SurfaceReport r = surface_report(s);
        c.check(r.is_closed_surface && r.orientable, who + " closed orientable", "true",
                str(r.is_closed_surface) + "/" + str(r.orientable));
        c.check(r.genus == m, who + " genus", str(m), str(r.genus));
        ThetaDecomposeResult d = theta_decompose(s);
        c.check(d.ok, who + " theta-decomposition", "ok", d.reason);
        c.check(d.ok && 2 * static_cast<long long>(d.genus) == r.rank_h1,
                who + " 2*genus = rank H1", str(r.rank_h1), str(2 * d.genus));
    }
}

void criterion_cauty_odd(Checker c) {
    for (long long k = 2; k <= 5; ++k) {
        ProductSubcomplex s = cauty_odd_rank_surface(k);
        HomologySummary h = homology_of(s);
        std::string who = "cauty-odd k=" + str(k);
        long long b1 = h.betti.size() > 1 ? h.betti[1] : 0;
        long long b2 = h.betti.size() > 2 ? h.betti[2] : 0;
        c.check(b2 == 0, who + " b2 (non-orientable)", "0", str(b2));
        c.check(b1 == 2 * k + 1, who + " b1", str(2 * k + 1), str(b1));
        c.check(h.euler == -2 * k, who + " chi", str(-2 * k), str(h.euler));
        bool torsion_ok = h.torsion.size() > 1 && h.torsion[1] == std::vector<Int>{2};
        c.check(torsion_ok, who + " H1 torsion", "[Z/2]", h.to_string());

        ProductSubcomplex control = cauty_odd_rank_surface(k, true);
        HomologySummary hc = homology_of(control);
        long long cb2 = hc.betti.size() > 2 ? hc.betti[2] : 0;
        c.check(cb2 == 1, who + " all-same control b2 (orientable)", "1", str(cb2));
    }
}

void criterion_cauty_even(Checker c) {
    for (long long n : {3, 5, 7}) {
        ProductSubcomplex s = cauty_even_rank_surface(n);
        std::string who = "cauty-even n=" + str(n);
        SurfaceReport r = surface_report(s);
        c.check(r.is_closed_surface, who + " closed surface", "true", str(r.is_closed_surface));
        c.check(!r.orientable, who + " non-orientable", "true", str(!r.orientable));
        c.check(r.chi == 1 - 2 * n, who + " chi", str(1 - 2 * n), str(r.chi));
        c.check(r.rank_h1 == 2 * n, who + " b1", str(2 * n), str(r.rank_h1));
    }
    for (long long n : {4, 6}) {  // target ranks 8 and 12
        ProductSubcomplex s = cauty_even_rank_surface_plus(n);
        std::string who = "cauty-even-plus n=" + str(n);
        SurfaceReport r = surface_report(s);
        c.check(r.is_closed_surface, who + " closed surface", "true", str(r.is_closed_surface));
        c.check(!r.orientable, who + " non-orientable", "true", str(!r.orientable));
        c.check(r.chi == -2 * (n - 1) - 1, who + " chi", str(-2 * (n - 1) - 1), str(r.chi));
        c.check(r.rank_h1 == 2 * n, who + " b1", str(2 * n), str(r.rank_h1));
    }
}

void criterion_torus_skeleton(Checker c) {
    for (std::size_t k = 0; k <= 5; ++k)
        for (std::size_t n = 0; n <= k; ++n) {
            HomologySummary h = torus_skeleton_homology(k, n);
            for (std::size_t i = 0; i <= n; ++i)
                c.check(h.betti[i] == binomial(k, i),
                        "skeleton k=" + str(k) + " n=" + str(n) + " betti_" + str(i),
                        str(binomial(k, i)), str(h.betti[i]));
        }
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 0; n <= k; ++n) {
            HomologySummary model = torus_skeleton_homology(k, n);
            HomologySummary oracle = homology_of(torus_skeleton_oracle(k, n));
            c.check(model.betti == oracle.betti && oracle.torsion == model.torsion,
                    "skeleton k=" + str(k) + " n=" + str(n) + " vs regular oracle",
                    model.to_string(), oracle.to_string());
        }
}

void criterion_triple_torus(Checker c) {
    for (std::size_t n : {2u, 3u}) {
        TripleTorusReport r = triple_torus_report(n);
        std::string who = "triple-torus n=" + str(n);
        c.check(r.tori_ok, who + " torus profiles C(n,.)", "true", str(r.tori_ok));
        c.check(r.pairwise_ok, who + " pairwise profiles C(n-1,.)", "true", str(r.pairwise_ok));
        c.check(r.triple_nonvoid, who + " triple intersection nonempty", "true",
                str(r.triple_nonvoid));
        c.check(r.triple_not_large_torus, who + " triple profile C(n-2,.)", "true",
                vec_str(r.triple_profile));
    }
}

void criterion_projection(Checker c) {
    for (const auto& member : gallery()) {
        const auto* sub = std::get_if<ProductSubcomplex>(&member.complex);
        if (!sub) continue;
        const std::size_t n = sub->parent().factor_count();
        std::string who = member.name;
        for (const auto& p : member.params) who += " " + str(p);

        for (const auto& j : proper_index_subsets(n)) {
            c.check(property_c_reconstruction(*sub, j), who + " reconstruction J=" + str(j.size()),
                    "true", "false");
            c.check(property_d_monotonicity(*sub, j), who + " fiber monotonicity", "true",
                    "false");
            c.check(property_g_unions(*sub, j), who + " fiber unions", "true", "false");
        }
        for (std::size_t jx = 0; jx < n; ++jx)
            c.check(property_j_biconditional(*sub, jx),
                    who + " circle biconditional j=" + str(jx), "true", "false");

        RankBoundReport rb = rank_bound_assert(*sub);
        c.check(rb.ok, who + " rank bound / decomposition", "ok", rb.detail);
        c.check(rb.rank_h1 >= static_cast<long long>(n), who + " rank H1 >= n", str(n),
                str(rb.rank_h1));
    }
}

void criterion_theta_decompose(Checker c) {
    std::size_t surfaces = 0;
    for (const auto& member : gallery()) {
        const auto* sub = std::get_if<ProductSubcomplex>(&member.complex);
        if (!sub || sub->parent().factor_count() != 2) continue;
        // only surfaces inside products of theta graphs
        bool theta_factors = true;
        for (std::size_t i = 0; i < 2; ++i) {
            const Graph1Complex& g = sub->parent().factor(i);
            theta_factors = theta_factors && g.vertices().size() == 2;
        }
        if (!theta_factors) continue;
        ++surfaces;
        ThetaDecomposeResult d = theta_decompose(*sub);
        std::string who = member.name;
        for (const auto& p : member.params) who += " " + str(p);
        c.check(d.ok, who + " theta decomposition", "meridian sequence + circle cycle", d.reason);
    }
    c.check(surfaces >= 8, "theta-product gallery members", ">= 8", str(surfaces));
}

void criterion_collapse(Checker c) {
    for (const auto& member : gallery()) {
        const auto* sub = std::get_if<ProductSubcomplex>(&member.complex);
        if (!sub || sub->parent().factor_count() != 2 || sub->dimension() != 2) continue;
        HomologySummary h = homology_of(*sub);
        long long rank = h.betti.size() > 1 ? h.betti[1] : 0;
        if (rank > 2) continue;
        std::string who = member.name;
        for (const auto& p : member.params) who += " " + str(p);
        CoreClass cls = classify_core(greedy_collapse(to_regular2(*sub)).core);
        c.check(cls != CoreClass::Other, who + " core class", "point/graph/torus",
                to_string(cls));
    }
    {
        CoreClass cls = classify_core(greedy_collapse(to_regular2(punctured_torus())).core);
        c.check(cls == CoreClass::Quasi1ManifoldGraph, "punctured torus core",
                "quasi-1-manifold", to_string(cls));
    }
    for (const auto& fixture : {std::make_pair("dunce hat", dunce_hat()),
                                std::make_pair("bing house", bing_house())}) {
        const auto& [name, complex] = fixture;
        c.check(free_edges(complex).empty(), std::string(name) + " free edges", "none",
                str(free_edges(complex).size()));
        HomologySummary h = homology_of(complex);
        c.check(h.reduced_trivial(), std::string(name) + " reduced homology", "trivial",
                h.to_string());
        c.check(greedy_collapse(complex).steps.empty(), std::string(name) + " collapse moves",
                "0", str(greedy_collapse(complex).steps.size()));
    }
}

void criterion_tree_embed(Checker c) {
    const std::vector<std::pair<std::string, Regular2Complex>> inputs = {
        {"cone over theta(3)", cone_over_graph(theta(3))},
        {"triangulated disc", triangulated_disc(6)},
        {"3x3 grid square", grid_triangulated_square(3)},
    };
    for (const auto& [name, complex] : inputs) {
        CollapsePlan plan = collapse_to_point(complex);
        TreeEmbedding emb = tree_embed(complex, plan);
        VerifierReport check = verify_tree_embedding(emb, complex);
        std::string detail = "ok";
        if (!check.verdict && !check.witnesses.empty())
            detail = check.witnesses.front().cell + ": " + check.witnesses.front().reason;
        c.check(check.verdict, name + " tree embedding", "all checks pass", detail);
    }
}

void criterion_homology_integrity(Checker c) {
    std::mt19937 rng(20240811u);
    std::size_t bad = 0;
    for (std::size_t trial = 0; trial < 200; ++trial) {
        ProductSubcomplex sub = random_subcomplex(rng, 3, 6);
        HomologySummary h;
        try {
            h = homology_of(sub);  // validates dd = 0 and the chi identity
        } catch (const std::exception& ex) {
            ++bad;
            c.check(false, "random subcomplex " + str(trial), "valid chain complex", ex.what());
            continue;
        }
        if (sub.parent().factor_count() == 2) {
            HomologySummary viaRegular = homology_of(to_regular2(sub));
            if (!(viaRegular == h)) {
                ++bad;
                c.check(false, "random subcomplex " + str(trial) + " oracle equivalence",
                        h.to_string(), viaRegular.to_string());
            }
        }
        // subdivision invariance on a random factor edge
        std::uniform_int_distribution<std::size_t> fpick(0, sub.parent().factor_count() - 1);
        std::size_t f = fpick(rng);
        const auto& edges = sub.parent().factor(f).edges();
        if (!edges.empty()) {
            std::uniform_int_distribution<std::size_t> epick(0, edges.size() - 1);
            ProductSubcomplex divided = subdivide_factor_edge(sub, f, edges[epick(rng)].id);
            HomologySummary hd = homology_of(divided);
            if (!(hd == h)) {
                ++bad;
                c.check(false, "random subcomplex " + str(trial) + " subdivision invariance",
                        h.to_string(), hd.to_string());
            }
        }
    }
    c.check(bad == 0, "200 random product subcomplexes", "all pass", str(bad) + " failures");

    // Kuenneth rank identity and chi multiplicativity on full products.
    for (std::size_t trial = 0; trial < 20; ++trial) {
        Graph1Complex g = random_graph(rng, 5), h2 = random_graph(rng, 5);
        auto parent = std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{g, h2});
        HomologySummary product = homology_of(full_subcomplex(parent));
        std::vector<long long> bg = graph_betti(g), bh = graph_betti(h2);
        std::vector<long long> expected(3, 0);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) expected[i + j] += bg[i] * bh[j];
        std::vector<long long> got = product.betti;
        got.resize(3, 0);
        c.check(got == expected, "Kuenneth trial " + str(trial), vec_str(expected), vec_str(got));
        long long chi_g = bg[0] - bg[1], chi_h = bh[0] - bh[1];
        c.check(product.euler == chi_g * chi_h, "chi multiplicativity trial " + str(trial),
                str(chi_g * chi_h), str(product.euler));
    }
}

void criterion_tensor_power(Checker c) {
    std::mt19937 rng(7117u);
    std::uniform_int_distribution<int> summands(1, 3);
    std::uniform_int_distribution<int> order_pick(0, 8);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> kpick(1, 3);

    auto random_group = [&]() {
        std::vector<Int> orders;
        const int n = summands(rng);
        for (int i = 0; i < n; ++i) {
            int o = order_pick(rng);
            orders.push_back(o < 2 ? 0 : o);  // 0 or 2..8
        }
        return FgAbGroup::from_cyclic_orders(orders);
    };

    std::size_t failures = 0, nontrivial_cases = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        FgAbGroup a = random_group(), b = random_group(), g = random_group();
        std::vector<Int> da = a.generator_orders(), db = b.generator_orders();
        IntegerMatrix m(db.size(), da.size());
        for (std::size_t r = 0; r < db.size(); ++r)
            for (std::size_t col = 0; col < da.size(); ++col) {
                Int raw = entry(rng);
                if (da[col] == 0) {
                    m.at(r, col) = raw;
                } else if (db[r] == 0) {
                    m.at(r, col) = 0;  // torsion cannot map into a free summand
                } else {
                    Int step = db[r] / gcd_nonneg(db[r], da[col]);
                    m.at(r, col) = raw * step;
                }
            }
        GroupHom f{a, b, m};
        if (!well_defined(f)) {
            ++failures;
            c.check(false, "trial " + str(trial) + " hom construction", "well defined", "not");
            continue;
        }
        TensorPowerCheckReport report = tensor_power_check(f, g, kpick(rng));
        if (report.nontrivial_base) ++nontrivial_cases;
        if (!report.implication_holds) {
            ++failures;
            c.check(false, "trial " + str(trial) + " tensor power persistence", "holds",
                    report.detail);
        }
    }
    c.check(failures == 0, "1000 randomized tensor-power checks", "no counterexample",
            str(failures) + " failures");
    c.check(nontrivial_cases > 100, "nontrivial base cases exercised", "> 100",
            str(nontrivial_cases));
}

void criterion_diagonal_free(Checker c) {
    for (long long n : {4, 5}) {
        ProductSubcomplex s = diagonal_free_surface(n);
        std::string who = "diagonal-free-surface n=" + str(n);
        SurfaceReport r = surface_report(s);
        c.check(r.is_closed_surface, who + " closed surface", "true", str(r.is_closed_surface));
        c.check(diagonal_disjointness_check(s), who + " diagonal-disjoint", "true", "false");
        c.check(swap_invariance_check(s), who + " involution-invariant", "true", "false");
        for (std::size_t j = 0; j < 2; ++j) {
            bool surjective = project(s, {j}).cells().size() ==
                              s.parent().factor(j).vertices().size() +
                                  s.parent().factor(j).edges().size();
            c.check(surjective, who + " projection " + str(j) + " surjective", "true", "false");
        }
        c.check(r.chi == -2 * n, who + " chi", str(-2 * n), str(r.chi));
    }
}

struct CriterionSpec {
    std::string id;
    std::string name;
    double limit;
    std::function<void(Checker)> run;
};

const std::vector<CriterionSpec>& criteria() {
    static const std::vector<CriterionSpec> list = {
        {"A1", "m0-surfaces", 1.0, criterion_m0},
        {"A2", "involution-surfaces", 1.0, criterion_involution},
        {"A3", "cauty-odd", 2.0, criterion_cauty_odd},
        {"A4", "cauty-even", 5.0, criterion_cauty_even},
        {"A5", "torus-skeleton", 1.0, criterion_torus_skeleton},
        {"A6", "triple-torus", 1.0, criterion_triple_torus},
        {"A7", "projection-calculus", 5.0, criterion_projection},
        {"A8", "theta-decomposition", 1.0, criterion_theta_decompose},
        {"A9", "collapse-cores", 2.0, criterion_collapse},
        {"A10", "tree-embedding", 5.0, criterion_tree_embed},
        {"A11", "homology-integrity", 30.0, criterion_homology_integrity},
        {"A12", "tensor-power", 10.0, criterion_tensor_power},
        {"A13", "diagonal-free", 1.0, criterion_diagonal_free},
    };
    return list;
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& filter) {
    std::vector<CriterionResult> results;
    for (const auto& spec : criteria()) {
        if (!filter.empty() && spec.id.find(filter) == std::string::npos &&
            spec.name.find(filter) == std::string::npos)
            continue;
        CriterionResult r;
        r.id = spec.id;
        r.name = spec.name;
        r.limit = spec.limit;
        r.pass = true;
        auto start = std::chrono::steady_clock::now();
        try {
            spec.run(Checker{&r});
        } catch (const std::exception& ex) {
            r.pass = false;
            r.lines.push_back(std::string("  unexpected error: ") + ex.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.limit) {
            r.pass = false;
            r.lines.push_back("  time limit exceeded: " + std::to_string(r.seconds) + "s > " +
                              std::to_string(r.limit) + "s");
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << "  ["
       << (r.checks - r.failures) << "/" << r.checks << " checks]";
    os.precision(3);
    os << "  (" << std::fixed << r.seconds << "s, limit " << r.limit << "s)";
    return os.str();
}

} // namespace prodtop
