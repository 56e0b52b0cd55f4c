#include "prodtop/projection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prodtop/homology.hpp"
#include "prodtop/verifier.hpp"

namespace prodtop {

namespace {

void require_index_set(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    if (j.empty()) throw std::invalid_argument("projection: empty index set");
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] >= m.parent().factor_count())
            throw std::invalid_argument("projection: factor index out of range");
        if (i > 0 && j[i] <= j[i - 1])
            throw std::invalid_argument("projection: indices must be strictly increasing");
    }
}

CellTuple restrict_tuple(const CellTuple& cell, const std::vector<std::size_t>& j) {
    CellTuple out;
    for (std::size_t i : j) out.components.push_back(cell.components[i]);
    return out;
}

CellTuple combine_tuple(std::size_t n, const std::vector<std::size_t>& j, const CellTuple& a,
                        const std::vector<std::size_t>& jc, const CellTuple& b) {
    CellTuple out;
    out.components.resize(n);
    for (std::size_t i = 0; i < j.size(); ++i) out.components[j[i]] = a.components[i];
    for (std::size_t i = 0; i < jc.size(); ++i) out.components[jc[i]] = b.components[i];
    return out;
}

std::shared_ptr<const ProductComplex> sub_product(const ProductSubcomplex& m,
                                                  const std::vector<std::size_t>& j) {
    std::vector<Graph1Complex> factors;
    for (std::size_t i : j) factors.push_back(m.parent().factor(i));
    return std::make_shared<const ProductComplex>(std::move(factors));
}

void require_ramified(const ProductSubcomplex& m, const char* who) {
    std::size_t n = m.parent().factor_count();
    VerifierReport pre = ramified_manifold_check(m, n, false);
    if (!pre.verdict)
        throw std::invalid_argument(
            std::string(who) + ": input is not a ramified manifold complex in its top dimension (" +
            (pre.witnesses.empty() ? std::string("unknown") : pre.witnesses.front().reason) + ")");
}

} // namespace

std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& j) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(j.begin(), j.end(), i) == j.end()) out.push_back(i);
    return out;
}

ProductSubcomplex project(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    require_index_set(m, j);
    std::set<CellTuple> cells;
    for (const auto& cell : m.cells()) cells.insert(restrict_tuple(cell, j));
    return ProductSubcomplex(sub_product(m, j), std::move(cells));
}

ProductSubcomplex fiber_complex(const ProductSubcomplex& m, const std::vector<std::size_t>& j,
                                const CellTuple& tau) {
    require_index_set(m, j);
    const std::size_t n = m.parent().factor_count();
    if (j.size() >= n) throw std::invalid_argument("fiber_complex: index set must be proper");
    const std::vector<std::size_t> jc = complement_indices(n, j);

    ProductSubcomplex comp = project(m, jc);
    if (!comp.contains(tau))
        throw std::invalid_argument("fiber_complex: cell (" + tuple_id(tau) +
                                    ") is not in the complementary projection");

    auto parent_j = sub_product(m, j);
    auto top_fiber_cells = [&](const CellTuple& top_tau) {
        std::set<CellTuple> sigma;
        for (const auto& cell : m.cells()) {
            if (m.parent().dimension(cell) != n) continue;
            if (restrict_tuple(cell, jc) == top_tau) sigma.insert(restrict_tuple(cell, j));
        }
        return sigma;
    };

    std::set<CellTuple> collected;
    if (comp.parent().dimension(tau) == jc.size()) {
        collected = top_fiber_cells(tau);
    } else {
        for (const auto& top_tau : comp.cells_of_dim(jc.size())) {
            if (!cell_closure(comp.parent(), top_tau).count(tau)) continue;
            auto part = top_fiber_cells(top_tau);
            collected.insert(part.begin(), part.end());
        }
    }
    return ProductSubcomplex::closure(std::move(parent_j), collected);
}

Graph1Complex as_graph(const ProductSubcomplex& sub) {
    if (sub.parent().factor_count() != 1)
        throw std::invalid_argument("as_graph: subcomplex must live over a single factor");
    const Graph1Complex& factor = sub.parent().factor(0);
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    for (const auto& cell : sub.cells()) {
        const std::string& c = cell.components[0];
        if (factor.has_edge(c))
            edges.push_back(factor.edge(c));
        else
            vertices.push_back(c);
    }
    return Graph1Complex(std::move(vertices), std::move(edges));
}

FiberTable fiber_table(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    require_index_set(m, j);
    FiberTable table;
    table.j = j;
    const std::vector<std::size_t> jc = complement_indices(m.parent().factor_count(), j);
    ProductSubcomplex comp = project(m, jc);
    for (const auto& tau : comp.cells()) table.fibers.emplace(tau, fiber_complex(m, j, tau));
    return table;
}

bool fibers_all_circles(const ProductSubcomplex& m, std::size_t j) {
    require_ramified(m, "fibers_all_circles");
    const std::size_t n = m.parent().factor_count();
    if (j >= n) throw std::invalid_argument("fibers_all_circles: factor index out of range");
    const std::vector<std::size_t> js{j};
    const std::vector<std::size_t> jc = complement_indices(n, js);

    bool all = true;
    for (const auto& v : project(m, jc).cells_of_dim(0))
        if (!is_circle(as_graph(fiber_complex(m, js, v)))) {
            all = false;
            break;
        }
    bool projection_circle = is_circle(as_graph(project(m, js)));
    if (all != projection_circle)
        throw std::logic_error(
            "fibers_all_circles: vertex fibers and projection disagree on being circles");
    return all;
}

std::set<std::size_t> circle_projection_set(const ProductSubcomplex& m) {
    require_ramified(m, "circle_projection_set");
    std::set<std::size_t> out;
    for (std::size_t j = 0; j < m.parent().factor_count(); ++j)
        if (is_circle(as_graph(project(m, {j})))) out.insert(j);
    return out;
}

DecompositionResult product_decomposition(const ProductSubcomplex& m) {
    DecompositionResult r;
    r.circle_indices = circle_projection_set(m);
    const std::size_t n = m.parent().factor_count();

    for (std::size_t j : r.circle_indices) r.torus_part.emplace(j, as_graph(project(m, {j})));

    if (r.circle_indices.empty()) {
        r.residual = m;
        r.exact = true;  // trivially m = residual
        return r;
    }

    std::vector<std::size_t> jv(r.circle_indices.begin(), r.circle_indices.end());

    if (r.circle_indices.size() == n) {
        // With every projection a circle the product of the projections must
        // be m itself; compare against the full product of the circles.
        std::set<CellTuple> expected;
        std::function<void(std::size_t, CellTuple&)> rec = [&](std::size_t i, CellTuple& acc) {
            if (i == jv.size()) {
                expected.insert(acc);
                return;
            }
            const Graph1Complex& circle = r.torus_part.at(jv[i]);
            for (const auto& v : circle.vertices()) {
                acc.components.push_back(v);
                rec(i + 1, acc);
                acc.components.pop_back();
            }
            for (const auto& e : circle.edges()) {
                acc.components.push_back(e.id);
                rec(i + 1, acc);
                acc.components.pop_back();
            }
        };
        CellTuple acc;
        rec(0, acc);
        r.exact = (m.cells() == expected);
        return r;
    }

    const std::vector<std::size_t> jc = complement_indices(n, jv);
    ProductSubcomplex torus = project(m, jv);
    r.residual = project(m, jc);

    std::set<CellTuple> expected;
    for (const auto& t : torus.cells())
        for (const auto& rest : r.residual->cells())
            expected.insert(combine_tuple(n, jv, t, jc, rest));
    r.exact = (m.cells() == expected);
    return r;
}

RankBoundReport rank_bound_assert(const ProductSubcomplex& m) {
    require_ramified(m, "rank_bound_assert");
    RankBoundReport r;
    r.factors = m.parent().factor_count();
    HomologySummary h = homology_of(m);
    r.rank_h1 = h.betti.size() > 1 ? h.betti[1] : 0;
    r.circle_indices = circle_projection_set(m);

    std::ostringstream os;
    r.rank_ok = r.rank_h1 >= static_cast<long long>(r.factors);
    if (!r.rank_ok) os << "rank H1 = " << r.rank_h1 << " < n = " << r.factors << "; " << h.to_string();

    // Internal diagnostic: rank H1 also dominates the sum over factors of the
    // largest first betti number of a vertex fiber.
    long long fiber_rank_sum = 0;
    for (std::size_t j = 0; j < r.factors; ++j) {
        const std::vector<std::size_t> js{j};
        const std::vector<std::size_t> jc = complement_indices(r.factors, js);
        ProductSubcomplex comp = project(m, jc);
        long long best = 0;
        for (const auto& v : comp.cells_of_dim(0))
            best = std::max(best, first_betti(as_graph(fiber_complex(m, js, v))));
        fiber_rank_sum += best;
    }
    if (r.rank_h1 < fiber_rank_sum) {
        r.rank_ok = false;
        os << "rank H1 = " << r.rank_h1 << " below the vertex-fiber sum " << fiber_rank_sum;
    }

    const long long n = static_cast<long long>(r.factors);
    const long long k = r.rank_h1 - n;
    if (r.rank_ok && k < n) {
        if (static_cast<long long>(r.circle_indices.size()) < n - k) {
            r.decomposition_ok = false;
            os << "|J(M)| = " << r.circle_indices.size() << " < n - k = " << (n - k);
        } else {
            DecompositionResult d = product_decomposition(m);
            r.decomposition_ok = d.exact;
            if (!d.exact) os << "product decomposition is not exact";
        }
    }
    r.ok = r.rank_ok && r.decomposition_ok;
    r.detail = os.str();
    return r;
}

namespace {

bool theta_like(const Graph1Complex& g) {
    if (g.vertices().size() != 2 || g.edges().size() < 2) return false;
    for (const auto& e : g.edges())
        if (!((e.tail == g.vertices()[0] && e.head == g.vertices()[1]) ||
              (e.tail == g.vertices()[1] && e.head == g.vertices()[0])))
            return false;
    return true;
}

} // namespace

ThetaDecomposeResult theta_decompose(const ProductSubcomplex& m) {
    ThetaDecomposeResult r;
    if (m.parent().factor_count() != 2)
        throw std::invalid_argument("theta_decompose: parent must have two factors");
    if (!theta_like(m.parent().factor(0)) || !theta_like(m.parent().factor(1)))
        throw std::invalid_argument("theta_decompose: factors must be theta graphs");
    VerifierReport pre = pseudo_manifold_check(m, 2, true);
    if (!pre.verdict)
        throw std::invalid_argument("theta_decompose: input is not a simple pseudo 2-manifold complex");

    auto squares = m.cells_of_dim(2);
    auto second_fiber = [&](const std::string& sigma) {
        std::set<std::string> out;
        for (const auto& c : squares)
            if (c.components[0] == sigma) out.insert(c.components[1]);
        return out;
    };
    auto first_fiber = [&](const std::string& tau) {
        std::set<std::string> out;
        for (const auto& c : squares)
            if (c.components[1] == tau) out.insert(c.components[0]);
        return out;
    };

    // Deterministic start: lexicographically smallest first-factor meridian.
    std::string sigma0;
    for (const auto& c : squares) {
        if (sigma0.empty() || c.components[0] < sigma0) sigma0 = c.components[0];
    }
    if (sigma0.empty()) {
        r.reason = "no 2-cells";
        return r;
    }

    auto fiber_pair = [&](const std::set<std::string>& fiber, const std::string& owner,
                          const char* which) -> std::optional<std::pair<std::string, std::string>> {
        if (fiber.size() != 2) {
            r.reason = std::string(which) + " fiber of '" + owner + "' has " +
                       std::to_string(fiber.size()) + " meridians (circle of two required)";
            return std::nullopt;
        }
        auto it = fiber.begin();
        std::string a = *it++;
        return std::make_pair(a, *it);
    };

    auto p2 = fiber_pair(second_fiber(sigma0), sigma0, "second-factor");
    if (!p2) return r;

    std::vector<std::string> sigma{sigma0};
    std::vector<std::string> tau{std::min(p2->first, p2->second), std::max(p2->first, p2->second)};

    while (tau.back() != tau.front()) {
        auto p1 = fiber_pair(first_fiber(tau.back()), tau.back(), "first-factor");
        if (!p1) return r;
        std::string next_sigma;
        if (p1->first == sigma.back())
            next_sigma = p1->second;
        else if (p1->second == sigma.back())
            next_sigma = p1->first;
        else {
            r.reason = "first-factor fiber of '" + tau.back() + "' does not contain '" +
                       sigma.back() + "'";
            return r;
        }
        if (std::find(sigma.begin(), sigma.end(), next_sigma) != sigma.end()) {
            r.reason = "meridian sequence revisits '" + next_sigma + "'";
            return r;
        }
        sigma.push_back(next_sigma);

        auto pnext = fiber_pair(second_fiber(next_sigma), next_sigma, "second-factor");
        if (!pnext) return r;
        std::string next_tau;
        if (pnext->first == tau.back())
            next_tau = pnext->second;
        else if (pnext->second == tau.back())
            next_tau = pnext->first;
        else {
            r.reason = "second-factor fiber of '" + next_sigma + "' does not contain '" +
                       tau.back() + "'";
            return r;
        }
        if (next_tau == tau.front()) break;  // cycle closes
        if (std::find(tau.begin(), tau.end(), next_tau) != tau.end()) {
            r.reason = "circle cycle revisits '" + next_tau + "'";
            return r;
        }
        tau.push_back(next_tau);
    }

    // Reassemble and compare against the 2-cell set of m.
    std::set<CellTuple> rebuilt;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const std::string& t0 = tau[i % tau.size()];
        const std::string& t1 = tau[(i + 1) % tau.size()];
        rebuilt.insert(CellTuple{{sigma[i], t0}});
        rebuilt.insert(CellTuple{{sigma[i], t1}});
    }
    if (rebuilt != squares) {
        r.reason = "decomposition does not exhaust the 2-cells";
        return r;
    }

    r.meridians = sigma;
    r.circle_meridians = tau;
    r.genus = sigma.size() - 1;

    HomologySummary h = homology_of(m);
    long long rank = h.betti.size() > 1 ? h.betti[1] : 0;
    if (rank != 2 * static_cast<long long>(r.genus)) {
        r.reason = "genus " + std::to_string(r.genus) + " does not match rank H1 = " +
                   std::to_string(rank);
        return r;
    }
    r.ok = true;
    return r;
}

bool property_c_reconstruction(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    const std::size_t n = m.parent().factor_count();
    const std::vector<std::size_t> jc = complement_indices(n, j);
    ProductSubcomplex comp = project(m, jc);

    std::set<CellTuple> rebuilt;
    for (const auto& tau : comp.cells_of_dim(jc.size())) {
        ProductSubcomplex fiber = fiber_complex(m, j, tau);
        for (const auto& sigma : fiber.cells_of_dim(j.size())) {
            CellTuple whole = combine_tuple(n, j, sigma, jc, tau);
            auto closed = cell_closure(m.parent(), whole);
            rebuilt.insert(closed.begin(), closed.end());
        }
    }
    return rebuilt == m.cells();
}

bool property_d_monotonicity(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    FiberTable table = fiber_table(m, j);
    const std::vector<std::size_t> jc = complement_indices(m.parent().factor_count(), j);
    ProductSubcomplex comp = project(m, jc);
    for (const auto& [tau_big, fiber_big] : table.fibers) {
        for (const auto& tau : proper_faces(comp.parent(), tau_big)) {
            const ProductSubcomplex& fiber_small = table.fibers.at(tau);
            for (const auto& c : fiber_big.cells())
                if (!fiber_small.contains(c)) return false;
        }
    }
    return true;
}

bool property_g_unions(const ProductSubcomplex& m, const std::vector<std::size_t>& j) {
    const std::vector<std::size_t> jc = complement_indices(m.parent().factor_count(), j);
    ProductSubcomplex proj = project(m, j);
    ProductSubcomplex comp = project(m, jc);
    for (std::size_t k = 0; k <= jc.size(); ++k) {
        std::set<CellTuple> uni;
        for (const auto& tau : comp.cells_of_dim(k)) {
            const auto fiber = fiber_complex(m, j, tau);
            uni.insert(fiber.cells().begin(), fiber.cells().end());
        }
        if (uni != proj.cells()) return false;
    }
    return true;
}

bool property_j_biconditional(const ProductSubcomplex& m, std::size_t j) {
    const std::size_t n = m.parent().factor_count();
    const std::vector<std::size_t> js{j};
    const std::vector<std::size_t> jc = complement_indices(n, js);
    bool all = true;
    for (const auto& v : project(m, jc).cells_of_dim(0))
        if (!is_circle(as_graph(fiber_complex(m, js, v)))) {
            all = false;
            break;
        }
    return all == is_circle(as_graph(project(m, js)));
}

} // namespace prodtop
