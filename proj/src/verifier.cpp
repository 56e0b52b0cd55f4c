#include "prodtop/verifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace prodtop {

void IncidenceComplex::finish() {
    cofacets_.assign(cells_.size(), {});
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        cofacets_[d].assign(cells_[d].size(), {});
        for (std::size_t i = 0; i < cells_[d].size(); ++i) index_[cells_[d][i]] = {d, i};
    }
    for (std::size_t d = 1; d < cells_.size(); ++d)
        for (std::size_t i = 0; i < cells_[d].size(); ++i)
            for (std::size_t f : facets_[d][i]) cofacets_[d - 1][f].push_back(i);
}

IncidenceComplex IncidenceComplex::of(const Regular2Complex& k) {
    IncidenceComplex x;
    x.cells_.resize(3);
    x.facets_.resize(3);
    std::map<std::string, std::size_t> vidx, eidx;
    for (const auto& v : k.vertices()) {
        vidx[v] = x.cells_[0].size();
        x.cells_[0].push_back(v);
    }
    x.facets_[0].assign(x.cells_[0].size(), {});
    for (const auto& e : k.edges()) {
        eidx[e.id] = x.cells_[1].size();
        x.cells_[1].push_back(e.id);
        x.facets_[1].push_back({vidx.at(e.tail), vidx.at(e.head)});
    }
    for (const auto& f : k.faces()) {
        x.cells_[2].push_back(f.id);
        std::vector<std::size_t> fs;
        for (const auto& step : f.boundary) fs.push_back(eidx.at(step.edge));
        std::sort(fs.begin(), fs.end());
        x.facets_[2].push_back(std::move(fs));
    }
    while (x.cells_.size() > 1 && x.cells_.back().empty()) {
        x.cells_.pop_back();
        x.facets_.pop_back();
    }
    x.finish();
    return x;
}

IncidenceComplex IncidenceComplex::of(const ProductSubcomplex& sub) {
    IncidenceComplex x;
    const ProductComplex& parent = sub.parent();
    int top = sub.dimension();
    if (top < 0) {
        x.cells_.resize(1);
        x.facets_.resize(1);
        x.finish();
        return x;
    }
    x.cells_.resize(top + 1);
    x.facets_.resize(top + 1);
    std::map<CellTuple, std::pair<std::size_t, std::size_t>> where;
    for (const auto& cell : sub.cells()) {
        std::size_t d = parent.dimension(cell);
        where[cell] = {d, x.cells_[d].size()};
        x.cells_[d].push_back(tuple_id(cell));
    }
    for (std::size_t d = 0; d <= static_cast<std::size_t>(top); ++d)
        x.facets_[d].assign(x.cells_[d].size(), {});
    for (const auto& cell : sub.cells()) {
        auto [d, i] = where.at(cell);
        if (d == 0) continue;
        for (std::size_t p = 0; p < cell.components.size(); ++p) {
            if (!parent.is_edge_component(p, cell.components[p])) continue;
            const GraphEdge& e = parent.factor(p).edge(cell.components[p]);
            for (const std::string& end : {e.tail, e.head}) {
                CellTuple face = cell;
                face.components[p] = end;
                x.facets_[d][i].push_back(where.at(face).second);
            }
        }
        std::sort(x.facets_[d][i].begin(), x.facets_[d][i].end());
    }
    x.finish();
    return x;
}

int IncidenceComplex::top_dim() const {
    for (int d = static_cast<int>(cells_.size()) - 1; d >= 0; --d)
        if (!cells_[d].empty()) return d;
    return -1;
}

std::optional<std::pair<std::size_t, std::size_t>> IncidenceComplex::find(
    const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool IncidenceComplex::empty() const { return top_dim() < 0; }

std::size_t incidence_count(const IncidenceComplex& x, const std::string& cell_id) {
    auto pos = x.find(cell_id);
    if (!pos) throw std::invalid_argument("incidence_count: unknown cell '" + cell_id + "'");
    return x.cofacets(pos->first, pos->second).size();
}

std::size_t incidence_count(const Regular2Complex& k, const std::string& cell_id) {
    return incidence_count(IncidenceComplex::of(k), cell_id);
}

std::size_t incidence_count(const ProductSubcomplex& sub, const std::string& cell_id) {
    return incidence_count(IncidenceComplex::of(sub), cell_id);
}

namespace {

VerifierReport manifold_check(const IncidenceComplex& x, std::size_t n, bool simple,
                              bool exactly_two) {
    VerifierReport r;
    if (x.empty()) {
        r.fail("", "complex is empty");
        return r;
    }
    if (x.top_dim() > static_cast<int>(n)) {
        r.fail(x.cells(x.top_dim()).front(), "cell of dimension above n present");
        return r;
    }
    if (x.count(n) == 0) {
        r.fail("", "no n-cells present");
        return r;
    }

    // Mark everything lying under some n-cell.
    std::vector<std::vector<bool>> covered(n + 1);
    for (std::size_t d = 0; d <= n; ++d) covered[d].assign(x.count(d), false);
    std::function<void(std::size_t, std::size_t)> sweep = [&](std::size_t d, std::size_t i) {
        if (covered[d][i]) return;
        covered[d][i] = true;
        if (d == 0) return;
        for (std::size_t f : x.facets(d, i)) sweep(d - 1, f);
    };
    for (std::size_t i = 0; i < x.count(n); ++i) sweep(n, i);
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t i = 0; i < x.count(d); ++i)
            if (!covered[d][i]) r.fail(x.cells(d)[i], "not a face of an n-cell");

    if (n >= 1)
        for (std::size_t i = 0; i < x.count(n - 1); ++i) {
            std::size_t c = x.cofacets(n - 1, i).size();
            bool ok = exactly_two ? c == 2 : c >= 2;
            if (!ok)
                r.fail(x.cells(n - 1)[i], "incident with " + std::to_string(c) + " n-cells (" +
                                              (exactly_two ? "exactly two" : "at least two") +
                                              " required)");
        }

    if (simple && n >= 1 && x.count(n) > 1) {
        std::vector<std::size_t> comp(x.count(n));
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
            while (comp[a] != a) a = comp[a] = comp[comp[a]];
            return a;
        };
        for (std::size_t i = 0; i < x.count(n - 1); ++i) {
            const auto& up = x.cofacets(n - 1, i);
            for (std::size_t t = 1; t < up.size(); ++t) comp[find(up[0])] = find(up[t]);
        }
        for (std::size_t i = 1; i < x.count(n); ++i)
            if (find(i) != find(0)) {
                r.fail(x.cells(n)[i], "n-cells are not chain connected");
                break;
            }
    }
    return r;
}

} // namespace

VerifierReport pseudo_manifold_check(const IncidenceComplex& x, std::size_t n, bool simple) {
    return manifold_check(x, n, simple, true);
}
VerifierReport pseudo_manifold_check(const Regular2Complex& k, std::size_t n, bool simple) {
    return manifold_check(IncidenceComplex::of(k), n, simple, true);
}
VerifierReport pseudo_manifold_check(const ProductSubcomplex& sub, std::size_t n, bool simple) {
    return manifold_check(IncidenceComplex::of(sub), n, simple, true);
}

VerifierReport ramified_manifold_check(const IncidenceComplex& x, std::size_t n, bool simple) {
    return manifold_check(x, n, simple, false);
}
VerifierReport ramified_manifold_check(const Regular2Complex& k, std::size_t n, bool simple) {
    return manifold_check(IncidenceComplex::of(k), n, simple, false);
}
VerifierReport ramified_manifold_check(const ProductSubcomplex& sub, std::size_t n, bool simple) {
    return manifold_check(IncidenceComplex::of(sub), n, simple, false);
}

std::set<std::string> free_edges(const Regular2Complex& k) {
    IncidenceComplex x = IncidenceComplex::of(k);
    std::set<std::string> out;
    for (const auto& e : k.edges())
        if (incidence_count(x, e.id) == 1) out.insert(e.id);
    return out;
}

VerifierReport closed_surface_check(const Regular2Complex& k) {
    VerifierReport r;
    if (k.empty()) {
        r.fail("", "complex is empty");
        return r;
    }

    IncidenceComplex x = IncidenceComplex::of(k);

    // Connectivity over the cell incidence graph.
    {
        std::map<std::string, std::string> parent;
        auto add = [&](const std::string& id) { parent.emplace(id, id); };
        for (const auto& v : k.vertices()) add(v);
        for (const auto& e : k.edges()) add(e.id);
        for (const auto& f : k.faces()) add(f.id);
        std::function<std::string(std::string)> find = [&](std::string a) {
            while (parent[a] != a) a = parent[a];
            return a;
        };
        auto join = [&](const std::string& a, const std::string& b) { parent[find(a)] = find(b); };
        for (const auto& e : k.edges()) {
            join(e.id, e.tail);
            join(e.id, e.head);
        }
        for (const auto& f : k.faces())
            for (const auto& step : f.boundary) join(f.id, step.edge);
        std::set<std::string> roots;
        for (auto& [id, p] : parent) roots.insert(find(id));
        if (roots.size() > 1) r.fail(*std::next(roots.begin()), "complex is not connected");
    }

    for (const auto& e : k.edges()) {
        std::size_t c = incidence_count(x, e.id);
        if (c != 2)
            r.fail(e.id, "edge incident with " + std::to_string(c) + " faces (2 required)");
    }

    // Vertex links: nodes are incident edges, one link edge per face corner.
    for (const auto& v : k.vertices()) {
        std::set<std::string> nodes;
        for (const auto& e : k.edges())
            if (e.tail == v || e.head == v) nodes.insert(e.id);
        if (nodes.empty()) {
            r.fail(v, "isolated vertex");
            continue;
        }
        std::vector<std::pair<std::string, std::string>> corners;
        for (const auto& f : k.faces()) {
            const std::size_t n = f.boundary.size();
            std::vector<std::string> ends = k.walk_vertices(f);  // start vertex of each step
            for (std::size_t s = 0; s < n; ++s) {
                // corner between step s and step s+1 sits at start of step s+1
                if (ends[(s + 1) % n] == v)
                    corners.emplace_back(f.boundary[s].edge, f.boundary[(s + 1) % n].edge);
            }
        }
        std::map<std::string, std::size_t> degree;
        std::map<std::string, std::string> parent;
        for (const auto& nidx : nodes) parent[nidx] = nidx;
        std::function<std::string(std::string)> find = [&](std::string a) {
            while (parent[a] != a) a = parent[a];
            return a;
        };
        bool bad = false;
        for (const auto& [a, b] : corners) {
            if (!nodes.count(a) || !nodes.count(b)) {
                bad = true;
                break;
            }
            ++degree[a];
            ++degree[b];
            parent[find(a)] = find(b);
        }
        if (bad) {
            r.fail(v, "link references an edge not incident with the vertex");
            continue;
        }
        bool cycle = corners.size() == nodes.size();
        for (const auto& nidx : nodes)
            if (degree[nidx] != 2) cycle = false;
        std::set<std::string> roots;
        for (const auto& nidx : nodes) roots.insert(find(nidx));
        if (roots.size() != 1) cycle = false;
        if (!cycle) r.fail(v, "vertex link is not a single cycle");
    }
    return r;
}

std::vector<std::vector<std::string>> combinatorial_components(const IncidenceComplex& x,
                                                               std::size_t n) {
    VerifierReport pre = ramified_manifold_check(x, n, false);
    if (!pre.verdict)
        throw std::invalid_argument(
            "combinatorial_components: input is not a ramified n-manifold complex (" +
            (pre.witnesses.empty() ? std::string("empty") : pre.witnesses.front().reason) + ")");

    std::vector<std::size_t> comp(x.count(n));
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (comp[a] != a) a = comp[a] = comp[comp[a]];
        return a;
    };
    if (n >= 1)
        for (std::size_t i = 0; i < x.count(n - 1); ++i) {
            const auto& up = x.cofacets(n - 1, i);
            for (std::size_t t = 1; t < up.size(); ++t) comp[find(up[0])] = find(up[t]);
        }

    std::map<std::size_t, std::vector<std::string>> classes;
    for (std::size_t i = 0; i < x.count(n); ++i) classes[find(i)].push_back(x.cells(n)[i]);

    // Closures of distinct components may only meet in dimension <= n-2.
    std::vector<std::set<std::string>> closures;
    for (const auto& [root, members] : classes) {
        std::set<std::string> closure;
        std::function<void(std::size_t, std::size_t)> sweep = [&](std::size_t d, std::size_t i) {
            if (!closure.insert(x.cells(d)[i]).second) return;
            if (d == 0) return;
            for (std::size_t f : x.facets(d, i)) sweep(d - 1, f);
        };
        for (const auto& id : members) {
            auto pos = x.find(id);
            sweep(pos->first, pos->second);
        }
        closures.push_back(std::move(closure));
    }
    for (std::size_t a = 0; a < closures.size(); ++a)
        for (std::size_t b = a + 1; b < closures.size(); ++b)
            for (const auto& id : closures[a]) {
                if (!closures[b].count(id)) continue;
                auto pos = x.find(id);
                if (pos->first + 1 >= n)
                    throw std::logic_error(
                        "combinatorial_components: component closures share the high-dimensional "
                        "cell '" +
                        id + "'");
            }

    std::vector<std::vector<std::string>> out;
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    return out;
}

std::vector<std::vector<std::string>> combinatorial_components(const Regular2Complex& k,
                                                               std::size_t n) {
    return combinatorial_components(IncidenceComplex::of(k), n);
}

std::vector<std::vector<std::string>> combinatorial_components(const ProductSubcomplex& sub,
                                                               std::size_t n) {
    return combinatorial_components(IncidenceComplex::of(sub), n);
}

} // namespace prodtop
