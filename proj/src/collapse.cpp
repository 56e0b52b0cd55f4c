#include "prodtop/collapse.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "prodtop/homology.hpp"

namespace prodtop {

namespace {

// Incidence tables of the ambient complex; collapse states are subsets.
struct CollapseContext {
    const Regular2Complex* k;
    std::map<std::string, std::vector<std::string>> edge_faces;    // edge -> faces
    std::map<std::string, std::vector<std::string>> vertex_edges;  // vertex -> edges
    std::map<std::string, std::set<std::string>> face_vertices;    // face -> boundary vertices

    explicit CollapseContext(const Regular2Complex& complex) : k(&complex) {
        for (const auto& e : complex.edges()) {
            vertex_edges[e.tail].push_back(e.id);
            vertex_edges[e.head].push_back(e.id);
        }
        for (const auto& f : complex.faces()) {
            for (const auto& step : f.boundary) edge_faces[step.edge].push_back(f.id);
            auto wv = complex.walk_vertices(f);
            face_vertices[f.id] = std::set<std::string>(wv.begin(), wv.end());
        }
    }
};

struct LiveState {
    std::set<std::string> vertices, edges, faces;

    static LiveState of(const Regular2Complex& k) {
        LiveState s;
        s.vertices.insert(k.vertices().begin(), k.vertices().end());
        for (const auto& e : k.edges()) s.edges.insert(e.id);
        for (const auto& f : k.faces()) s.faces.insert(f.id);
        return s;
    }

    bool is_point() const { return vertices.size() == 1 && edges.empty() && faces.empty(); }
};

std::vector<CollapseStep> live_free_pairs(const CollapseContext& ctx, const LiveState& s) {
    std::vector<CollapseStep> twodim, onedim;
    for (const auto& e : s.edges) {
        std::string coface;
        std::size_t count = 0;
        auto it = ctx.edge_faces.find(e);
        if (it != ctx.edge_faces.end())
            for (const auto& f : it->second)
                if (s.faces.count(f)) {
                    ++count;
                    coface = f;
                }
        if (count == 1) twodim.push_back({e, coface});
    }
    for (const auto& v : s.vertices) {
        std::string coface;
        std::size_t count = 0;
        auto it = ctx.vertex_edges.find(v);
        if (it != ctx.vertex_edges.end())
            for (const auto& e : it->second)
                if (s.edges.count(e)) {
                    ++count;
                    coface = e;
                }
        if (count != 1) continue;
        bool in_face = false;
        for (const auto& f : s.faces)
            if (ctx.face_vertices.at(f).count(v)) {
                in_face = true;
                break;
            }
        if (!in_face) onedim.push_back({v, coface});
    }
    std::sort(twodim.begin(), twodim.end());
    std::sort(onedim.begin(), onedim.end());
    twodim.insert(twodim.end(), onedim.begin(), onedim.end());
    return twodim;
}

void apply_step(LiveState& s, const CollapseStep& step, bool two_dimensional) {
    if (two_dimensional) {
        s.edges.erase(step.free_face);
        s.faces.erase(step.coface);
    } else {
        s.vertices.erase(step.free_face);
        s.edges.erase(step.coface);
    }
}

Regular2Complex restrict_to(const Regular2Complex& k, const LiveState& s) {
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    std::vector<Face2> faces;
    for (const auto& v : k.vertices())
        if (s.vertices.count(v)) vertices.push_back(v);
    for (const auto& e : k.edges())
        if (s.edges.count(e.id)) edges.push_back(e);
    for (const auto& f : k.faces())
        if (s.faces.count(f.id)) faces.push_back(f);
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

} // namespace

std::vector<CollapseStep> free_face_pairs(const Regular2Complex& k) {
    CollapseContext ctx(k);
    return live_free_pairs(ctx, LiveState::of(k));
}

CollapsePlan greedy_collapse(const Regular2Complex& k) {
    CollapseContext ctx(k);
    LiveState s = LiveState::of(k);

    // Incidence counters kept incrementally; candidate sets stay sorted so
    // the lexicographically smallest pair is always at the front.
    std::map<std::string, std::size_t> edge_face_count, vertex_edge_count, vertex_face_count;
    std::map<std::string, std::vector<std::string>> edge_vertices;
    for (const auto& e : k.edges()) {
        edge_face_count[e.id] = 0;
        edge_vertices[e.id] = {e.tail, e.head};
        ++vertex_edge_count[e.tail];
        ++vertex_edge_count[e.head];
    }
    for (const auto& v : k.vertices()) {
        vertex_edge_count.emplace(v, 0);
        vertex_face_count.emplace(v, 0);
    }
    for (const auto& f : k.faces()) {
        for (const auto& step : f.boundary) ++edge_face_count[step.edge];
        for (const auto& v : ctx.face_vertices.at(f.id)) ++vertex_face_count[v];
    }

    std::set<std::string> edge_candidates, vertex_candidates;
    auto unique_live_face = [&](const std::string& e) -> std::string {
        for (const auto& f : ctx.edge_faces.at(e))
            if (s.faces.count(f)) return f;
        return {};
    };
    auto unique_live_edge = [&](const std::string& v) -> std::string {
        for (const auto& e : ctx.vertex_edges.at(v))
            if (s.edges.count(e)) return e;
        return {};
    };
    auto refresh_edge = [&](const std::string& e) {
        if (s.edges.count(e) && edge_face_count[e] == 1)
            edge_candidates.insert(e);
        else
            edge_candidates.erase(e);
    };
    auto refresh_vertex = [&](const std::string& v) {
        if (s.vertices.count(v) && vertex_edge_count[v] == 1 && vertex_face_count[v] == 0)
            vertex_candidates.insert(v);
        else
            vertex_candidates.erase(v);
    };
    for (const auto& e : k.edges()) refresh_edge(e.id);
    for (const auto& v : k.vertices()) refresh_vertex(v);

    CollapsePlan plan;
    while (!edge_candidates.empty() || !vertex_candidates.empty()) {
        if (!edge_candidates.empty()) {
            const std::string e = *edge_candidates.begin();
            const std::string f = unique_live_face(e);
            s.edges.erase(e);
            s.faces.erase(f);
            edge_candidates.erase(e);
            for (const auto& be : k.face(f).boundary) {
                if (be.edge != e) --edge_face_count[be.edge];
                refresh_edge(be.edge);
            }
            for (const auto& v : ctx.face_vertices.at(f)) {
                --vertex_face_count[v];
                refresh_vertex(v);
            }
            for (const auto& v : edge_vertices.at(e)) {
                --vertex_edge_count[v];
                refresh_vertex(v);
            }
            plan.steps.push_back({e, f});
        } else {
            const std::string v = *vertex_candidates.begin();
            const std::string e = unique_live_edge(v);
            s.vertices.erase(v);
            s.edges.erase(e);
            vertex_candidates.erase(v);
            edge_candidates.erase(e);
            for (const auto& w : edge_vertices.at(e)) {
                --vertex_edge_count[w];
                refresh_vertex(w);
            }
            plan.steps.push_back({v, e});
        }
    }
    plan.core = restrict_to(k, s);
    return plan;
}

CollapseSearchResult exhaustive_collapsibility(const Regular2Complex& k, std::size_t budget) {
    if (budget < 1) throw std::invalid_argument("exhaustive_collapsibility: budget must be >= 1");
    CollapseContext ctx(k);

    std::vector<std::string> all;
    for (const auto& v : k.vertices()) all.push_back(v);
    for (const auto& e : k.edges()) all.push_back(e.id);
    for (const auto& f : k.faces()) all.push_back(f.id);

    auto encode = [&all](const LiveState& s) {
        std::string key(all.size(), '0');
        for (std::size_t i = 0; i < all.size(); ++i)
            if (s.vertices.count(all[i]) || s.edges.count(all[i]) || s.faces.count(all[i]))
                key[i] = '1';
        return key;
    };

    CollapseSearchResult result;
    std::unordered_set<std::string> visited;
    std::vector<CollapseStep> steps;
    bool out_of_budget = false;

    std::function<bool(LiveState&)> dfs = [&](LiveState& s) -> bool {
        if (s.is_point()) return true;
        if (result.nodes_expanded >= budget) {
            out_of_budget = true;
            return false;
        }
        if (!visited.insert(encode(s)).second) return false;
        ++result.nodes_expanded;
        for (const auto& step : live_free_pairs(ctx, s)) {
            bool two = s.edges.count(step.free_face) > 0;
            LiveState next = s;
            apply_step(next, step, two);
            steps.push_back(step);
            if (dfs(next)) return true;
            steps.pop_back();
            if (out_of_budget) return false;
        }
        return false;
    };

    LiveState start = LiveState::of(k);
    bool found = dfs(start);
    if (found) {
        result.status = CollapseStatus::Collapsible;
        result.plan.steps = steps;
        LiveState s = LiveState::of(k);
        for (const auto& step : steps) apply_step(s, step, s.edges.count(step.free_face) > 0);
        result.plan.core = restrict_to(k, s);
    } else {
        result.status = out_of_budget ? CollapseStatus::NotWithinBudget : CollapseStatus::Refuted;
        result.plan = greedy_collapse(k);
    }
    return result;
}

CollapsePlan collapse_to_point(const Regular2Complex& k, std::size_t budget) {
    CollapsePlan greedy = greedy_collapse(k);
    if (greedy.core.vertices().size() == 1 && greedy.core.edges().empty() &&
        greedy.core.faces().empty())
        return greedy;
    CollapseSearchResult search = exhaustive_collapsibility(k, budget);
    if (search.status == CollapseStatus::Collapsible) return search.plan;
    if (search.status == CollapseStatus::NotWithinBudget)
        throw std::runtime_error("collapse_to_point: search budget exhausted");
    throw std::invalid_argument("collapse_to_point: complex is not collapsible");
}

std::string to_string(CoreClass c) {
    switch (c) {
        case CoreClass::Point: return "point";
        case CoreClass::Quasi1ManifoldGraph: return "quasi-1-manifold";
        case CoreClass::Torus: return "torus";
        case CoreClass::Other: return "other";
    }
    return "other";
}

CoreClass classify_core(const Regular2Complex& core) {
    if (!free_face_pairs(core).empty())
        throw std::invalid_argument("classify_core: complex still has a free face");
    if (core.vertices().size() == 1 && core.edges().empty() && core.faces().empty())
        return CoreClass::Point;
    if (core.faces().empty() && !core.edges().empty()) {
        Graph1Complex g = core.one_skeleton();
        if (is_connected(g)) {
            bool endpoint_free = true;
            for (const auto& [v, d] : vertex_degrees(g))
                if (d < 2) endpoint_free = false;
            if (endpoint_free) return CoreClass::Quasi1ManifoldGraph;
        }
        return CoreClass::Other;
    }
    if (!core.faces().empty() && closed_surface_check(core).verdict) {
        HomologySummary h = homology_of(core);
        if (h.euler == 0 && h.betti.size() > 2 && h.betti[2] == 1) return CoreClass::Torus;
    }
    return CoreClass::Other;
}

namespace {

struct EmbedBuilder {
    std::vector<std::string> t1v{"x0"}, t2v{"y0"};
    std::vector<GraphEdge> t1e, t2e;
    std::size_t t1ctr = 0, t2ctr = 0;
    std::map<std::string, CellTuple> vertex_image;
    std::map<std::string, std::set<CellTuple>> assign;
    std::set<CellTuple> image_cells;
    EmbedStats stats;

    Graph1Complex tree1() const { return Graph1Complex(t1v, t1e); }
    Graph1Complex tree2() const { return Graph1Complex(t2v, t2e); }

    std::string grow_tree1(const std::string& at) {
        std::string v = "x" + std::to_string(++t1ctr);
        std::string e = "p" + std::to_string(t1ctr);
        t1v.push_back(v);
        t1e.push_back({e, at, v});
        ++stats.pendant_edges;
        return e;
    }
    std::string grow_tree2(const std::string& at) {
        std::string v = "y" + std::to_string(++t2ctr);
        std::string e = "q" + std::to_string(t2ctr);
        t2v.push_back(v);
        t2e.push_back({e, at, v});
        ++stats.pendant_edges;
        return e;
    }
    std::string tree1_leaf() const { return "x" + std::to_string(t1ctr); }
    std::string tree2_leaf() const { return "y" + std::to_string(t2ctr); }
};

struct OrientedProductEdge {
    CellTuple edge;
    CellTuple from;
    CellTuple to;
};

// Order the product edges of an input edge image into a path from one
// endpoint image to the other.
std::vector<OrientedProductEdge> walk_image_path(const std::set<CellTuple>& cells,
                                                 const Graph1Complex& t1,
                                                 const Graph1Complex& t2, const CellTuple& from,
                                                 const CellTuple& to) {
    auto endpoints = [&](const CellTuple& cell) -> std::pair<CellTuple, CellTuple> {
        const std::string& a = cell.components[0];
        const std::string& b = cell.components[1];
        if (t1.has_edge(a)) {
            const GraphEdge& e = t1.edge(a);
            return {CellTuple{{e.tail, b}}, CellTuple{{e.head, b}}};
        }
        const GraphEdge& e = t2.edge(b);
        return {CellTuple{{a, e.tail}}, CellTuple{{a, e.head}}};
    };

    std::map<CellTuple, std::vector<CellTuple>> incident;  // vertex -> edge cells
    std::size_t edge_count = 0;
    for (const auto& cell : cells) {
        bool is_edge = t1.has_edge(cell.components[0]) || t2.has_edge(cell.components[1]);
        if (!is_edge) continue;
        ++edge_count;
        auto [a, b] = endpoints(cell);
        incident[a].push_back(cell);
        incident[b].push_back(cell);
    }

    std::vector<OrientedProductEdge> path;
    std::set<CellTuple> used;
    CellTuple at = from;
    while (!(at == to) || path.size() < edge_count) {
        const auto it = incident.find(at);
        if (it == incident.end())
            throw std::logic_error("tree_embed: image path is broken at (" + tuple_id(at) + ")");
        CellTuple next_edge;
        bool found = false;
        for (const auto& cand : it->second)
            if (!used.count(cand)) {
                next_edge = cand;
                found = true;
                break;
            }
        if (!found)
            throw std::logic_error("tree_embed: image path cannot be completed");
        used.insert(next_edge);
        auto [a, b] = endpoints(next_edge);
        CellTuple nxt = (a == at) ? b : a;
        path.push_back({next_edge, at, nxt});
        at = nxt;
        if (path.size() > edge_count)
            throw std::logic_error("tree_embed: image path is not simple");
    }
    if (path.size() != edge_count)
        throw std::logic_error("tree_embed: image path does not use every edge");
    return path;
}

} // namespace

TreeEmbedding tree_embed(const Regular2Complex& k, const CollapsePlan& plan) {
    // Forward validation: every step must be an elementary collapse and the
    // final state a single vertex.
    CollapseContext ctx(k);
    LiveState s = LiveState::of(k);
    std::vector<bool> two_dimensional;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        auto legal = live_free_pairs(ctx, s);
        if (std::find(legal.begin(), legal.end(), plan.steps[i]) == legal.end())
            throw std::invalid_argument("tree_embed: step " + std::to_string(i) +
                                        " is not an elementary collapse");
        bool two = s.edges.count(plan.steps[i].free_face) > 0;
        two_dimensional.push_back(two);
        apply_step(s, plan.steps[i], two);
    }
    if (!s.is_point())
        throw std::invalid_argument("tree_embed: plan does not collapse the complex to a point");

    EmbedBuilder b;
    const std::string base_vertex = *s.vertices.begin();
    b.vertex_image[base_vertex] = CellTuple{{"x0", "y0"}};
    b.assign[base_vertex] = {b.vertex_image[base_vertex]};
    b.image_cells.insert(b.vertex_image[base_vertex]);

    for (std::size_t i = plan.steps.size(); i-- > 0;) {
        const CollapseStep& step = plan.steps[i];
        if (!two_dimensional[i]) {
            // Vertex-edge expansion: pendant edge on the second tree under
            // the image of the retained endpoint.
            const GraphEdge& e = k.edge(step.coface);
            const std::string& fresh = step.free_face;
            const std::string& kept = (e.tail == fresh) ? e.head : e.tail;
            const CellTuple& img = b.vertex_image.at(kept);
            std::string q = b.grow_tree2(img.components[1]);
            CellTuple leaf{{img.components[0], b.tree2_leaf()}};
            CellTuple edge_cell{{img.components[0], q}};
            b.vertex_image[fresh] = leaf;
            b.assign[fresh] = {leaf};
            b.assign[step.coface] = {edge_cell};
            b.image_cells.insert(leaf);
            b.image_cells.insert(edge_cell);
            ++b.stats.edge_expansions;
            continue;
        }

        // Edge-face expansion along the image of the attaching arc.
        const Face2& face = k.face(step.coface);
        const std::size_t n = face.boundary.size();
        std::size_t p = n;
        for (std::size_t t = 0; t < n; ++t)
            if (face.boundary[t].edge == step.free_face) p = t;
        if (p == n) throw std::logic_error("tree_embed: free edge missing from face boundary");

        Graph1Complex t1 = b.tree1(), t2 = b.tree2();

        std::vector<OrientedProductEdge> arc;
        std::set<CellTuple> arc_cells;  // closed image of the attaching arc
        {
            // Walk the boundary cycle from the end of the free edge around to
            // its start, concatenating the image paths of the arc edges.
            auto step_vertices = k.walk_vertices(face);
            for (std::size_t t = 1; t < n; ++t) {
                const DirectedEdgeRef& ref = face.boundary[(p + t) % n];
                const std::string start_v = step_vertices[(p + t) % n];
                const std::string end_v = step_vertices[(p + t + 1) % n];
                auto part = walk_image_path(b.assign.at(ref.edge), t1, t2,
                                            b.vertex_image.at(start_v),
                                            b.vertex_image.at(end_v));
                arc.insert(arc.end(), part.begin(), part.end());
            }
            for (const auto& oe : arc) {
                arc_cells.insert(oe.edge);
                arc_cells.insert(oe.from);
                arc_cells.insert(oe.to);
            }
            std::set<CellTuple> seen;
            for (const auto& oe : arc)
                if (!seen.insert(oe.edge).second)
                    throw std::logic_error("tree_embed: attaching arc image is not embedded");
        }
        const CellTuple arc_start = arc.front().from;
        const CellTuple arc_end = arc.back().to;

        // Maximal alternating runs: vertical runs keep the first coordinate
        // (a tree1 vertex), horizontal runs keep the second.
        struct Run {
            bool vertical;
            std::string constant;             // fixed vertex of the other tree
            std::vector<std::string> edges;   // covered tree edges, in order
        };
        std::vector<Run> runs;
        for (const auto& oe : arc) {
            bool vertical = t2.has_edge(oe.edge.components[1]);
            std::string constant = vertical ? oe.edge.components[0] : oe.edge.components[1];
            std::string tree_edge = vertical ? oe.edge.components[1] : oe.edge.components[0];
            if (runs.empty() || runs.back().vertical != vertical) {
                runs.push_back(Run{vertical, constant, {tree_edge}});
            } else {
                if (runs.back().constant != constant)
                    throw std::logic_error("tree_embed: run constant changed without a turn");
                runs.back().edges.push_back(tree_edge);
            }
        }

        // Pendant edges per run, strips over the runs, corner squares at the
        // turns between consecutive runs.
        std::vector<std::string> pendant(runs.size());
        std::set<CellTuple> disc_squares;
        for (std::size_t rix = 0; rix < runs.size(); ++rix) {
            const Run& run = runs[rix];
            if (run.vertical) {
                pendant[rix] = b.grow_tree1(run.constant);
                for (const auto& te : run.edges)
                    disc_squares.insert(CellTuple{{pendant[rix], te}});
            } else {
                pendant[rix] = b.grow_tree2(run.constant);
                for (const auto& te : run.edges)
                    disc_squares.insert(CellTuple{{te, pendant[rix]}});
            }
            ++b.stats.runs;
        }
        for (std::size_t rix = 0; rix + 1 < runs.size(); ++rix) {
            const std::string& vert = runs[rix].vertical ? pendant[rix] : pendant[rix + 1];
            const std::string& horz = runs[rix].vertical ? pendant[rix + 1] : pendant[rix];
            disc_squares.insert(CellTuple{{vert, horz}});
            ++b.stats.corners;
        }

        // Closure of the disc over the grown trees.
        Graph1Complex g1 = b.tree1(), g2 = b.tree2();
        auto parent = std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{g1, g2});
        std::set<CellTuple> disc_cells;
        for (const auto& sq : disc_squares) {
            auto closed = cell_closure(*parent, sq);
            disc_cells.insert(closed.begin(), closed.end());
        }

        // Boundary: edges meeting exactly one square, plus their endpoints.
        std::map<CellTuple, std::size_t> edge_use;
        for (const auto& sq : disc_squares)
            for (const auto& cell : proper_faces(*parent, sq))
                if (parent->dimension(cell) == 1) ++edge_use[cell];
        std::set<CellTuple> boundary_cells;
        for (const auto& [cell, uses] : edge_use)
            if (uses == 1) {
                boundary_cells.insert(cell);
                for (const auto& face_cell : proper_faces(*parent, cell))
                    boundary_cells.insert(face_cell);
            }

        std::set<CellTuple> interior;
        for (const auto& cell : disc_cells)
            if (!boundary_cells.count(cell)) interior.insert(cell);

        std::set<CellTuple> free_arc;
        for (const auto& cell : boundary_cells)
            if (!arc_cells.count(cell)) free_arc.insert(cell);
        free_arc.erase(arc_start);
        free_arc.erase(arc_end);

        {
            // The free boundary must run between the arc endpoints.
            std::set<CellTuple> with_ends = free_arc;
            with_ends.insert(arc_start);
            with_ends.insert(arc_end);
            std::set<CellTuple> path_edges;
            for (const auto& cell : with_ends)
                if (parent->dimension(cell) == 1) path_edges.insert(cell);
            walk_image_path(path_edges, g1, g2, arc_start, arc_end);
        }

        b.assign[step.free_face] = free_arc;
        b.assign[step.coface] = interior;
        b.image_cells.insert(disc_cells.begin(), disc_cells.end());
        ++b.stats.face_expansions;
    }

    Graph1Complex tree1 = b.tree1(), tree2 = b.tree2();
    auto parent =
        std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{tree1, tree2});
    return TreeEmbedding{std::move(tree1), std::move(tree2),
                         ProductSubcomplex::closure(std::move(parent), b.image_cells),
                         std::move(b.assign), b.stats};
}

VerifierReport verify_tree_embedding(const TreeEmbedding& t, const Regular2Complex& k) {
    VerifierReport r;
    if (!is_tree(t.tree1)) r.fail("tree1", "first factor is not a tree");
    if (!is_tree(t.tree2)) r.fail("tree2", "second factor is not a tree");

    // Assignment totality and open-cell disjointness.
    std::vector<std::string> input_cells = k.vertices();
    for (const auto& e : k.edges()) input_cells.push_back(e.id);
    for (const auto& f : k.faces()) input_cells.push_back(f.id);
    std::map<CellTuple, std::string> owner;
    for (const auto& id : input_cells) {
        auto it = t.assignment.find(id);
        if (it == t.assignment.end() || it->second.empty()) {
            r.fail(id, "input cell has no image");
            continue;
        }
        for (const auto& cell : it->second) {
            auto [pos, fresh] = owner.emplace(cell, id);
            if (!fresh)
                r.fail(id, "image overlaps the image of '" + pos->second + "' in open cell (" +
                               tuple_id(cell) + ")");
        }
    }
    std::size_t assigned = owner.size();
    if (assigned != t.image.cells().size())
        r.fail("image", "assignment covers " + std::to_string(assigned) + " of " +
                            std::to_string(t.image.cells().size()) + " image cells");
    for (const auto& [cell, who] : owner)
        if (!t.image.contains(cell)) r.fail(who, "assigned cell missing from image complex");

    const ProductComplex& parent = t.image.parent();

    auto image_of_vertex = [&](const std::string& v) -> const CellTuple& {
        return *t.assignment.at(v).begin();
    };

    for (const auto& v : k.vertices()) {
        auto it = t.assignment.find(v);
        if (it == t.assignment.end()) continue;
        if (it->second.size() != 1 || parent.dimension(*it->second.begin()) != 0)
            r.fail(v, "vertex image is not a single product vertex");
    }

    for (const auto& e : k.edges()) {
        auto it = t.assignment.find(e.id);
        if (it == t.assignment.end()) continue;
        std::set<CellTuple> path_edges, path_vertices;
        for (const auto& cell : it->second)
            (parent.dimension(cell) == 1 ? path_edges : path_vertices).insert(cell);
        try {
            auto walk = walk_image_path(path_edges, t.tree1, t.tree2, image_of_vertex(e.tail),
                                        image_of_vertex(e.head));
            std::set<CellTuple> interior;
            for (std::size_t i = 0; i + 1 < walk.size(); ++i) interior.insert(walk[i].to);
            if (interior != path_vertices)
                r.fail(e.id, "edge image vertices are not the interior of the path");
        } catch (const std::exception& ex) {
            r.fail(e.id, std::string("edge image is not an edge path: ") + ex.what());
        }
    }

    for (const auto& f : k.faces()) {
        auto it = t.assignment.find(f.id);
        if (it == t.assignment.end()) continue;
        std::set<CellTuple> disc;
        for (const auto& cell : it->second) {
            auto closed = cell_closure(parent, cell);
            disc.insert(closed.begin(), closed.end());
        }
        // Disc check: connected, interior edges in two squares, boundary a
        // single cycle, Euler characteristic one.
        std::map<CellTuple, std::size_t> edge_use;
        std::set<CellTuple> squares;
        long long chi = 0;
        for (const auto& cell : disc) {
            std::size_t d = parent.dimension(cell);
            chi += (d % 2 == 0) ? 1 : -1;
            if (d == 2) {
                squares.insert(cell);
                for (const auto& face_cell : proper_faces(parent, cell))
                    if (parent.dimension(face_cell) == 1) ++edge_use[face_cell];
            }
        }
        if (chi != 1) r.fail(f.id, "face image has Euler characteristic " + std::to_string(chi));
        if (squares.empty()) {
            r.fail(f.id, "face image contains no square");
            continue;
        }
        std::set<CellTuple> boundary_edges;
        for (const auto& [cell, uses] : edge_use) {
            if (uses == 1)
                boundary_edges.insert(cell);
            else if (uses != 2)
                r.fail(f.id, "face image edge (" + tuple_id(cell) + ") lies in " +
                                 std::to_string(uses) + " squares");
        }
        // Boundary must be a single closed cycle: every boundary vertex has
        // exactly two incident boundary edges and the edges are connected.
        std::map<CellTuple, std::vector<CellTuple>> bdry_adj;
        for (const auto& cell : boundary_edges)
            for (const auto& face_cell : proper_faces(parent, cell))
                bdry_adj[face_cell].push_back(cell);
        bool cycle = !boundary_edges.empty();
        for (const auto& [v, inc] : bdry_adj)
            if (inc.size() != 2) cycle = false;
        if (cycle) {
            std::set<CellTuple> seen;
            std::vector<CellTuple> stack{*boundary_edges.begin()};
            seen.insert(stack.back());
            while (!stack.empty()) {
                CellTuple cur = stack.back();
                stack.pop_back();
                for (const auto& face_cell : proper_faces(parent, cur)) {
                    if (parent.dimension(face_cell) != 0) continue;
                    for (const auto& nxt : bdry_adj[face_cell])
                        if (seen.insert(nxt).second) stack.push_back(nxt);
                }
            }
            cycle = seen.size() == boundary_edges.size();
        }
        if (!cycle) r.fail(f.id, "face image boundary is not a single cycle");

        // The boundary of the disc must be the image of the face boundary.
        std::set<CellTuple> expected;
        for (const auto& step : f.boundary) {
            const auto& cells = t.assignment.at(step.edge);
            expected.insert(cells.begin(), cells.end());
        }
        for (const auto& v : k.walk_vertices(f)) expected.insert(image_of_vertex(v));
        std::set<CellTuple> actual = boundary_edges;
        for (const auto& cell : boundary_edges)
            for (const auto& face_cell : proper_faces(parent, cell)) actual.insert(face_cell);
        if (expected != actual)
            r.fail(f.id, "face image boundary differs from the image of the boundary cycle");
    }

    HomologySummary h = homology_of(t.image);
    if (!h.reduced_trivial()) r.fail("image", "image homology is not trivial: " + h.to_string());

    CollapsePlan replay = greedy_collapse(to_regular2(t.image));
    if (!(replay.core.vertices().size() == 1 && replay.core.edges().empty() &&
          replay.core.faces().empty()))
        r.fail("image", "image does not collapse back to a point");

    return r;
}

} // namespace prodtop
