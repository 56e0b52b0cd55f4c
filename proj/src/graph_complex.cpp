#include "prodtop/graph_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodtop {

Graph1Complex::Graph1Complex(std::vector<std::string> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });

    for (const auto& v : vertices_)
        if (!vertex_set_.insert(v).second)
            throw std::invalid_argument("Graph1Complex: duplicate vertex id '" + v + "'");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const GraphEdge& e = edges_[i];
        if (vertex_set_.count(e.id))
            throw std::invalid_argument("Graph1Complex: edge id collides with vertex id '" +
                                        e.id + "'");
        if (!edge_index_.emplace(e.id, i).second)
            throw std::invalid_argument("Graph1Complex: duplicate edge id '" + e.id + "'");
        if (e.tail == e.head)
            throw std::invalid_argument(
                "Graph1Complex: edge '" + e.id +
                "' is a loop (regularity requires distinct endpoints)");
        if (!vertex_set_.count(e.tail) || !vertex_set_.count(e.head))
            throw std::invalid_argument("Graph1Complex: edge '" + e.id +
                                        "' references an undeclared vertex");
    }
}

const GraphEdge& Graph1Complex::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw std::invalid_argument("Graph1Complex: unknown edge id '" + id + "'");
    return edges_[it->second];
}

std::map<std::string, std::size_t> vertex_degrees(const Graph1Complex& g) {
    std::map<std::string, std::size_t> deg;
    for (const auto& v : g.vertices()) deg[v] = 0;
    for (const auto& e : g.edges()) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    return deg;
}

std::size_t connected_components(const Graph1Complex& g) {
    std::map<std::string, std::string> parent;
    for (const auto& v : g.vertices()) parent[v] = v;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) {
        std::string r = x;
        while (parent[r] != r) r = parent[r];
        return r;
    };
    for (const auto& e : g.edges()) parent[find(e.tail)] = find(e.head);
    std::set<std::string> roots;
    for (const auto& v : g.vertices()) roots.insert(find(v));
    return roots.size();
}

bool is_connected(const Graph1Complex& g) {
    return !g.vertices().empty() && connected_components(g) == 1;
}

long long first_betti(const Graph1Complex& g) {
    if (g.vertices().empty()) return 0;
    return static_cast<long long>(g.edges().size()) -
           static_cast<long long>(g.vertices().size()) +
           static_cast<long long>(connected_components(g));
}

bool is_tree(const Graph1Complex& g) { return is_connected(g) && first_betti(g) == 0; }

bool is_circle(const Graph1Complex& g) {
    if (!is_connected(g)) return false;
    for (const auto& [v, d] : vertex_degrees(g))
        if (d != 2) return false;
    return !g.edges().empty();
}

namespace {

std::string fresh_id(const std::string& base, const std::set<std::string>& used) {
    std::string id = base;
    while (used.count(id)) id += "'";
    return id;
}

std::set<std::string> all_ids(const Graph1Complex& g) {
    std::set<std::string> ids(g.vertices().begin(), g.vertices().end());
    for (const auto& e : g.edges()) ids.insert(e.id);
    return ids;
}

} // namespace

Graph1Complex subdivide_edge(const Graph1Complex& g, const std::string& edge_id) {
    const GraphEdge e = g.edge(edge_id);  // throws on unknown id
    std::set<std::string> used = all_ids(g);
    std::string mid = fresh_id(edge_id + ".m", used);
    used.insert(mid);
    std::string first = fresh_id(edge_id + ".a", used);
    used.insert(first);
    std::string second = fresh_id(edge_id + ".b", used);

    std::vector<std::string> vertices = g.vertices();
    vertices.push_back(mid);
    std::vector<GraphEdge> edges;
    for (const auto& f : g.edges())
        if (f.id != edge_id) edges.push_back(f);
    edges.push_back(GraphEdge{first, e.tail, mid});
    edges.push_back(GraphEdge{second, mid, e.head});
    return Graph1Complex(std::move(vertices), std::move(edges));
}

Graph1Complex wedge(const Graph1Complex& g1, const std::string& v1, const Graph1Complex& g2,
                    const std::string& v2) {
    if (!g1.has_vertex(v1))
        throw std::invalid_argument("wedge: unknown vertex '" + v1 + "' in first graph");
    if (!g2.has_vertex(v2))
        throw std::invalid_argument("wedge: unknown vertex '" + v2 + "' in second graph");

    std::set<std::string> used = all_ids(g1);
    std::map<std::string, std::string> rename;
    for (const auto& v : g2.vertices()) {
        if (v == v2) {
            rename[v] = v1;
            continue;
        }
        std::string id = fresh_id(v, used);
        used.insert(id);
        rename[v] = id;
    }

    std::vector<std::string> vertices = g1.vertices();
    for (const auto& v : g2.vertices())
        if (v != v2) vertices.push_back(rename[v]);

    std::vector<GraphEdge> edges = g1.edges();
    for (const auto& e : g2.edges()) {
        std::string id = fresh_id(e.id, used);
        used.insert(id);
        edges.push_back(GraphEdge{id, rename[e.tail], rename[e.head]});
    }
    return Graph1Complex(std::move(vertices), std::move(edges));
}

} // namespace prodtop
