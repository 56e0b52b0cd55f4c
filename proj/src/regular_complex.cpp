#include "prodtop/regular_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodtop {

Regular2Complex::Regular2Complex(std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                                 std::vector<Face2> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
    std::sort(faces_.begin(), faces_.end(),
              [](const Face2& a, const Face2& b) { return a.id < b.id; });

    std::set<std::string> ids;
    auto claim = [&ids](const std::string& id, const char* kind) {
        if (!ids.insert(id).second)
            throw std::invalid_argument(std::string("Regular2Complex: duplicate ") + kind +
                                        " id '" + id + "'");
    };

    for (const auto& v : vertices_) {
        claim(v, "vertex");
        vertex_set_.insert(v);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const GraphEdge& e = edges_[i];
        claim(e.id, "edge");
        edge_index_.emplace(e.id, i);
        if (e.tail == e.head)
            throw std::invalid_argument("Regular2Complex: edge '" + e.id + "' is a loop");
        if (!vertex_set_.count(e.tail) || !vertex_set_.count(e.head))
            throw std::invalid_argument("Regular2Complex: edge '" + e.id +
                                        "' references an undeclared vertex");
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        const Face2& f = faces_[i];
        claim(f.id, "face");
        face_index_.emplace(f.id, i);
        if (f.boundary.size() < 2)
            throw std::invalid_argument("Regular2Complex: face '" + f.id +
                                        "' has boundary shorter than 2");
        std::set<std::string> seen_edges;
        for (const auto& step : f.boundary) {
            if (!edge_index_.count(step.edge))
                throw std::invalid_argument("Regular2Complex: face '" + f.id +
                                            "' references missing edge '" + step.edge + "'");
            if (!seen_edges.insert(step.edge).second)
                throw std::invalid_argument("Regular2Complex: face '" + f.id +
                                            "' repeats edge '" + step.edge + "'");
        }
        std::set<std::string> seen_vertices;
        const std::size_t n = f.boundary.size();
        for (std::size_t s = 0; s < n; ++s) {
            const GraphEdge& cur = edges_[edge_index_.at(f.boundary[s].edge)];
            const GraphEdge& nxt = edges_[edge_index_.at(f.boundary[(s + 1) % n].edge)];
            const std::string& end = f.boundary[s].forward ? cur.head : cur.tail;
            const std::string& start = f.boundary[(s + 1) % n].forward ? nxt.tail : nxt.head;
            if (end != start)
                throw std::invalid_argument("Regular2Complex: face '" + f.id +
                                            "' boundary is not a closed edge walk");
            if (!seen_vertices.insert(end).second)
                throw std::invalid_argument("Regular2Complex: face '" + f.id +
                                            "' boundary revisits vertex '" + end + "'");
        }
    }
}

const GraphEdge& Regular2Complex::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end())
        throw std::invalid_argument("Regular2Complex: unknown edge id '" + id + "'");
    return edges_[it->second];
}

const Face2& Regular2Complex::face(const std::string& id) const {
    auto it = face_index_.find(id);
    if (it == face_index_.end())
        throw std::invalid_argument("Regular2Complex: unknown face id '" + id + "'");
    return faces_[it->second];
}

std::vector<std::string> Regular2Complex::walk_vertices(const Face2& face) const {
    std::vector<std::string> out;
    for (const auto& step : face.boundary) {
        const GraphEdge& e = edge(step.edge);
        out.push_back(step.forward ? e.tail : e.head);
    }
    return out;
}

Graph1Complex Regular2Complex::one_skeleton() const {
    return Graph1Complex(vertices_, edges_);
}

ProperCellsResult proper_cells_check(const Regular2Complex& k) {
    ProperCellsResult r;
    for (const auto& f : k.faces()) {
        for (const auto& step : f.boundary) {
            if (!k.has_edge(step.edge))
                return {false, step.edge, f.id, "boundary edge missing from complex"};
            const GraphEdge& e = k.edge(step.edge);
            if (!k.has_vertex(e.tail) || !k.has_vertex(e.head))
                return {false, e.id, f.id, "boundary edge endpoint missing from complex"};
        }
    }
    for (const auto& e : k.edges()) {
        if (!k.has_vertex(e.tail)) return {false, e.tail, e.id, "endpoint missing from complex"};
        if (!k.has_vertex(e.head)) return {false, e.head, e.id, "endpoint missing from complex"};
    }
    return r;
}

} // namespace prodtop
