#ifndef PRODTOP_GRAPH_COMPLEX_HPP
#define PRODTOP_GRAPH_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace prodtop {

struct GraphEdge {
    std::string id;
    std::string tail;
    std::string head;

    bool operator==(const GraphEdge&) const = default;
    auto operator<=>(const GraphEdge&) const = default;
};

/// Regular 1-dimensional CW complex: directed loop-free edges over declared
/// vertices.  Parallel edges are allowed; directions are bookkeeping only.
class Graph1Complex {
public:
    Graph1Complex() = default;
    Graph1Complex(std::vector<std::string> vertices, std::vector<GraphEdge> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const { return vertex_set_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
    const GraphEdge& edge(const std::string& id) const;

    bool operator==(const Graph1Complex& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> vertices_;  // sorted
    std::vector<GraphEdge> edges_;       // sorted by id
    std::set<std::string> vertex_set_;
    std::map<std::string, std::size_t> edge_index_;
};

std::map<std::string, std::size_t> vertex_degrees(const Graph1Complex& g);
std::size_t connected_components(const Graph1Complex& g);
bool is_connected(const Graph1Complex& g);
long long first_betti(const Graph1Complex& g);
bool is_tree(const Graph1Complex& g);
/// Nonempty, connected, every vertex of degree exactly 2.
bool is_circle(const Graph1Complex& g);

/// Replace edge e by two edges through a fresh vertex (tail->new, new->head).
Graph1Complex subdivide_edge(const Graph1Complex& g, const std::string& edge_id);

/// One-point union: disjoint copies with v1 identified to v2.  Cells of g2
/// are renamed where needed to keep ids unique.
Graph1Complex wedge(const Graph1Complex& g1, const std::string& v1,
                    const Graph1Complex& g2, const std::string& v2);

} // namespace prodtop

#endif
