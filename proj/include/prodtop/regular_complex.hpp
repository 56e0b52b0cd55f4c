#ifndef PRODTOP_REGULAR_COMPLEX_HPP
#define PRODTOP_REGULAR_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "prodtop/graph_complex.hpp"

namespace prodtop {

struct DirectedEdgeRef {
    std::string edge;
    bool forward = true;  // "+" traverses tail->head, "-" the reverse

    bool operator==(const DirectedEdgeRef&) const = default;
    auto operator<=>(const DirectedEdgeRef&) const = default;
};

struct Face2 {
    std::string id;
    std::vector<DirectedEdgeRef> boundary;  // closed simple edge walk, length >= 2

    bool operator==(const Face2&) const = default;
};

/// Regular CW complex of dimension <= 2.  Every 2-cell boundary is a closed
/// walk with no repeated edge and no repeated vertex, so each cell is
/// embedded.  Ids are unique across vertices, edges and faces.
class Regular2Complex {
public:
    Regular2Complex() = default;
    Regular2Complex(std::vector<std::string> vertices, std::vector<GraphEdge> edges,
                    std::vector<Face2> faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const std::vector<Face2>& faces() const { return faces_; }

    bool has_vertex(const std::string& id) const { return vertex_set_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
    bool has_face(const std::string& id) const { return face_index_.count(id) > 0; }
    const GraphEdge& edge(const std::string& id) const;
    const Face2& face(const std::string& id) const;

    /// Vertices visited by the boundary walk, in cyclic order (one per step).
    std::vector<std::string> walk_vertices(const Face2& face) const;

    Graph1Complex one_skeleton() const;
    bool empty() const { return vertices_.empty() && edges_.empty() && faces_.empty(); }

    bool operator==(const Regular2Complex& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_ && faces_ == other.faces_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<GraphEdge> edges_;
    std::vector<Face2> faces_;
    std::set<std::string> vertex_set_;
    std::map<std::string, std::size_t> edge_index_;
    std::map<std::string, std::size_t> face_index_;
};

/// Every cell of a valid complex is a union of open cells; the check walks
/// the face references and reports the first dangling pair if the structure
/// was corrupted behind the constructor's back.
struct ProperCellsResult {
    bool proper = true;
    std::string cell;        // sigma: the face that fails to be contained
    std::string containing;  // tau: the cell whose closure misses sigma
    std::string reason;
};

ProperCellsResult proper_cells_check(const Regular2Complex& k);

} // namespace prodtop

#endif
