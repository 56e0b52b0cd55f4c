#include "prodtop/product_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodtop {

std::string tuple_id(const CellTuple& cell) {
    std::string out;
    for (std::size_t i = 0; i < cell.components.size(); ++i) {
        if (i) out += ",";
        out += cell.components[i];
    }
    return out;
}

ProductComplex::ProductComplex(std::vector<Graph1Complex> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("ProductComplex: at least one factor required");
}

bool ProductComplex::valid_tuple(const CellTuple& cell) const {
    if (cell.components.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const std::string& c = cell.components[i];
        if (!factors_[i].has_vertex(c) && !factors_[i].has_edge(c)) return false;
    }
    return true;
}

void ProductComplex::require_tuple(const CellTuple& cell) const {
    if (!valid_tuple(cell))
        throw std::invalid_argument("ProductComplex: invalid cell tuple (" + tuple_id(cell) + ")");
}

bool ProductComplex::is_edge_component(std::size_t i, const std::string& id) const {
    return factors_[i].has_edge(id);
}

std::size_t ProductComplex::dimension(const CellTuple& cell) const {
    require_tuple(cell);
    std::size_t d = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (is_edge_component(i, cell.components[i])) ++d;
    return d;
}

std::set<CellTuple> ProductComplex::all_cells() const {
    std::set<CellTuple> out;
    std::vector<std::string> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == factors_.size()) {
            out.insert(CellTuple{acc});
            return;
        }
        for (const auto& v : factors_[i].vertices()) {
            acc.push_back(v);
            rec(i + 1);
            acc.pop_back();
        }
        for (const auto& e : factors_[i].edges()) {
            acc.push_back(e.id);
            rec(i + 1);
            acc.pop_back();
        }
    };
    rec(0);
    return out;
}

std::set<CellTuple> ProductComplex::cells_of_dim(std::size_t d) const {
    std::set<CellTuple> out;
    for (const auto& c : all_cells())
        if (dimension(c) == d) out.insert(c);
    return out;
}

std::set<CellTuple> cell_closure(const ProductComplex& parent, const CellTuple& cell) {
    parent.require_tuple(cell);
    std::set<CellTuple> out;
    std::vector<std::string> acc;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cell.components.size()) {
            out.insert(CellTuple{acc});
            return;
        }
        const std::string& c = cell.components[i];
        acc.push_back(c);
        rec(i + 1);
        acc.pop_back();
        if (parent.is_edge_component(i, c)) {
            const GraphEdge& e = parent.factor(i).edge(c);
            acc.push_back(e.tail);
            rec(i + 1);
            acc.pop_back();
            acc.push_back(e.head);
            rec(i + 1);
            acc.pop_back();
        }
    };
    rec(0);
    return out;
}

std::set<CellTuple> proper_faces(const ProductComplex& parent, const CellTuple& cell) {
    std::set<CellTuple> out = cell_closure(parent, cell);
    out.erase(cell);
    return out;
}

ProductSubcomplex::ProductSubcomplex(std::shared_ptr<const ProductComplex> parent,
                                     std::set<CellTuple> cells)
    : parent_(std::move(parent)), cells_(std::move(cells)) {
    if (!parent_) throw std::invalid_argument("ProductSubcomplex: null parent");
    for (const auto& cell : cells_) {
        parent_->require_tuple(cell);
        for (std::size_t i = 0; i < cell.components.size(); ++i) {
            if (!parent_->is_edge_component(i, cell.components[i])) continue;
            const GraphEdge& e = parent_->factor(i).edge(cell.components[i]);
            for (const std::string& end : {e.tail, e.head}) {
                CellTuple face = cell;
                face.components[i] = end;
                if (!cells_.count(face))
                    throw std::invalid_argument(
                        "ProductSubcomplex: not face-closed, cell (" + tuple_id(cell) +
                        ") is missing face (" + tuple_id(face) + ")");
            }
        }
    }
}

ProductSubcomplex ProductSubcomplex::closure(std::shared_ptr<const ProductComplex> parent,
                                             const std::set<CellTuple>& seed) {
    if (!parent) throw std::invalid_argument("ProductSubcomplex: null parent");
    std::set<CellTuple> cells;
    for (const auto& c : seed) {
        auto closed = cell_closure(*parent, c);
        cells.insert(closed.begin(), closed.end());
    }
    return ProductSubcomplex(std::move(parent), std::move(cells));
}

std::set<CellTuple> ProductSubcomplex::cells_of_dim(std::size_t d) const {
    std::set<CellTuple> out;
    for (const auto& c : cells_)
        if (parent_->dimension(c) == d) out.insert(c);
    return out;
}

int ProductSubcomplex::dimension() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, static_cast<int>(parent_->dimension(c)));
    return d;
}

ProductSubcomplex full_subcomplex(std::shared_ptr<const ProductComplex> parent) {
    if (!parent) throw std::invalid_argument("full_subcomplex: null parent");
    auto cells = parent->all_cells();
    return ProductSubcomplex(std::move(parent), std::move(cells));
}

ProductSubcomplex top_cell_span(const ProductSubcomplex& sub, std::size_t n) {
    return ProductSubcomplex::closure(sub.parent_ptr(), sub.cells_of_dim(n));
}

Regular2Complex to_regular2(const ProductSubcomplex& sub) {
    if (sub.parent().factor_count() != 2)
        throw std::invalid_argument("to_regular2: parent must have exactly 2 factors");
    const Graph1Complex& f0 = sub.parent().factor(0);
    const Graph1Complex& f1 = sub.parent().factor(1);

    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    std::vector<Face2> faces;

    auto id = [](const std::string& a, const std::string& b) { return a + "," + b; };

    for (const auto& cell : sub.cells()) {
        const std::string& a = cell.components[0];
        const std::string& b = cell.components[1];
        const bool ea = f0.has_edge(a);
        const bool eb = f1.has_edge(b);
        if (!ea && !eb) {
            vertices.push_back(id(a, b));
        } else if (ea && !eb) {
            const GraphEdge& e = f0.edge(a);
            edges.push_back(GraphEdge{id(a, b), id(e.tail, b), id(e.head, b)});
        } else if (!ea && eb) {
            const GraphEdge& e = f1.edge(b);
            edges.push_back(GraphEdge{id(a, b), id(a, e.tail), id(a, e.head)});
        } else {
            const GraphEdge& e1 = f0.edge(a);
            const GraphEdge& e2 = f1.edge(b);
            // tail x e2, e1 x head, reverse(head x e2), reverse(e1 x tail)
            Face2 f;
            f.id = id(a, b);
            f.boundary = {
                DirectedEdgeRef{id(e1.tail, b), true},
                DirectedEdgeRef{id(a, e2.head), true},
                DirectedEdgeRef{id(e1.head, b), false},
                DirectedEdgeRef{id(a, e2.tail), false},
            };
            faces.push_back(std::move(f));
        }
    }
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

ProductSubcomplex subdivide_factor_edge(const ProductSubcomplex& sub, std::size_t factor,
                                        const std::string& edge_id) {
    if (factor >= sub.parent().factor_count())
        throw std::invalid_argument("subdivide_factor_edge: factor index out of range");
    const Graph1Complex& old_factor = sub.parent().factor(factor);
    const GraphEdge removed = old_factor.edge(edge_id);
    Graph1Complex divided = subdivide_edge(old_factor, edge_id);

    // Recover the ids chosen by subdivide_edge: the two edges not in the old
    // factor, ordered tail-half first.
    std::string first_half, second_half;
    for (const auto& e : divided.edges()) {
        if (old_factor.has_edge(e.id)) continue;
        if (e.tail == removed.tail)
            first_half = e.id;
        else
            second_half = e.id;
    }

    std::vector<Graph1Complex> factors = sub.parent().factors();
    factors[factor] = divided;
    auto parent = std::make_shared<const ProductComplex>(std::move(factors));

    std::set<CellTuple> seed;
    for (const auto& cell : sub.cells()) {
        if (cell.components[factor] == edge_id) {
            CellTuple a = cell, b = cell;
            a.components[factor] = first_half;
            b.components[factor] = second_half;
            seed.insert(a);
            seed.insert(b);
        } else {
            seed.insert(cell);
        }
    }
    return ProductSubcomplex::closure(std::move(parent), seed);
}

} // namespace prodtop
