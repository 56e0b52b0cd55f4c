#ifndef PRODTOP_PRODUCT_COMPLEX_HPP
#define PRODTOP_PRODUCT_COMPLEX_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "prodtop/graph_complex.hpp"
#include "prodtop/regular_complex.hpp"

namespace prodtop {

/// One cell of a product of graphs: component i is a vertex id or an edge id
/// of factor i.  The dimension is the number of edge components.
struct CellTuple {
    std::vector<std::string> components;

    bool operator==(const CellTuple&) const = default;
    auto operator<=>(const CellTuple&) const = default;
};

std::string tuple_id(const CellTuple& cell);

/// Product cell complex of graphs; cells are implicit (all tuples).
class ProductComplex {
public:
    explicit ProductComplex(std::vector<Graph1Complex> factors);

    std::size_t factor_count() const { return factors_.size(); }
    const Graph1Complex& factor(std::size_t i) const { return factors_[i]; }
    const std::vector<Graph1Complex>& factors() const { return factors_; }

    bool valid_tuple(const CellTuple& cell) const;
    void require_tuple(const CellTuple& cell) const;
    bool is_edge_component(std::size_t i, const std::string& id) const;
    std::size_t dimension(const CellTuple& cell) const;

    /// All cells of one dimension (the full product is finite but implicit).
    std::set<CellTuple> cells_of_dim(std::size_t d) const;
    std::set<CellTuple> all_cells() const;

    bool operator==(const ProductComplex& other) const { return factors_ == other.factors_; }

private:
    std::vector<Graph1Complex> factors_;
};

/// Closure of a cell: the cell plus every tuple obtained by replacing edge
/// components with their endpoints.
std::set<CellTuple> cell_closure(const ProductComplex& parent, const CellTuple& cell);
std::set<CellTuple> proper_faces(const ProductComplex& parent, const CellTuple& cell);

/// Face-closed set of cells of a product complex.
class ProductSubcomplex {
public:
    ProductSubcomplex(std::shared_ptr<const ProductComplex> parent, std::set<CellTuple> cells);

    static ProductSubcomplex closure(std::shared_ptr<const ProductComplex> parent,
                                     const std::set<CellTuple>& seed);

    const ProductComplex& parent() const { return *parent_; }
    const std::shared_ptr<const ProductComplex>& parent_ptr() const { return parent_; }
    const std::set<CellTuple>& cells() const { return cells_; }
    bool contains(const CellTuple& cell) const { return cells_.count(cell) > 0; }
    bool empty() const { return cells_.empty(); }

    std::set<CellTuple> cells_of_dim(std::size_t d) const;
    /// Dimension of the highest cell, or -1 when empty.
    int dimension() const;

    bool operator==(const ProductSubcomplex& other) const {
        return *parent_ == *other.parent_ && cells_ == other.cells_;
    }

private:
    std::shared_ptr<const ProductComplex> parent_;
    std::set<CellTuple> cells_;
};

ProductSubcomplex full_subcomplex(std::shared_ptr<const ProductComplex> parent);

/// Closure of the n-cells of sub.
ProductSubcomplex top_cell_span(const ProductSubcomplex& sub, std::size_t n);

/// Two-factor subcomplexes as general regular complexes; each square becomes
/// a quadrilateral whose boundary cycle follows the factor orientations.
Regular2Complex to_regular2(const ProductSubcomplex& sub);

/// Subdivide one edge of one factor and transport the cell set.
ProductSubcomplex subdivide_factor_edge(const ProductSubcomplex& sub, std::size_t factor,
                                        const std::string& edge_id);

} // namespace prodtop

#endif
