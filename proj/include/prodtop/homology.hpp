#ifndef PRODTOP_HOMOLOGY_HPP
#define PRODTOP_HOMOLOGY_HPP

#include <set>
#include <string>
#include <vector>

#include "prodtop/graph_complex.hpp"
#include "prodtop/integer_matrix.hpp"
#include "prodtop/product_complex.hpp"
#include "prodtop/regular_complex.hpp"

namespace prodtop {

/// Cellular chain complex with integer coefficients.  boundary(k) maps
/// k-chains to (k-1)-chains; consecutive boundaries compose to zero.
struct ChainComplex {
    std::vector<std::vector<std::string>> labels;  // degree 0..n
    std::vector<IntegerMatrix> boundaries;         // boundaries[k-1] is degree k

    std::size_t top_degree() const { return labels.empty() ? 0 : labels.size() - 1; }
    std::vector<std::size_t> dims() const;
    const IntegerMatrix& boundary(std::size_t k) const { return boundaries[k - 1]; }
    void validate() const;  // shapes and dd = 0
};

struct HomologySummary {
    std::vector<long long> betti;
    std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per degree
    long long euler = 0;

    bool operator==(const HomologySummary&) const = default;
    bool reduced_trivial() const;  // one connected component, nothing else
    std::string to_string() const;
};

struct SurfaceReport {
    bool is_closed_surface = false;
    bool connected = false;
    bool orientable = false;
    long long genus = 0;
    long long chi = 0;
    long long rank_h1 = 0;
};

ChainComplex chain_complex_of_graph(const Graph1Complex& g);
ChainComplex chain_complex_of_regular2(const Regular2Complex& k);

/// Cubical boundary for cells of a product of graphs: the component sign at
/// position i is (-1)^(number of edge components before i).
ChainComplex chain_complex_of_product(const ProductSubcomplex& sub);

HomologySummary homology(const ChainComplex& c);
HomologySummary homology_of(const Graph1Complex& g);
HomologySummary homology_of(const Regular2Complex& k);
HomologySummary homology_of(const ProductSubcomplex& sub);

/// True iff the top homology of a connected pseudo 2-manifold complex has
/// rank one; refuses inputs that fail the pseudo-manifold precondition.
bool orientability(const Regular2Complex& k);
bool orientability(const ProductSubcomplex& sub);

/// Closed-surface recognition plus genus classification from the Euler
/// characteristic: genus = 1 - chi/2 when orientable, 2 - chi otherwise.
SurfaceReport surface_report(const Regular2Complex& k);
SurfaceReport surface_report(const ProductSubcomplex& sub);

/// Subset-closed family of cells of the one-cell-per-coordinate-set torus
/// model; all boundary maps vanish, so homology equals the cell counts.
struct TorusSubsetComplex {
    std::size_t ambient = 0;                // number of circle coordinates
    std::set<std::set<std::size_t>> cells;  // closed under taking subsets

    static TorusSubsetComplex skeleton(std::size_t k, std::size_t n);
    static TorusSubsetComplex closed_cell(std::size_t k, const std::set<std::size_t>& coords);

    TorusSubsetComplex united(const TorusSubsetComplex& other) const;
    TorusSubsetComplex intersected(const TorusSubsetComplex& other) const;

    void validate() const;
    std::vector<long long> profile() const;  // cell counts per dimension
    HomologySummary homology() const;
    ChainComplex chain_complex() const;
};

/// Homology of the n-skeleton of the k-torus in the zero-differential model;
/// betti_i = C(k, i) for i <= n.
HomologySummary torus_skeleton_homology(std::size_t k, std::size_t n);

long long binomial(std::size_t n, std::size_t k);

} // namespace prodtop

#endif
