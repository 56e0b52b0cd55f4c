#ifndef PRODTOP_VERIFIER_HPP
#define PRODTOP_VERIFIER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prodtop/product_complex.hpp"
#include "prodtop/regular_complex.hpp"

namespace prodtop {

struct VerifierWitness {
    std::string cell;
    std::string reason;
};

struct VerifierReport {
    bool verdict = true;
    std::vector<VerifierWitness> witnesses;

    void fail(const std::string& cell, const std::string& reason) {
        verdict = false;
        witnesses.push_back({cell, reason});
    }
};

/// Uniform face-incidence view over the concrete complex types, graded by
/// dimension with codimension-1 face lists.
class IncidenceComplex {
public:
    static IncidenceComplex of(const Regular2Complex& k);
    static IncidenceComplex of(const ProductSubcomplex& sub);

    int top_dim() const;
    std::size_t count(std::size_t d) const { return d < cells_.size() ? cells_[d].size() : 0; }
    const std::vector<std::string>& cells(std::size_t d) const { return cells_[d]; }
    const std::vector<std::size_t>& facets(std::size_t d, std::size_t i) const {
        return facets_[d][i];
    }
    const std::vector<std::size_t>& cofacets(std::size_t d, std::size_t i) const {
        return cofacets_[d][i];
    }
    std::optional<std::pair<std::size_t, std::size_t>> find(const std::string& id) const;
    bool empty() const;

private:
    // cells_[d]: ids of d-cells; facets_[d][i]: indices into cells_[d-1]
    std::vector<std::vector<std::string>> cells_;
    std::vector<std::vector<std::vector<std::size_t>>> facets_;
    std::vector<std::vector<std::vector<std::size_t>>> cofacets_;
    std::map<std::string, std::pair<std::size_t, std::size_t>> index_;

    void finish();
};

/// Number of (d+1)-cells incident with the given cell.
std::size_t incidence_count(const IncidenceComplex& x, const std::string& cell_id);
std::size_t incidence_count(const Regular2Complex& k, const std::string& cell_id);
std::size_t incidence_count(const ProductSubcomplex& sub, const std::string& cell_id);

/// Every cell lies in an n-cell and every (n-1)-cell meets exactly two
/// n-cells; `simple` additionally demands the n-cells to be chain connected
/// through (n-1)-cells.
VerifierReport pseudo_manifold_check(const IncidenceComplex& x, std::size_t n, bool simple);
VerifierReport pseudo_manifold_check(const Regular2Complex& k, std::size_t n, bool simple);
VerifierReport pseudo_manifold_check(const ProductSubcomplex& sub, std::size_t n, bool simple);

/// Same with "at least two" incidences.
VerifierReport ramified_manifold_check(const IncidenceComplex& x, std::size_t n, bool simple);
VerifierReport ramified_manifold_check(const Regular2Complex& k, std::size_t n, bool simple);
VerifierReport ramified_manifold_check(const ProductSubcomplex& sub, std::size_t n, bool simple);

/// Edges incident with exactly one 2-cell.
std::set<std::string> free_edges(const Regular2Complex& k);

/// Connected, every edge incident with exactly two faces and every vertex
/// link a single cycle.
VerifierReport closed_surface_check(const Regular2Complex& k);

/// Chain-connectivity classes of n-cells of a ramified n-manifold complex.
std::vector<std::vector<std::string>> combinatorial_components(const IncidenceComplex& x,
                                                               std::size_t n);
std::vector<std::vector<std::string>> combinatorial_components(const Regular2Complex& k,
                                                               std::size_t n);
std::vector<std::vector<std::string>> combinatorial_components(const ProductSubcomplex& sub,
                                                               std::size_t n);

} // namespace prodtop

#endif
