#ifndef PRODTOP_PROJECTION_HPP
#define PRODTOP_PROJECTION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prodtop/graph_complex.hpp"
#include "prodtop/product_complex.hpp"

namespace prodtop {

std::vector<std::size_t> complement_indices(std::size_t n, const std::vector<std::size_t>& j);

/// Image of the subcomplex under the coordinate projection onto the factors
/// listed in j (0-based, nonempty, strictly increasing).
ProductSubcomplex project(const ProductSubcomplex& m, const std::vector<std::size_t>& j);

/// Fiber over a cell tau of the complementary projection: the closure of all
/// top-dimensional j-factor cells sigma with sigma x tau inside m.  For lower
/// dimensional tau the fiber is the union over top complementary cofaces.
ProductSubcomplex fiber_complex(const ProductSubcomplex& m, const std::vector<std::size_t>& j,
                                const CellTuple& tau);

/// View a one-factor subcomplex as a plain graph.
Graph1Complex as_graph(const ProductSubcomplex& sub);

/// Fibers over every cell of the complementary projection.
struct FiberTable {
    std::vector<std::size_t> j;
    std::map<CellTuple, ProductSubcomplex> fibers;
};

FiberTable fiber_table(const ProductSubcomplex& m, const std::vector<std::size_t>& j);

/// Checks that the fiber over every complementary vertex is a circle, and
/// cross-asserts the equivalent statement that the projection itself is a
/// circle.  Requires a ramified top-dimensional manifold complex.
bool fibers_all_circles(const ProductSubcomplex& m, std::size_t j);

/// Indices whose projection is a circle.
std::set<std::size_t> circle_projection_set(const ProductSubcomplex& m);

struct DecompositionResult {
    std::set<std::size_t> circle_indices;
    std::map<std::size_t, Graph1Complex> torus_part;  // projection circle per index
    std::optional<ProductSubcomplex> residual;        // absent when every factor is a circle
    bool exact = false;
};

/// Splits m into the product of its circle projections and the residual
/// projection, verifying cell by cell that m equals that product.
DecompositionResult product_decomposition(const ProductSubcomplex& m);

struct RankBoundReport {
    std::size_t factors = 0;
    long long rank_h1 = 0;
    std::set<std::size_t> circle_indices;
    bool rank_ok = false;
    bool decomposition_ok = true;
    bool ok = false;
    std::string detail;
};

/// rank H1 >= n for a ramified n-manifold in a product of n graphs; when
/// rank H1 = n + k with k < n, at least n - k projections are circles and the
/// product decomposition is exact.
RankBoundReport rank_bound_assert(const ProductSubcomplex& m);

struct ThetaDecomposeResult {
    bool ok = false;
    std::string reason;
    std::vector<std::string> meridians;         // first-factor edges sigma_0..sigma_m
    std::vector<std::string> circle_meridians;  // second-factor edges tau_0..tau_m
    std::size_t genus = 0;
};

/// Expresses a pseudo 2-manifold inside a product of two theta graphs as a
/// union of meridian x circle pieces over a cycle of circles; the failure
/// reason names the fiber that is not a two-meridian circle.
ThetaDecomposeResult theta_decompose(const ProductSubcomplex& m);

// Projection-calculus laws, checked cellwise.
bool property_c_reconstruction(const ProductSubcomplex& m, const std::vector<std::size_t>& j);
bool property_d_monotonicity(const ProductSubcomplex& m, const std::vector<std::size_t>& j);
bool property_g_unions(const ProductSubcomplex& m, const std::vector<std::size_t>& j);
bool property_j_biconditional(const ProductSubcomplex& m, std::size_t j);

} // namespace prodtop

#endif
