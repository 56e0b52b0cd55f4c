#ifndef PRODTOP_CONSTRUCTIONS_HPP
#define PRODTOP_CONSTRUCTIONS_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "prodtop/graph_complex.hpp"
#include "prodtop/homology.hpp"
#include "prodtop/product_complex.hpp"
#include "prodtop/regular_complex.hpp"

namespace prodtop {

struct ExpectedReport {
    std::optional<long long> chi;
    std::optional<bool> orientable;
    std::optional<long long> genus;
    std::optional<long long> rank_h1;
};

using AnyComplex = std::variant<Graph1Complex, Regular2Complex, ProductSubcomplex,
                                TorusSubsetComplex>;

struct NamedConstruction {
    std::string name;
    std::vector<long long> params;
    AnyComplex complex;
    std::optional<ExpectedReport> expected;
};

/// Two poles joined by n parallel edges m0..m{n-1}, all directed alike.
Graph1Complex theta(std::size_t n);

/// Union of the squares m_j x m_j and m_j x m_{j+1} (indices mod m+1) in
/// theta(m+1) x theta(m+1): a closed orientable surface of genus m.
ProductSubcomplex m0_surface(std::size_t m);

/// Genus-m orientable surface symmetric under swapping the two factors.
ProductSubcomplex involution_surface(std::size_t m);

/// (a, b) in m iff (b, a) in m; both factors must be the same graph.
bool swap_invariance_check(const ProductSubcomplex& m);

/// Every cell (a, b) of m has disjoint closed factor cells, so m misses the
/// diagonal of the square product.
bool diagonal_disjointness_check(const ProductSubcomplex& m);

/// Hub o with spokes s_i to rim vertices v_i and rim edges r_i.
Graph1Complex wheel(std::size_t n);
/// wheel(n) plus one extra edge x from v1 to v0, closing a bigon circle with
/// the rim edge r0.
Graph1Complex wheel_tilde(std::size_t n);

/// Closed non-orientable surface of even rank 2n built from n tori over the
/// wheel circles with the spoke squares removed; n must be odd and >= 3.
ProductSubcomplex cauty_even_rank_surface(std::size_t n);
/// Even-n variant of target rank 2n: the odd case for n-1 with one more
/// torus over the extra bigon circle attached along the shared square.
ProductSubcomplex cauty_even_rank_surface_plus(std::size_t n);

/// Closed non-orientable surface of odd rank 2k+1: two tori over circles
/// sharing k arcs, glued with one orientation-reversing arc.  Setting
/// all_same_orientations gives the orientable control surface instead.
ProductSubcomplex cauty_odd_rank_surface(std::size_t k, bool all_same_orientations = false);

/// Closed surface in the square of a ladder graph avoiding the diagonal,
/// with both projections surjective; chi = -2n.
ProductSubcomplex diagonal_free_surface(std::size_t n);

/// Apex joined to every vertex, one triangle per edge.
Regular2Complex cone_over_graph(const Graph1Complex& g);

/// Fixture: contractible 2-complex with no free edge whose single boundary
/// edge pair carries incidence three.
Regular2Complex dunce_hat();
/// Fixture: the two-room house; contractible, no free edge, no collapse move.
Regular2Complex bing_house();

/// Union of three n-tori in the (n+1)-torus model whose pairwise
/// intersections are (n-1)-tori while the triple intersection is smaller.
struct TripleTorusReport {
    std::size_t n = 0;
    std::vector<std::vector<long long>> torus_profiles;     // three entries
    std::vector<std::vector<long long>> pairwise_profiles;  // 12, 13, 23
    std::vector<long long> triple_profile;
    bool tori_ok = false;
    bool pairwise_ok = false;
    bool triple_nonvoid = false;
    bool triple_not_large_torus = false;
    bool hypotheses_ok = false;
};

TorusSubsetComplex triple_torus_complex(std::size_t n);
TripleTorusReport triple_torus_report(std::size_t n);

// Small collapsible fixtures used by the embedding machinery.
Regular2Complex triangulated_disc(std::size_t sectors);
Regular2Complex grid_triangulated_square(std::size_t n);
/// Torus complex with one open square removed; collapses onto a graph.
ProductSubcomplex punctured_torus();

/// Registry entry for the command-line constructor.
struct ConstructionSpec {
    std::string cli_name;
    std::string param_name;  // empty for parameterless constructions
    long long default_param = 0;
    std::function<NamedConstruction(long long)> build;
    std::string summary;
};

const std::vector<ConstructionSpec>& construction_registry();
NamedConstruction build_construction(const std::string& cli_name, long long param);

/// Product-subcomplex members exercised by the projection, decomposition and
/// collapse suites.
std::vector<NamedConstruction> gallery();

} // namespace prodtop

#endif
