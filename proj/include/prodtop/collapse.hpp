#ifndef PRODTOP_COLLAPSE_HPP
#define PRODTOP_COLLAPSE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "prodtop/product_complex.hpp"
#include "prodtop/regular_complex.hpp"
#include "prodtop/verifier.hpp"

namespace prodtop {

/// One elementary collapse: a free face together with its unique coface.
struct CollapseStep {
    std::string free_face;
    std::string coface;

    bool operator==(const CollapseStep&) const = default;
    auto operator<=>(const CollapseStep&) const = default;
};

struct CollapsePlan {
    std::vector<CollapseStep> steps;
    Regular2Complex core;
};

/// All (edge, unique face) pairs plus all (vertex, unique edge) pairs where
/// the vertex lies in exactly one edge and no 2-cell.
std::vector<CollapseStep> free_face_pairs(const Regular2Complex& k);

/// Applies the lexicographically smallest free pair (2-dimensional pairs
/// first) until none remains.
CollapsePlan greedy_collapse(const Regular2Complex& k);

enum class CollapseStatus { Collapsible, NotWithinBudget, Refuted };

struct CollapseSearchResult {
    CollapseStatus status = CollapseStatus::Refuted;
    CollapsePlan plan;  // complete collapse to a point when Collapsible
    std::size_t nodes_expanded = 0;
};

/// Depth-first search over collapse orders with memoized states; "Refuted"
/// means the whole space was exhausted within budget.
CollapseSearchResult exhaustive_collapsibility(const Regular2Complex& k, std::size_t budget);

/// Greedy first, search as fallback; throws when the complex does not
/// collapse to a point within the budget.
CollapsePlan collapse_to_point(const Regular2Complex& k, std::size_t budget = 1000000);

enum class CoreClass { Point, Quasi1ManifoldGraph, Torus, Other };
std::string to_string(CoreClass c);

/// Classifies a complex without free faces: a single vertex, an endpoint-free
/// graph, an orientable closed surface with chi = 0, or anything else.
CoreClass classify_core(const Regular2Complex& core);

struct EmbedStats {
    std::size_t edge_expansions = 0;
    std::size_t face_expansions = 0;
    std::size_t pendant_edges = 0;
    std::size_t runs = 0;
    std::size_t corners = 0;
};

/// Cell-level embedding into a product of two trees: every input cell maps
/// to a set of open product cells, disjoint across cells and covering the
/// image subcomplex.
struct TreeEmbedding {
    Graph1Complex tree1;
    Graph1Complex tree2;
    ProductSubcomplex image;
    std::map<std::string, std::set<CellTuple>> assignment;
    EmbedStats stats;
};

/// Replays a full collapse backwards: vertex-edge expansions grow the second
/// tree by a pendant edge; face expansions realize the new 2-cell as a disc
/// of strips and corner squares over the image of its attaching arc.
TreeEmbedding tree_embed(const Regular2Complex& k, const CollapsePlan& plan);

VerifierReport verify_tree_embedding(const TreeEmbedding& t, const Regular2Complex& k);

} // namespace prodtop

#endif
