#ifndef DESING_TREE_HPP
#define DESING_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/charts.hpp"
#include "desing/localize.hpp"
#include "desing/parse.hpp"
#include "desing/reduce.hpp"
#include "desing/resolved.hpp"
#include "desing/weights.hpp"

namespace desing {

struct BuildOptions {
    long max_depth = 16;
    long series_order = 12;
    long weight_bound = 16;
    int jobs = 1;
};

struct TreeNode {
    std::string id;  // dotted path: root "0", its K-th child "0.K", ...
    long depth = 0;
    RingPtr ring;
    Polynomial b;
    ConstraintSet part;
    std::vector<std::size_t> coord_of_main;
    std::string status = "open";  // expanded|resolved|reduced-global|empty|depth-limited
    std::string note;             // diagnostic for limit-flagged nodes
    std::optional<Polynomial> witness;
    std::vector<Reduction> reductions;
    std::vector<std::string> global_params;
    std::optional<ResolvedDecomposition> resolved;
    std::optional<TruncatedSeries> series;
    std::optional<ResolvedRewrite> rewrite;
};

struct TreeArc {
    std::string from, to;
    std::string kind;  // chart | weight | reduction | resolved-rewrite
    std::vector<std::pair<std::string, std::string>> phi;  // source var -> image text
    std::vector<std::pair<std::string, std::string>> psi;  // target var -> preimage text
    std::optional<Exp> factor;                              // over the child ring
    std::optional<ArcMap> map;                              // when the arc is a substitution
    std::optional<ConstraintSet> base;                      // the refined parent part, in child ring
};

struct DesingTree {
    FieldSpec field;
    std::string problem_text;
    std::vector<TreeNode> nodes;
    std::vector<TreeArc> arcs;
    BuildOptions options;

    const TreeNode& node(const std::string& id) const;
    std::vector<const TreeArc*> arcs_from(const std::string& id) const;
    const TreeArc* arc_to(const std::string& id) const;  // nullptr for the root
};

DesingTree build_tree(const ProblemSpec& problem, const BuildOptions& options = {});

// The composed forward substitution from the root variables to the leaf's
// ring, walking chart/weight arcs. Every arc on the path must carry a map.
struct ComposedMap {
    RingPtr target;
    std::vector<std::pair<std::string, Polynomial>> images;  // one per root variable
};

ComposedMap compose_path(const DesingTree& tree, const std::string& leaf_id);

// Re-run the substitute-and-factor identity and the round-trip identity on
// every arc that carries a map. Returns the failures' descriptions.
std::vector<std::string> verify_tree(const DesingTree& tree);

}  // namespace desing

#endif
