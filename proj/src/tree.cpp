#include "desing/tree.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace desing {

const TreeNode& DesingTree::node(const std::string& id) const {
    for (const auto& n : nodes)
        if (n.id == id) return n;
    throw error("unknown node id: " + id);
}

std::vector<const TreeArc*> DesingTree::arcs_from(const std::string& id) const {
    std::vector<const TreeArc*> out;
    for (const auto& a : arcs)
        if (a.from == id) out.push_back(&a);
    return out;
}

const TreeArc* DesingTree::arc_to(const std::string& id) const {
    for (const auto& a : arcs)
        if (a.to == id) return &a;
    return nullptr;
}

namespace {

std::string sanitized(const std::string& id) {
    std::string out = id;
    std::replace(out.begin(), out.end(), '.', '_');
    return out;
}

std::vector<std::string> child_names(const std::string& child_id, const std::string& stem, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back(stem + sanitized(child_id) + "_" + std::to_string(j));
    return out;
}

// everything one expansion produces; ids are assigned by the caller thread
struct ChildSpec {
    std::string id;
    RingPtr ring;
    Polynomial b;
    ConstraintSet part;
    std::vector<std::size_t> coord_of_main;
    std::string status = "open";
    std::optional<Polynomial> witness;
    TreeArc arc;
    // resolved-at-birth decoration
    std::optional<ResolvedDecomposition> resolved;
    std::optional<TruncatedSeries> series;
    std::optional<ResolvedRewrite> rewrite;
};

struct ExpansionResult {
    std::string status = "expanded";
    std::string note;
    std::vector<ChildSpec> children;
    std::vector<Reduction> reductions;
    std::vector<std::string> global_params;
    std::optional<ResolvedDecomposition> resolved;
    std::optional<TruncatedSeries> series;
    std::optional<ResolvedRewrite> rewrite;
};

bool coordinate_free(const Polynomial& b) {
    for (const auto& [e, c] : b.terms())
        for (std::size_t i = 0; i < b.ring()->n_coords; ++i)
            if (e[i] != 0) return false;
    return true;
}

void decorate_resolved(const ResolvedDecomposition& dec, long series_order,
                       std::optional<TruncatedSeries>& series, std::optional<ResolvedRewrite>& rewrite) {
    try {
        series = unit_series(dec, series_order);
    } catch (const error&) {
        series.reset();  // symbolic coefficients have no scalar series
    }
    rewrite = resolved_rewrite(dec);
}

// chart expansion of a node with no generic coordinates yet
void expand_root_like(const TreeNode& node, const BuildOptions&, ExpansionResult& out) {
    // reductions come first
    if (coordinate_free(node.b)) {
        auto [fin, trail] = reduction_pass(node.b);
        if (!trail.empty()) {
            out.status = "reduced-global";
            out.reductions = trail;
            for (const auto& red : trail)
                out.global_params.insert(out.global_params.end(), red.global_params.begin(),
                                         red.global_params.end());
            if (!fin.is_zero() && !fin.is_constant()) {
                ChildSpec c;
                c.id = node.id + ".0";
                c.ring = fin.ring();
                c.b = fin;
                c.part = ConstraintSet(fin.ring(), {}, {});
                c.arc.kind = "reduction";
                std::ostringstream desc;
                for (std::size_t i = 0; i < trail.size(); ++i) {
                    if (i) desc << " ; ";
                    desc << trail[i].kind << ": " << trail[i].description;
                }
                c.arc.phi.emplace_back("trail", desc.str());
                out.children.push_back(std::move(c));
            }
            return;
        }
    }

    std::size_t n = node.ring->n_mains();
    if (n == 0) throw error("cannot expand a node with no variables");
    unsigned total = 1u << n;
    for (unsigned K = 0; K < total; ++K) {
        std::string cid = node.id + "." + std::to_string(K);
        auto vars = child_names(cid, "x", n);
        auto coords = child_names(cid, "a", n);
        ChartResult cr = chart(node.b, K, vars, coords);
        ChildSpec c;
        c.id = cid;
        c.ring = cr.ring;
        c.b = cr.b_K;
        c.part = cr.part;
        c.coord_of_main.resize(n);
        for (std::size_t j = 0; j < n; ++j) c.coord_of_main[j] = j;
        if (cr.empty) {
            c.status = "empty";
            c.witness = cr.witness;
        }
        c.arc.kind = "chart";
        c.arc.map = cr.map;
        {
            // the direct Laurent image differs from b_K by a monomial factor
            Polynomial image = cr.map.apply_forward(node.b);
            auto [content, cof] = image.monomial_content();
            if (!(cof == cr.b_K)) throw error("chart factorization mismatch at K = " + std::to_string(K));
            c.arc.factor = content;
        }
        for (std::size_t j = 0; j < n; ++j) {
            c.arc.phi.emplace_back(node.ring->vars[node.ring->n_coords + j], cr.map.phi_str(j));
            c.arc.psi.emplace_back(cr.ring->vars[cr.ring->n_coords + j], cr.map.psi_str(j));
        }
        c.arc.base = ConstraintSet(cr.ring, {}, {});
        out.children.push_back(std::move(c));
    }
    out.status = "expanded";
}

void expand_inner(const TreeNode& node, const BuildOptions& options, ExpansionResult& out) {
    // a node already in strongly resolved form stops here
    if (auto dec = is_strongly_resolved(node.b, node.part, node.coord_of_main)) {
        out.status = "resolved";
        out.resolved = dec;
        decorate_resolved(*dec, options.series_order, out.series, out.rewrite);
        return;
    }

    LocalizedPoly B = translate(node.b, node.part, node.coord_of_main);
    auto parts = partition_by_init(B);
    if (parts.empty()) throw error("expansion produced no parts");

    std::size_t n = node.ring->n_mains();
    std::size_t ordinal = 0;
    for (const auto& pi : parts) {
        // a refined part may itself be in resolved form
        if (parts.size() > 1 || !(pi.part.eq() == node.part.eq() && pi.part.ineq() == node.part.ineq())) {
            if (auto dec = is_strongly_resolved(node.b, pi.part, node.coord_of_main)) {
                ChildSpec c;
                c.id = node.id + "." + std::to_string(ordinal++);
                c.ring = node.ring;
                c.b = node.b;
                c.part = pi.part;
                c.coord_of_main = node.coord_of_main;
                c.status = "resolved";
                c.resolved = dec;
                decorate_resolved(*dec, options.series_order, c.series, c.rewrite);
                c.arc.kind = "resolved-rewrite";
                c.arc.phi.emplace_back(node.ring->vars[node.ring->n_coords + dec->unit_var], c.rewrite->phi_unit);
                c.arc.psi.emplace_back("u0", c.rewrite->psi_u0);
                c.arc.base = pi.part;
                out.children.push_back(std::move(c));
                continue;
            }
        } else if (auto dec = is_strongly_resolved(node.b, pi.part, node.coord_of_main)) {
            out.status = "resolved";
            out.resolved = dec;
            decorate_resolved(*dec, options.series_order, out.series, out.rewrite);
            return;
        }

        // active variables: those occurring in the initial-monomial set; the
        // rest carry no weight and pass through unchanged
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& e : pi.init)
                if (e[node.ring->n_coords + i] != 0) {
                    active.push_back(i);
                    break;
                }
        }
        std::vector<WeightVec> support;
        for (const auto& e : pi.present) {
            WeightVec row;
            for (std::size_t i : active) row.push_back(e[node.ring->n_coords + i]);
            support.push_back(std::move(row));
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        auto valid = valid_weight_sequences(support, options.weight_bound);
        auto minimal = minimal_weight_sequences(valid, support);
        if (minimal.empty()) throw error("no minimal weight sequence for a part of node " + node.id);

        for (const auto& w : minimal) {
            std::string cid = node.id + "." + std::to_string(ordinal++);
            auto vars = child_names(cid, "x", n);
            auto coords = child_names(cid, "a", n);
            ArcBuild arc = build_arc_map(pi.part, node.ring, node.coord_of_main, active, w, vars, coords);
            if (!arc.map.roundtrip_identity()) throw error("arc round-trip identity failed at node " + node.id);
            ArcApplication app = apply_arc(node.b, arc, pi.part);
            ChildSpec c;
            c.id = cid;
            c.ring = arc.child_ring;
            c.b = app.child;
            c.part = app.child_part;
            c.coord_of_main = arc.child_coord_of_main;
            c.arc.kind = "weight";
            c.arc.map = arc.map;
            c.arc.factor = app.factor;
            c.arc.base = pi.part.embed(arc.child_ring);
            for (std::size_t j = 0; j < n; ++j) {
                c.arc.phi.emplace_back(node.ring->vars[node.ring->n_coords + j], arc.map.phi_str(j));
                c.arc.psi.emplace_back(arc.child_ring->vars[arc.child_ring->n_coords + j], arc.map.psi_str(j));
            }
            out.children.push_back(std::move(c));
        }
    }
    out.status = "expanded";
}

ExpansionResult expand_node(const TreeNode& node, const BuildOptions& options) {
    ExpansionResult out;
    try {
        if (node.ring->n_coords == 0)
            expand_root_like(node, options, out);
        else
            expand_inner(node, options, out);
    } catch (const limit_error& e) {
        // enumeration and refinement caps convert nontermination into
        // flagged nodes instead of failing the whole tree
        out = ExpansionResult{};
        out.status = "depth-limited";
        out.note = e.what();
    }
    return out;
}

}  // namespace

DesingTree build_tree(const ProblemSpec& problem, const BuildOptions& options) {
    DesingTree tree;
    tree.field = problem.field;
    tree.problem_text = problem.b_text;
    tree.options = options;
    if (problem.max_depth) tree.options.max_depth = *problem.max_depth;
    if (problem.series_order) tree.options.series_order = *problem.series_order;

    TreeNode root;
    root.id = "0";
    root.depth = 0;
    root.ring = problem.b.ring();
    root.b = problem.b;
    root.part = ConstraintSet(problem.b.ring(), {}, {});
    tree.nodes.push_back(std::move(root));

    std::vector<std::size_t> frontier = {0};
    while (!frontier.empty()) {
        long depth = tree.nodes[frontier.front()].depth;
        if (depth >= tree.options.max_depth) {
            for (std::size_t i : frontier) tree.nodes[i].status = "depth-limited";
            break;
        }
        // expand the whole layer, possibly concurrently; assembly stays ordered
        std::vector<ExpansionResult> results(frontier.size());
        if (tree.options.jobs > 1) {
            std::vector<std::future<ExpansionResult>> futs;
            for (std::size_t k = 0; k < frontier.size(); ++k) {
                const TreeNode& n = tree.nodes[frontier[k]];
                futs.push_back(std::async(std::launch::async,
                                          [&n, &options = tree.options] { return expand_node(n, options); }));
            }
            for (std::size_t k = 0; k < frontier.size(); ++k) results[k] = futs[k].get();
        } else {
            for (std::size_t k = 0; k < frontier.size(); ++k)
                results[k] = expand_node(tree.nodes[frontier[k]], tree.options);
        }

        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            ExpansionResult& res = results[k];
            std::string parent_id;
            long parent_depth;
            {
                TreeNode& parent = tree.nodes[frontier[k]];
                parent.status = res.status;
                parent.note = std::move(res.note);
                parent.reductions = std::move(res.reductions);
                parent.global_params = std::move(res.global_params);
                parent.resolved = std::move(res.resolved);
                parent.series = std::move(res.series);
                parent.rewrite = std::move(res.rewrite);
                parent_id = parent.id;
                parent_depth = parent.depth;
            }
            for (auto& c : res.children) {
                TreeNode child;
                child.id = c.id;
                child.depth = parent_depth + 1;
                child.ring = c.ring;
                child.b = c.b;
                child.part = c.part;
                child.coord_of_main = c.coord_of_main;
                child.status = c.status;
                child.witness = c.witness;
                child.resolved = std::move(c.resolved);
                child.series = std::move(c.series);
                child.rewrite = std::move(c.rewrite);
                TreeArc arc = std::move(c.arc);
                arc.from = parent_id;
                arc.to = child.id;
                tree.arcs.push_back(std::move(arc));
                tree.nodes.push_back(std::move(child));
                if (tree.nodes.back().status == "open") next.push_back(tree.nodes.size() - 1);
            }
        }
        frontier = std::move(next);
    }
    return tree;
}

ComposedMap compose_path(const DesingTree& tree, const std::string& leaf_id) {
    // collect the arc path root -> leaf
    std::vector<const TreeArc*> path;
    std::string cur = leaf_id;
    tree.node(leaf_id);
    while (cur != "0") {
        const TreeArc* a = tree.arc_to(cur);
        if (!a) throw error("node " + cur + " is not connected to the root");
        path.push_back(a);
        cur = a->from;
    }
    std::reverse(path.begin(), path.end());

    const TreeNode& root = tree.nodes.front();
    ComposedMap out;
    out.target = root.ring;
    for (std::size_t j = 0; j < root.ring->n_mains(); ++j)
        out.images.emplace_back(root.ring->vars[j], Polynomial::variable(root.ring, j));
    for (const TreeArc* a : path) {
        if (a->kind == "resolved-rewrite") continue;  // decoration, variables unchanged
        if (!a->map) throw error("compose_path: arc " + a->from + " -> " + a->to + " carries no substitution");
        out.target = a->map->target;
        for (auto& [name, img] : out.images) img = a->map->apply_forward(img);
    }
    return out;
}

std::vector<std::string> verify_tree(const DesingTree& tree) {
    std::vector<std::string> failures;
    for (const auto& arc : tree.arcs) {
        if (!arc.map) continue;
        const TreeNode& parent = tree.node(arc.from);
        const TreeNode& child = tree.node(arc.to);
        if (!arc.map->roundtrip_identity())
            failures.push_back("arc " + arc.from + " -> " + arc.to + ": round-trip identity failed");
        if (!arc.factor) continue;
        const ConstraintSet& base = arc.base ? *arc.base : child.part;
        Polynomial image = arc.map->apply_forward(parent.b);
        Polynomial normalized(child.ring);
        for (const auto& [mono, coef] : image.collect_by_main()) {
            Polynomial nf = base.normal_form(coef);
            if (!nf.is_zero())
                normalized = normalized + nf * Polynomial::monomial(child.ring, mono, Scalar::one(child.ring->field));
        }
        Polynomial expect =
            Polynomial::monomial(child.ring, *arc.factor, Scalar::one(child.ring->field)) * child.b;
        if (!(normalized == expect))
            failures.push_back("arc " + arc.from + " -> " + arc.to + ": substitute-and-factor identity failed");
    }
    return failures;
}

}  // namespace desing
