#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "desing/emit.hpp"
#include "desing/reduce.hpp"
#include "desing/tree.hpp"

#include <json.hpp>

using namespace desing;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_charts(const std::string& input) {
    ProblemSpec spec = parse_problem(slurp(input));
    std::size_t n = spec.b.ring()->n_mains();
    for (unsigned K = 0; K < (1u << n); ++K) {
        std::vector<std::string> vars, coords;
        for (std::size_t j = 0; j < n; ++j) {
            vars.push_back("x" + std::to_string(K) + "_" + std::to_string(j));
            coords.push_back("a" + std::to_string(K) + "_" + std::to_string(j));
        }
        ChartResult res = chart(spec.b, K, vars, coords);
        std::cout << "K=" << K << "  b_" << K << " = " << res.b_K.str();
        if (res.empty) {
            std::cout << "  EMPTY";
            if (res.witness) std::cout << " (forced nonzero constant " << res.witness->str() << ")";
        } else {
            std::cout << "  eq:";
            for (const auto& g : res.part.eq()) std::cout << " " << g.str();
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string& input, const std::vector<std::string>& hint_vars,
               const std::string& hint_g, long hint_k) {
    ProblemSpec spec = parse_problem(slurp(input));
    const RingPtr& r = spec.b.ring();

    if (!hint_vars.empty()) {
        std::vector<std::size_t> vars;
        for (const auto& name : hint_vars) {
            long idx = r->index_of(name);
            if (idx < 0 || static_cast<std::size_t>(idx) < r->n_coords)
                throw error("unknown hint variable: " + name);
            vars.push_back(static_cast<std::size_t>(idx) - r->n_coords);
        }
        Polynomial g = hint_g.empty() ? Polynomial::constant(r, 1) : parse_polynomial(hint_g, r);
        std::optional<Reduction> red;
        if (hint_k > 0)
            red = detect_power_pattern(spec.b, vars[0], static_cast<unsigned long>(hint_k), g);
        else
            red = detect_divisor_pattern(spec.b, vars, g);
        if (!red) {
            std::cout << "no reduction for the given hints\n";
            return 0;
        }
        std::cout << red->kind << ": " << red->description << "\n";
        std::cout << "reduced: " << red->reduced.str() << "\n";
        return 0;
    }

    auto [fin, trail] = reduction_pass(spec.b);
    if (trail.empty()) {
        std::cout << "no reduction applies\n";
    } else {
        for (const auto& red : trail) {
            std::cout << red.kind << ": " << red.description << "\n";
            if (!red.global_params.empty()) {
                std::cout << "  global parameters:";
                for (const auto& v : red.global_params) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        if (fin.is_zero())
            std::cout << "fully parameterized\n";
        else
            std::cout << "final: " << fin.str() << "\n";
    }
    return 0;
}

BuildOptions options_from(long max_depth, long series_order, long weight_bound, int jobs) {
    BuildOptions opt;
    opt.max_depth = max_depth;
    opt.series_order = series_order;
    opt.weight_bound = weight_bound;
    opt.jobs = jobs;
    return opt;
}

int cmd_tree(const std::string& input, const std::string& format, const BuildOptions& opt) {
    ProblemSpec spec = parse_problem(slurp(input));
    DesingTree tree = build_tree(spec, opt);
    auto failures = verify_tree(tree);
    if (!failures.empty()) {
        for (const auto& f : failures) std::cerr << "verification failure: " << f << "\n";
        return 2;
    }
    if (format == "json")
        std::cout << emit_json(tree);
    else if (format == "dot")
        std::cout << emit_dot(tree);
    else
        std::cout << emit_text(tree);
    return 0;
}

int cmd_series(const std::string& input, const std::string& node_id, const BuildOptions& opt) {
    ProblemSpec spec = parse_problem(slurp(input));
    if (node_id.empty()) {
        // check the input polynomial directly, anchored at the vanishing locus
        // of each candidate distinguished variable
        const RingPtr& r0 = spec.b.ring();
        std::vector<std::string> coords, mains;
        for (const auto& v : spec.var_names) {
            coords.push_back("a_" + v);
            mains.push_back(v);
        }
        RingPtr r = make_ring(spec.field, coords, mains);
        Polynomial b = spec.b.embed(r);
        std::vector<std::size_t> com(mains.size());
        for (std::size_t j = 0; j < mains.size(); ++j) com[j] = j;
        for (std::size_t unit = 0; unit < mains.size(); ++unit) {
            std::vector<Polynomial> eq;
            for (std::size_t j = 0; j < mains.size(); ++j)
                if (j != unit) eq.push_back(Polynomial::variable(r, j));
            eq.push_back(b.eval_at_coords(com));
            ConstraintSet part(r, eq, {});
            if (part.is_empty()) continue;
            for (std::size_t dist = 0; dist < mains.size(); ++dist) {
                if (dist == unit) continue;
                auto dec = check_resolved_roles(b, part, com, unit, dist);
                if (!dec) continue;
                std::cout << "strongly resolved: unit " << mains[unit] << ", distinguished "
                          << mains[dist] << "\n";
                std::cout << "f0 = " << dec->f0.str() << "\nf1 = " << dec->f1.str() << "\n";
                try {
                    TruncatedSeries s = unit_series(*dec, opt.series_order);
                    std::cout << mains[unit] << " = " << s.str() << "\n";
                } catch (const error& e) {
                    std::cout << "series unavailable: " << e.what() << "\n";
                }
                return 0;
            }
        }
        std::cout << "not in strongly resolved form\n";
        return 0;
    }
    DesingTree tree = build_tree(spec, opt);
    const TreeNode& n = tree.node(node_id);
    if (!n.resolved) {
        std::cout << "node " << node_id << " is not resolved (status " << n.status << ")\n";
        return 0;
    }
    const RingPtr& r = n.ring;
    std::cout << "node " << node_id << ": strongly resolved, unit "
              << r->vars[r->n_coords + n.resolved->unit_var] << ", distinguished "
              << r->vars[r->n_coords + n.resolved->dist_var] << "\n";
    if (n.series)
        std::cout << "series: " << n.series->str() << "\n";
    else
        std::cout << "series unavailable (coefficients involve generic coordinates)\n";
    return 0;
}

int cmd_verify(const std::string& input) {
    // re-check a saved JSON tree: arc identities modulo the child constraints
    nlohmann::json doc = nlohmann::json::parse(slurp(input));
    unsigned long characteristic = std::stoul(doc["problem"]["characteristic"].get<std::string>());
    FieldSpec field(characteristic);

    struct NodeData {
        RingPtr ring;
        Polynomial b;
        ConstraintSet part;
    };
    std::map<std::string, NodeData> nodes;
    for (const auto& jn : doc["nodes"]) {
        std::vector<std::string> coords, mains;
        for (const auto& c : jn["coords"]) coords.push_back(c.get<std::string>());
        for (const auto& v : jn["vars"]) mains.push_back(v.get<std::string>());
        NodeData nd;
        nd.ring = make_ring(field, coords, mains);
        nd.b = parse_polynomial(jn["b"].get<std::string>(), nd.ring);
        std::vector<Polynomial> eq, ineq;
        for (const auto& g : jn["eq"]) eq.push_back(parse_polynomial(g.get<std::string>(), nd.ring));
        for (const auto& g : jn["ineq"]) ineq.push_back(parse_polynomial(g.get<std::string>(), nd.ring));
        nd.part = ConstraintSet(nd.ring, eq, ineq);
        nodes.emplace(jn["id"].get<std::string>(), std::move(nd));
    }
    int checked = 0, failed = 0;
    for (const auto& ja : doc["arcs"]) {
        std::string kind = ja["kind"].get<std::string>();
        if (kind != "chart" && kind != "weight") continue;
        const NodeData& parent = nodes.at(ja["from"].get<std::string>());
        const NodeData& child = nodes.at(ja["to"].get<std::string>());
        // rebuild phi from its serialized images and re-run substitute-and-factor
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < parent.ring->n_coords; ++i) {
            long idx = child.ring->index_of(parent.ring->vars[i]);
            if (idx < 0) throw error("verify: missing coordinate " + parent.ring->vars[i]);
            images.push_back(Polynomial::variable(child.ring, static_cast<std::size_t>(idx)));
        }
        for (std::size_t j = 0; j < parent.ring->n_mains(); ++j) {
            std::string name = parent.ring->vars[parent.ring->n_coords + j];
            images.push_back(parse_polynomial(ja["phi"][name].get<std::string>(), child.ring));
        }
        Polynomial image = parent.b.substitute(images, child.ring);
        Polynomial factor = parse_polynomial(ja["factor"].get<std::string>(), child.ring);
        Polynomial difference = image - factor * child.b;
        bool ok = true;
        for (const auto& [mono, coef] : difference.collect_by_main())
            if (!child.part.normal_form(coef).is_zero()) ok = false;
        ++checked;
        if (!ok) {
            ++failed;
            std::cout << "FAIL arc " << ja["from"].get<std::string>() << " -> "
                      << ja["to"].get<std::string>() << "\n";
        }
    }
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " (" << checked << " arcs checked, " << failed
              << " failures)\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desingularization of hypersurface function fields"};
    app.require_subcommand(1);

    std::string input, format = "text", node_id, hint_g;
    std::vector<std::string> hint_vars;
    long max_depth = 16, series_order = 12, weight_bound = 16, hint_k = 0;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd, bool with_tree_flags) {
        cmd->add_option("--input", input, "problem description file")->required();
        if (with_tree_flags) {
            cmd->add_option("--max-depth", max_depth, "expansion depth limit");
            cmd->add_option("--series-order", series_order, "series truncation order");
            cmd->add_option("--weight-bound", weight_bound, "weight enumeration bound");
            cmd->add_option("--jobs", jobs, "concurrent node expansions");
        }
    };

    auto* charts_cmd = app.add_subcommand("charts", "list the affine charts");
    add_common(charts_cmd, false);

    auto* reduce_cmd = app.add_subcommand("reduce", "run the global-parameter reductions");
    add_common(reduce_cmd, false);
    reduce_cmd->add_option("--hint-var", hint_vars, "variable(s) for a hinted pattern");
    reduce_cmd->add_option("--hint-g", hint_g, "divisor polynomial for a hinted pattern");
    reduce_cmd->add_option("--hint-k", hint_k, "exponent for the power pattern");

    auto* tree_cmd = app.add_subcommand("tree", "build the desingularization tree");
    add_common(tree_cmd, true);
    tree_cmd->add_option("--format", format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));

    auto* series_cmd = app.add_subcommand("series", "strongly-resolved check and unit series");
    add_common(series_cmd, true);
    series_cmd->add_option("--node", node_id, "tree node to inspect (default: the input itself)");

    auto* verify_cmd = app.add_subcommand("verify", "re-check the arc identities of a saved tree");
    verify_cmd->add_option("--input", input, "tree JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (charts_cmd->parsed()) return cmd_charts(input);
        if (reduce_cmd->parsed()) return cmd_reduce(input, hint_vars, hint_g, hint_k);
        if (tree_cmd->parsed())
            return cmd_tree(input, format, options_from(max_depth, series_order, weight_bound, jobs));
        if (series_cmd->parsed())
            return cmd_series(input, node_id, options_from(max_depth, series_order, weight_bound, jobs));
        if (verify_cmd->parsed()) return cmd_verify(input);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
