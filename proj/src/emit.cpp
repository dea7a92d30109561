#include "desing/emit.hpp"

#include <json.hpp>

#include <sstream>

namespace desing {

using nlohmann::json;

namespace {

json series_json(const TruncatedSeries& s) {
    json out = json::object();
    for (const auto& [e, c] : s.coeffs) {
        std::ostringstream key;
        for (std::size_t i = s.ring->n_coords; i < s.ring->size(); ++i) {
            if (i > s.ring->n_coords) key << ",";
            key << e[i];
        }
        out[key.str()] = c.str();
    }
    return out;
}

json node_json(const TreeNode& n) {
    json out;
    out["id"] = n.id;
    out["b"] = n.b.str();
    json vars = json::array();
    for (std::size_t i = n.ring->n_coords; i < n.ring->size(); ++i) vars.push_back(n.ring->vars[i]);
    out["vars"] = vars;
    json coords = json::array();
    for (std::size_t i = 0; i < n.ring->n_coords; ++i) coords.push_back(n.ring->vars[i]);
    out["coords"] = coords;
    json eq = json::array();
    for (const auto& g : n.part.eq()) eq.push_back(g.str());
    out["eq"] = eq;
    json ineq = json::array();
    for (const auto& g : n.part.ineq()) ineq.push_back(g.str());
    out["ineq"] = ineq;
    out["status"] = n.status;
    if (!n.note.empty()) out["note"] = n.note;
    if (n.witness) out["witness"] = n.witness->str();
    if (!n.global_params.empty()) out["global_params"] = n.global_params;
    if (!n.reductions.empty()) {
        json reds = json::array();
        for (const auto& red : n.reductions) {
            json r;
            r["kind"] = red.kind;
            r["description"] = red.description;
            r["source"] = red.source.str();
            r["reduced"] = red.reduced.str();
            reds.push_back(r);
        }
        out["reductions"] = reds;
    }
    if (n.resolved) {
        json res;
        res["unit"] = n.ring->vars[n.ring->n_coords + n.resolved->unit_var];
        res["dist"] = n.ring->vars[n.ring->n_coords + n.resolved->dist_var];
        res["f0"] = n.resolved->f0.str();
        res["f1"] = n.resolved->f1.str();
        res["D"] = n.resolved->D.str();
        if (n.series) {
            res["series"] = series_json(*n.series);
            res["series_order"] = std::to_string(n.series->order);
        }
        if (n.rewrite) {
            res["phi"] = n.rewrite->phi_unit;
            res["psi"] = n.rewrite->psi_u0;
        }
        out["resolved"] = res;
    }
    return out;
}

json arc_json(const DesingTree& tree, const TreeArc& a) {
    json out;
    out["from"] = a.from;
    out["to"] = a.to;
    out["kind"] = a.kind;
    json phi = json::object(), psi = json::object();
    for (const auto& [k, v] : a.phi) phi[k] = v;
    for (const auto& [k, v] : a.psi) psi[k] = v;
    out["phi"] = phi;
    out["psi"] = psi;
    if (a.factor) {
        const TreeNode& child = tree.node(a.to);
        std::string f = monomial_str(*child.ring, *a.factor);
        out["factor"] = f.empty() ? "1" : f;
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string emit_json(const DesingTree& tree) {
    json out;
    json problem;
    problem["characteristic"] = std::to_string(tree.field.characteristic);
    problem["b"] = tree.problem_text;
    {
        json vars = json::array();
        const RingPtr& r = tree.nodes.front().ring;
        for (std::size_t i = r->n_coords; i < r->size(); ++i) vars.push_back(r->vars[i]);
        problem["vars"] = vars;
    }
    problem["max_depth"] = std::to_string(tree.options.max_depth);
    problem["series_order"] = std::to_string(tree.options.series_order);
    problem["weight_bound"] = std::to_string(tree.options.weight_bound);
    problem["nonvanishing_semantics"] = "ideal-membership";
    out["problem"] = problem;
    json nodes = json::array();
    for (const auto& n : tree.nodes) nodes.push_back(node_json(n));
    out["nodes"] = nodes;
    json arcs = json::array();
    for (const auto& a : tree.arcs) arcs.push_back(arc_json(tree, a));
    out["arcs"] = arcs;
    return out.dump(2) + "\n";
}

std::string emit_dot(const DesingTree& tree) {
    std::ostringstream os;
    os << "digraph desingularization {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& n : tree.nodes) {
        std::ostringstream label;
        label << n.id << ": " << n.b.str() << "\\n[" << n.status << "]";
        if (!n.part.eq().empty()) {
            label << "\\neq: ";
            for (std::size_t i = 0; i < n.part.eq().size(); ++i) {
                if (i) label << ", ";
                label << n.part.eq()[i].str();
            }
        }
        if (!n.part.ineq().empty()) {
            label << "\\nineq: ";
            for (std::size_t i = 0; i < n.part.ineq().size(); ++i) {
                if (i) label << ", ";
                label << n.part.ineq()[i].str();
            }
        }
        os << "  \"" << n.id << "\" [label=\"" << dot_escape(label.str()) << "\"];\n";
    }
    for (const auto& a : tree.arcs) {
        std::ostringstream label;
        label << a.kind;
        for (const auto& [k, v] : a.phi) label << "\\n" << k << " -> " << v;
        os << "  \"" << a.from << "\" -> \"" << a.to << "\" [label=\"" << dot_escape(label.str())
           << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_text(const DesingTree& tree) {
    std::ostringstream os;
    for (const auto& n : tree.nodes) {
        os << n.id << "  [" << n.status << "]  b = " << n.b.str();
        if (!n.note.empty()) os << "  (" << n.note << ")";
        if (n.witness) os << "  witness = " << n.witness->str();
        os << "\n";
        if (!n.part.eq().empty()) {
            os << "    eq:";
            for (const auto& g : n.part.eq()) os << "  " << g.str();
            os << "\n";
        }
        if (!n.part.ineq().empty()) {
            os << "    ineq:";
            for (const auto& g : n.part.ineq()) os << "  " << g.str();
            os << "\n";
        }
        if (n.series) os << "    series: " << n.series->str() << "\n";
    }
    return os.str();
}

}  // namespace desing
