#include "doctest.h"

#include <algorithm>
#include <set>

#include "desing/emit.hpp"
#include "desing/tree.hpp"

using namespace desing;

namespace {

DesingTree curve_tree(int jobs = 1) {
    ProblemSpec spec = parse_problem("char: 0\nvars: x0 x1\nb: x0^3 + x0*x1 + x1^5\n");
    BuildOptions opt;
    opt.max_depth = 4;
    opt.jobs = jobs;
    return build_tree(spec, opt);
}

// exponent pattern of a two-variable leaf polynomial, normalized to (unit, dist) order
std::multiset<std::pair<long, long>> leaf_pattern(const TreeNode& n) {
    std::multiset<std::pair<long, long>> out;
    for (const auto& [e, c] : n.b.terms()) out.insert({e[n.ring->n_coords], e[n.ring->n_coords + 1]});
    return out;
}

}  // namespace

TEST_CASE("the motivational curve tree") {
    DesingTree t = curve_tree();

    SUBCASE("root has four chart children, two empty") {
        auto arcs = t.arcs_from("0");
        REQUIRE(arcs.size() == 4);
        int empty = 0;
        for (const auto* a : arcs) {
            CHECK(a->kind == "chart");
            if (t.node(a->to).status == "empty") ++empty;
        }
        CHECK(empty == 2);
        CHECK(t.node("0.1").status == "empty");
        CHECK(t.node("0.2").status == "empty");
        // the inconsistency witness is a forced nonzero constant
        REQUIRE(t.node("0.1").witness.has_value());
        CHECK(t.node("0.1").witness->is_constant());
        CHECK_FALSE(t.node("0.1").witness->is_zero());
        REQUIRE(t.node("0.2").witness.has_value());
        CHECK(t.node("0.2").witness->is_constant());
    }

    SUBCASE("chart 3 expands through (5,3) to the resolved 1 + u + u^3 t^7") {
        auto arcs = t.arcs_from("0.3");
        REQUIRE(arcs.size() == 1);
        CHECK(arcs[0]->kind == "weight");
        const TreeNode& leaf = t.node(arcs[0]->to);
        CHECK(leaf.status == "resolved");
        // exponents {(0,0), (1,0), (3,7)} in (unit, dist) order
        std::multiset<std::pair<long, long>> expect = {{0, 0}, {1, 0}, {3, 7}};
        CHECK(leaf_pattern(leaf) == expect);
    }

    SUBCASE("the origin part of chart 0 yields the b_2 and b_3 leaves") {
        auto arcs = t.arcs_from("0.0");
        // parts: origin (2 weight children), two one-coefficient parts, the generic part
        REQUIRE(arcs.size() == 5);
        const TreeNode& c0 = t.node("0.0.0");
        const TreeNode& c1 = t.node("0.0.1");
        std::multiset<std::pair<long, long>> b2 = {{0, 0}, {1, 0}, {5, 7}};
        std::multiset<std::pair<long, long>> b3 = {{0, 0}, {1, 0}, {3, 7}};
        CHECK(leaf_pattern(c0) == b2);  // weight (1,2): 1 + u + u^5 t^7
        CHECK(leaf_pattern(c1) == b3);  // weight (4,1): 1 + u + u^3 t^7
        CHECK(c0.status == "resolved");
        CHECK(c1.status == "resolved");
    }

    SUBCASE("all leaves are resolved and the three motivational forms appear") {
        int b2_like = 0, b3_like = 0;
        for (const auto& n : t.nodes) {
            if (t.arcs_from(n.id).empty() && n.status != "empty") {
                CHECK(n.status == "resolved");
            }
            if (n.status == "resolved" && n.ring->n_mains() == 2) {
                auto p = leaf_pattern(n);
                if (p == std::multiset<std::pair<long, long>>{{0, 0}, {1, 0}, {5, 7}}) ++b2_like;
                if (p == std::multiset<std::pair<long, long>>{{0, 0}, {1, 0}, {3, 7}}) ++b3_like;
            }
        }
        CHECK(b2_like == 1);   // b_2 from the origin, weight (1,2)
        CHECK(b3_like == 2);   // b_3 from the origin (4,1) and b_1-equivalent from chart 3
    }

    SUBCASE("every arc passes re-verification") {
        CHECK(verify_tree(t).empty());
    }

    SUBCASE("compose_path on the chart-3 leaf gives x0 = t^-5 u^-2, x1 = t^-3 u^-1") {
        auto arcs = t.arcs_from("0.3");
        REQUIRE(arcs.size() == 1);
        ComposedMap cm = compose_path(t, arcs[0]->to);
        REQUIRE(cm.images.size() == 2);
        CHECK(cm.images[0].first == "x0");
        // u = x..._0 (slot 0), t = slot 1: x0 -> u^-2 t^-5
        const RingPtr& r = cm.target;
        Polynomial x0_expect(r), x1_expect(r);
        Exp e0(r->size(), 0), e1(r->size(), 0);
        e0[r->n_coords] = -2;
        e0[r->n_coords + 1] = -5;
        e1[r->n_coords] = -1;
        e1[r->n_coords + 1] = -3;
        x0_expect.add_term(e0, Scalar::one(r->field));
        x1_expect.add_term(e1, Scalar::one(r->field));
        CHECK(cm.images[0].second == x0_expect);
        CHECK(cm.images[1].second == x1_expect);
    }

    SUBCASE("compose_path of the root is the identity") {
        ComposedMap cm = compose_path(t, "0");
        CHECK(cm.images[0].second == Polynomial::variable(t.nodes.front().ring, 0));
    }

    SUBCASE("for every resolved leaf the composed map sends b to a monomial times the leaf polynomial") {
        for (const auto& n : t.nodes) {
            if (n.status != "resolved") continue;
            bool pure = true;  // only chart/weight arcs on the path
            std::string cur = n.id;
            while (cur != "0") {
                const TreeArc* a = t.arc_to(cur);
                if (a->kind == "resolved-rewrite") pure = false;
                cur = a->from;
            }
            if (!pure) continue;
            ComposedMap cm = compose_path(t, n.id);
            std::vector<Polynomial> images;
            for (auto& [name, img] : cm.images) images.push_back(img);
            Polynomial image = t.nodes.front().b.substitute(images, cm.target);
            Polynomial normalized(cm.target);
            for (const auto& [mono, coef] : image.collect_by_main()) {
                Polynomial nf = n.part.normal_form(coef);
                if (!nf.is_zero())
                    normalized = normalized + nf * Polynomial::monomial(cm.target, mono, Scalar::one(cm.target->field));
            }
            auto [content, cof] = normalized.monomial_content();
            // compare modulo the leaf's constraints: the leaf polynomial was
            // normalized against the arc-time part, which knows fewer relations
            Polynomial expect(cm.target);
            for (const auto& [mono, coef] : n.b.collect_by_main()) {
                Polynomial nf = n.part.normal_form(coef);
                if (!nf.is_zero())
                    expect = expect + nf * Polynomial::monomial(cm.target, mono, Scalar::one(cm.target->field));
            }
            CHECK(cof == expect);
        }
    }
}

TEST_CASE("the three-branch threefold example") {
    // the tree is driven from the origin part directly: chart 0 of the input
    ProblemSpec spec =
        parse_problem("char: 0\nvars: x00 x01 x02\nb: x00 + x01^2 + x00^2*x01 + x02^3 + x00^2*x01*x02\n");
    BuildOptions opt;
    opt.max_depth = 3;
    DesingTree t = build_tree(spec, opt);
    // chart 0 carries the original polynomial; its origin part is the singular one
    auto arcs0 = t.arcs_from("0.0");
    // the partition isolates the origin (all three initial monomials) plus smooth parts;
    // the origin part contributes exactly three weight branches
    int weight_children_from_origin = 0;
    for (const auto* a : arcs0) {
        if (a->kind != "weight") continue;
        const TreeNode& child = t.node(a->to);
        // children of the origin part inherit a coordinate ideal pinning all three parents
        bool origin_child = true;
        for (std::size_t j = 0; j < 3; ++j) {
            Polynomial aj = Polynomial::variable(child.ring, t.node("0.0").coord_of_main[j]);
            if (!child.part.normal_form(aj.embed(child.ring)).is_zero()) origin_child = false;
        }
        if (origin_child) ++weight_children_from_origin;
    }
    CHECK(weight_children_from_origin == 3);
    CHECK(verify_tree(t).empty());
}

TEST_CASE("max_depth = 0 leaves the root depth-limited") {
    ProblemSpec spec = parse_problem("char: 0\nvars: x0 x1\nb: x0^3 + x0*x1 + x1^5\n");
    BuildOptions opt;
    opt.max_depth = 0;
    DesingTree t = build_tree(spec, opt);
    REQUIRE(t.nodes.size() == 1);
    CHECK(t.nodes[0].status == "depth-limited");
}

TEST_CASE("emitters") {
    DesingTree t = curve_tree();
    SUBCASE("JSON is deterministic and contains the leaf shape") {
        std::string a = emit_json(t);
        std::string b = emit_json(curve_tree());
        CHECK(a == b);
        CHECK(a.find("1 + u + u^3*t^7") == std::string::npos);  // leaves use node-numbered names
        CHECK(a.find("\"status\": \"resolved\"") != std::string::npos);
        CHECK(a.find("\"factor\"") != std::string::npos);
    }
    SUBCASE("JSON is identical across --jobs settings") {
        CHECK(emit_json(curve_tree(1)) == emit_json(curve_tree(4)));
    }
    SUBCASE("DOT text is balanced") {
        std::string d = emit_dot(t);
        CHECK(d.find("digraph") == 0);
        CHECK(std::count(d.begin(), d.end(), '{') == 1);
        CHECK(std::count(d.begin(), d.end(), '}') == 1);
        CHECK(d.find("->") != std::string::npos);
    }
    SUBCASE("a resolved input is certified on the distinguished locus") {
        ProblemSpec spec = parse_problem("char: 0\nvars: u t\nb: 1 + u + u^3*t^7\n");
        BuildOptions opt;
        opt.max_depth = 2;
        DesingTree t2 = build_tree(spec, opt);
        // chart 0 reproduces b; the partition isolates the locus t = 0,
        // where the polynomial is already in strongly resolved form
        const TreeNode& c0 = t2.node("0.0");
        CHECK(c0.status == "expanded");
        bool certified = false;
        for (const auto* a : t2.arcs_from("0.0")) {
            const TreeNode& ch = t2.node(a->to);
            if (a->kind == "resolved-rewrite") {
                CHECK(ch.status == "resolved");
                certified = true;
            }
        }
        CHECK(certified);
    }
}
