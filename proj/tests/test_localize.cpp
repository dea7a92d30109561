#include "doctest.h"

#include "desing/localize.hpp"
#include "desing/parse.hpp"

using namespace desing;

namespace {

struct CurveNode {
    RingPtr ring;  // coords a0 a1, mains x0 x1
    Polynomial b;
    ConstraintSet part;
    std::vector<std::size_t> com{0, 1};
};

CurveNode curve_node() {
    CurveNode n;
    n.ring = make_ring(FieldSpec(0), {"a0", "a1"}, {"x0", "x1"});
    n.b = parse_polynomial("x0^3 + x0*x1 + x1^5", n.ring);
    n.part = ConstraintSet(n.ring, {parse_polynomial("a0^3 + a0*a1 + a1^5", n.ring)}, {});
    return n;
}

CurveNode origin_chart3_node() {
    CurveNode n;
    n.ring = make_ring(FieldSpec(0), {"a0", "a1"}, {"x0", "x1"});
    n.b = parse_polynomial("x0^3 + x1^5 + x0^2*x1^4", n.ring);
    n.part = ConstraintSet(n.ring, {parse_polynomial("a0", n.ring), parse_polynomial("a1", n.ring)}, {});
    return n;
}

Exp main_exp(const RingPtr& r, long e0, long e1) {
    Exp e(r->size(), 0);
    e[r->n_coords] = e0;
    e[r->n_coords + 1] = e1;
    return e;
}

}  // namespace

TEST_CASE("translate reproduces the B_0 coefficients of the curve") {
    auto n = curve_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto groups = B.B.collect_by_main();
    // coefficient of y0 is a1 + 3a0^2; of y1 is a0 + 5a1^4
    CHECK(groups.at(main_exp(n.ring, 1, 0)).str() == "a1 + 3*a0^2");
    CHECK(groups.at(main_exp(n.ring, 0, 1)).str() == "a0 + 5*a1^4");
    CHECK(groups.at(main_exp(n.ring, 2, 0)).str() == "3*a0");
    CHECK(groups.at(main_exp(n.ring, 1, 1)).str() == "1");
    CHECK(groups.at(main_exp(n.ring, 0, 2)).str() == "10*a1^3");
    CHECK(groups.at(main_exp(n.ring, 3, 0)).str() == "1");
    CHECK(groups.at(main_exp(n.ring, 0, 3)).str() == "10*a1^2");
    CHECK(groups.at(main_exp(n.ring, 0, 4)).str() == "5*a1");
    CHECK(groups.at(main_exp(n.ring, 0, 5)).str() == "1");
    // the constant term vanishes modulo the augmented constraints
    Exp zero(n.ring->size(), 0);
    CHECK(B.origin.normal_form(groups.at(zero)).is_zero());
}

TEST_CASE("translate at the origin gives B_3 = y0^3 + y1^5 + y0^2*y1^4") {
    auto n = origin_chart3_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto init = initial_monomials(B, B.origin);
    REQUIRE(init.size() == 3);
    CHECK(init[0] == main_exp(n.ring, 3, 0));   // y0^3 (degree 3)
    CHECK(init[1] == main_exp(n.ring, 0, 5));   // y1^5
    CHECK(init[2] == main_exp(n.ring, 2, 4));   // y0^2 y1^4
}

TEST_CASE("translate of a linear polynomial at the origin") {
    auto r = make_ring(FieldSpec(0), {"a0"}, {"x0"});
    Polynomial b = Polynomial::variable(r, 1);
    ConstraintSet part(r, {Polynomial::variable(r, 0)}, {});
    LocalizedPoly B = translate(b, part, {0});
    CHECK(B.B == Polynomial::variable(r, 0) + Polynomial::variable(r, 1));
    auto init = initial_monomials(B, B.origin);
    REQUIRE(init.size() == 1);
}

TEST_CASE("initial monomials form an antichain covering the support") {
    auto n = curve_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto parts = partition_by_init(B);
    for (const auto& p : parts) {
        for (const auto& a : p.init)
            for (const auto& b : p.init)
                if (a != b) CHECK_FALSE(divides(a, b));
        for (const auto& s : p.present) {
            bool covered = false;
            for (const auto& a : p.init)
                if (divides(a, s)) covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("partition of the curve at chart 0: four parts, correct init sets") {
    auto n = curve_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto parts = partition_by_init(B);
    REQUIRE(parts.size() == 4);
    // order: origin part, then y1-coeff-zero, then y0-coeff-zero, then generic
    CHECK(parts[0].init == std::vector<Exp>{main_exp(n.ring, 1, 1), main_exp(n.ring, 3, 0), main_exp(n.ring, 0, 5)});
    CHECK(parts[1].init == std::vector<Exp>{main_exp(n.ring, 1, 0), main_exp(n.ring, 0, 2)});
    CHECK(parts[2].init == std::vector<Exp>{main_exp(n.ring, 0, 1), main_exp(n.ring, 2, 0)});
    CHECK(parts[3].init == std::vector<Exp>{main_exp(n.ring, 0, 1), main_exp(n.ring, 1, 0)});
    // the origin part pins both coordinates
    CHECK(parts[0].part.normal_form(Polynomial::variable(n.ring, 0)).is_zero());
    CHECK(parts[0].part.normal_form(Polynomial::variable(n.ring, 1)).is_zero());
}

TEST_CASE("partition of B_3 has a single part") {
    auto n = origin_chart3_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto parts = partition_by_init(B);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].init.size() == 3);
}

TEST_CASE("constant-coefficient support needs no splits") {
    auto r = make_ring(FieldSpec(0), {"a0", "a1"}, {"x0", "x1"});
    Polynomial b = parse_polynomial("x0^2 + x1^3", r);
    ConstraintSet part(r, {Polynomial::variable(r, 0), Polynomial::variable(r, 1)}, {});
    LocalizedPoly B = translate(b, part, {0, 1});
    auto parts = partition_by_init(B);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].init.size() == 2);
}

TEST_CASE("sibling parts are pairwise disjoint") {
    auto n = curve_node();
    LocalizedPoly B = translate(n.b, n.part, n.com);
    auto parts = partition_by_init(B);
    // intersecting any two distinct parts yields an empty part
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            std::vector<Polynomial> eq = parts[i].part.eq(), in = parts[i].part.ineq();
            eq.insert(eq.end(), parts[j].part.eq().begin(), parts[j].part.eq().end());
            in.insert(in.end(), parts[j].part.ineq().begin(), parts[j].part.ineq().end());
            ConstraintSet both(n.ring, eq, in);
            CHECK(both.is_empty());
        }
    }
}
