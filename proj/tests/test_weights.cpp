#include "doctest.h"

#include "desing/parse.hpp"
#include "desing/weights.hpp"

using namespace desing;

namespace {

const std::vector<WeightVec> B3_SUPPORT = {{3, 0}, {0, 5}, {2, 4}};
const std::vector<WeightVec> B0_ORIGIN_SUPPORT = {{1, 1}, {3, 0}, {0, 5}};
// x00 + x01^2 + x00^2*x01 + x02^3 + x00^2*x01*x02 at the origin
const std::vector<WeightVec> THREEFOLD_SUPPORT = {{1, 0, 0}, {0, 2, 0}, {2, 1, 0}, {0, 0, 3}, {2, 1, 1}};

bool contains(const std::vector<WeightVec>& set, const WeightVec& w) {
    return std::find(set.begin(), set.end(), w) != set.end();
}

}  // namespace

TEST_CASE("valid weight sequences for the paper supports") {
    SUBCASE("B_3 has (5,3)") {
        auto v = valid_weight_sequences(B3_SUPPORT);
        CHECK(contains(v, {5, 3}));
        CHECK(v.size() == 1);  // the only primitive one
    }
    SUBCASE("B_0 at the origin has (1,2) and (4,1)") {
        auto v = valid_weight_sequences(B0_ORIGIN_SUPPORT);
        CHECK(contains(v, {1, 2}));
        CHECK(contains(v, {4, 1}));
        CHECK(v.size() == 2);
    }
    SUBCASE("linear tie forces (1,1)") {
        auto v = valid_weight_sequences({{1, 0}, {0, 1}});
        CHECK(v == std::vector<WeightVec>{{1, 1}});
    }
    SUBCASE("fewer than two monomials is an error") {
        CHECK_THROWS_AS(valid_weight_sequences({{1, 0}}), error);
    }
}

TEST_CASE("minimal weight sequences") {
    SUBCASE("B_3: exactly (5,3)") {
        auto v = valid_weight_sequences(B3_SUPPORT);
        auto m = minimal_weight_sequences(v, B3_SUPPORT);
        CHECK(m == std::vector<WeightVec>{{5, 3}});
    }
    SUBCASE("B_0 origin: exactly {(1,2),(4,1)}") {
        auto v = valid_weight_sequences(B0_ORIGIN_SUPPORT);
        auto m = minimal_weight_sequences(v, B0_ORIGIN_SUPPORT);
        REQUIRE(m.size() == 2);
        CHECK(contains(m, {1, 2}));
        CHECK(contains(m, {4, 1}));
    }
    SUBCASE("a doubled sequence is removed") {
        std::vector<WeightVec> support = {{1, 0}, {0, 1}};
        auto m = minimal_weight_sequences({{1, 1}, {2, 2}}, support);
        CHECK(m == std::vector<WeightVec>{{1, 1}});
    }
    SUBCASE("three-variable example keeps exactly three branches") {
        auto v = bounded_weight_search(THREEFOLD_SUPPORT, 16);
        auto m = minimal_weight_sequences(v, THREEFOLD_SUPPORT);
        REQUIRE(m.size() == 3);
        CHECK(contains(m, {2, 1, 1}));
        CHECK(contains(m, {3, 2, 1}));
        CHECK(contains(m, {6, 3, 2}));
    }
}

TEST_CASE("unimodular_extend") {
    SUBCASE("(5,3) gives the rows [[2,5],[1,3]]") {
        auto um = unimodular_extend({5, 3});
        CHECK(um.M == std::vector<std::vector<long>>{{2, 5}, {1, 3}});
    }
    SUBCASE("(1,2) and (4,1) reproduce the motivational maps") {
        CHECK(unimodular_extend({1, 2}).M == std::vector<std::vector<long>>{{0, 1}, {1, 2}});
        CHECK(unimodular_extend({4, 1}).M == std::vector<std::vector<long>>{{1, 4}, {0, 1}});
    }
    SUBCASE("(1,1) pass") {
        CHECK(unimodular_extend({1, 1}).M == std::vector<std::vector<long>>{{0, 1}, {1, 1}});
    }
    SUBCASE("gcd is divided out") {
        CHECK(unimodular_extend({2, 4}).M == unimodular_extend({1, 2}).M);
    }
    SUBCASE("all-ones completes with the identity block") {
        auto um = unimodular_extend({1, 1, 1});
        // last column is the weight vector; M * M_inv = I was checked internally
        for (std::size_t r = 0; r < 3; ++r) CHECK(um.M[r][2] == 1);
    }
    SUBCASE("the Hauser completion") {
        auto um = unimodular_extend({7, 3, 2});
        CHECK(um.M == std::vector<std::vector<long>>{{0, 3, 7}, {1, 1, 3}, {0, 1, 2}});
    }
    SUBCASE("the Narasimhan completion") {
        auto um = unimodular_extend({32, 7, 19, 15});
        CHECK(um.M == std::vector<std::vector<long>>{{0, 1, 4, 32}, {0, 0, 1, 7}, {1, 0, 2, 19}, {0, 0, 2, 15}});
    }
}

namespace {

struct ArcFixture {
    RingPtr ring;
    Polynomial b;
    ConstraintSet part;
    std::vector<std::size_t> com{0, 1};
    std::vector<std::string> cv{"u", "t"};
    std::vector<std::string> cc{"au", "at"};
};

ArcFixture origin_fixture(const std::string& poly) {
    ArcFixture f;
    f.ring = make_ring(FieldSpec(0), {"a0", "a1"}, {"x0", "x1"});
    f.b = parse_polynomial(poly, f.ring);
    f.part = ConstraintSet(f.ring, {Polynomial::variable(f.ring, 0), Polynomial::variable(f.ring, 1)}, {});
    return f;
}

}  // namespace

TEST_CASE("build_arc_map and apply_arc on the motivational curve") {
    SUBCASE("b_3 with (5,3): factor u^5 t^15, cofactor 1 + u + u^3 t^7") {
        auto f = origin_fixture("x0^3 + x1^5 + x0^2*x1^4");
        auto arc = build_arc_map(f.part, f.ring, f.com, {0, 1}, {5, 3}, f.cv, f.cc);
        CHECK(arc.map.roundtrip_identity());
        CHECK(arc.map.phi_str(0) == "u^2*t^5");
        CHECK(arc.map.phi_str(1) == "u*t^3");
        auto app = apply_arc(f.b, arc, f.part);
        CHECK(app.child.str() == "1 + u + u^3*t^7");
        CHECK(monomial_str(*arc.child_ring, app.factor) == "u^5*t^15");
        CHECK_FALSE(app.child_part.is_empty());
        // the child part pins t = 0 and u = -1
        CHECK(app.child_part.normal_form(Polynomial::variable(arc.child_ring, 3)).is_zero());
        CHECK(app.child_part
                  .normal_form(Polynomial::variable(arc.child_ring, 2) + Polynomial::constant(arc.child_ring, 1))
                  .is_zero());
    }
    SUBCASE("b_0 at the origin with (1,2): factor t^3, cofactor 1 + u + u^5 t^7") {
        auto f = origin_fixture("x0^3 + x0*x1 + x1^5");
        auto arc = build_arc_map(f.part, f.ring, f.com, {0, 1}, {1, 2}, f.cv, f.cc);
        CHECK(arc.map.phi_str(0) == "t");
        CHECK(arc.map.phi_str(1) == "u*t^2");
        auto app = apply_arc(f.b, arc, f.part);
        CHECK(app.child.str() == "1 + u + u^5*t^7");
        CHECK(monomial_str(*arc.child_ring, app.factor) == "t^3");
    }
    SUBCASE("b_0 at the origin with (4,1): factor t^5, cofactor 1 + u + u^3 t^7") {
        auto f = origin_fixture("x0^3 + x0*x1 + x1^5");
        auto arc = build_arc_map(f.part, f.ring, f.com, {0, 1}, {4, 1}, f.cv, f.cc);
        CHECK(arc.map.phi_str(0) == "u*t^4");
        CHECK(arc.map.phi_str(1) == "t");
        auto app = apply_arc(f.b, arc, f.part);
        CHECK(app.child.str() == "1 + u + u^3*t^7");
        CHECK(monomial_str(*arc.child_ring, app.factor) == "t^5");
    }
}

TEST_CASE("the generic-part arc of the curve") {
    ArcFixture f;
    f.ring = make_ring(FieldSpec(0), {"a0", "a1"}, {"x0", "x1"});
    f.b = parse_polynomial("x0^3 + x0*x1 + x1^5", f.ring);
    ConstraintSet base(f.ring, {parse_polynomial("a0^3 + a0*a1 + a1^5", f.ring)}, {});
    ConstraintSet part = base.with_ineq(parse_polynomial("a1 + 3*a0^2", f.ring))
                             .with_ineq(parse_polynomial("a0 + 5*a1^4", f.ring));
    auto arc = build_arc_map(part, f.ring, f.com, {0, 1}, {1, 1}, f.cv, f.cc);
    // phi: x0 -> a0 + t, x1 -> a1 + u*t  (one valid completion)
    CHECK(arc.map.phi_str(0) == "a0 + t");
    CHECK(arc.map.phi_str(1) == "a1 + u*t");
    auto app = apply_arc(f.b, arc, part);
    CHECK(monomial_str(*arc.child_ring, app.factor) == "t");
    // the cofactor vanishes at the child generic point
    CHECK(app.child_part.normal_form(app.child.eval_at_coords(arc.child_coord_of_main)).is_zero());
    // the t-free, u-linear part of the cofactor carries the B_0 linear coefficients
    Polynomial c0 = app.child.coefficients_wrt(arc.child_ring->n_coords + 1)[0];  // t^0 part
    auto cs = c0.coefficients_wrt(arc.child_ring->n_coords);                      // powers of u
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].str() == "a1 + 3*a0^2");
    CHECK(cs[1].str() == "a0 + 5*a1^4");
}

TEST_CASE("oversized weight enumerations raise the limit error") {
    std::vector<WeightVec> support = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 2}};
    CHECK_THROWS_AS(bounded_weight_search(support, 32), limit_error);
}
