#include "doctest.h"

#include <random>

#include "desing/polynomial.hpp"

using namespace desing;

namespace {

RingPtr ring2(unsigned long p = 0) { return make_ring(FieldSpec(p), {}, {"x0", "x1"}); }

Polynomial curve(const RingPtr& r) {
    // x0^3 + x0*x1 + x1^5
    Polynomial p(r);
    p.add_term({3, 0}, Scalar::one(r->field));
    p.add_term({1, 1}, Scalar::one(r->field));
    p.add_term({0, 5}, Scalar::one(r->field));
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    auto r = ring2();
    Polynomial b = curve(r);
    CHECK(b * Polynomial::constant(r, 1) == b);
    CHECK((b - b).is_zero());

    auto f2r = ring2(2);
    Polynomial s = Polynomial::variable(f2r, 0) + Polynomial::variable(f2r, 1);
    Polynomial sq = s.pow(2);  // Frobenius in F_2
    Polynomial expect(f2r);
    expect.add_term({2, 0}, Scalar::one(f2r->field));
    expect.add_term({0, 2}, Scalar::one(f2r->field));
    CHECK(sq == expect);
}

TEST_CASE("substitute: the (5,3)-map image of b_3") {
    // f = x0^3 + x1^5 + x0^2*x1^4 under x0 -> u^2 t^5, x1 -> u t^3
    auto src = ring2();
    Polynomial f(src);
    f.add_term({3, 0}, Scalar::one(src->field));
    f.add_term({0, 5}, Scalar::one(src->field));
    f.add_term({2, 4}, Scalar::one(src->field));
    auto dst = make_ring(FieldSpec(0), {}, {"u", "t"});
    std::vector<Polynomial> images = {Polynomial::monomial(dst, {2, 5}, Scalar::one(dst->field)),
                                      Polynomial::monomial(dst, {1, 3}, Scalar::one(dst->field))};
    Polynomial g = f.substitute(images, dst);
    Polynomial expect(dst);
    expect.add_term({6, 15}, Scalar::one(dst->field));
    expect.add_term({5, 15}, Scalar::one(dst->field));
    expect.add_term({8, 22}, Scalar::one(dst->field));
    CHECK(g == expect);

    // translation image: x0 -> a + y0 stays linear
    auto dst2 = make_ring(FieldSpec(0), {"a"}, {"y0", "y1"});
    std::vector<Polynomial> tr = {
        Polynomial::variable(dst2, 0) + Polynomial::variable(dst2, 1),
        Polynomial::variable(dst2, 2),
    };
    Polynomial x0 = Polynomial::variable(src, 0);
    CHECK(x0.substitute(tr, dst2) == Polynomial::variable(dst2, 0) + Polynomial::variable(dst2, 1));

    // Laurent inversion: x0*x1 -> x0'^-1 * x1'^-1
    auto dst3 = make_ring(FieldSpec(0), {}, {"p", "q"});
    std::vector<Polynomial> inv = {Polynomial::monomial(dst3, {-1, 0}, Scalar::one(dst3->field)),
                                   Polynomial::monomial(dst3, {0, -1}, Scalar::one(dst3->field))};
    Polynomial m = Polynomial::monomial(src, {1, 1}, Scalar::one(src->field));
    Polynomial mi = m.substitute(inv, dst3);
    CHECK(mi == Polynomial::monomial(dst3, {-1, -1}, Scalar::one(dst3->field)));
}

TEST_CASE("substitute respects ring maps on randomized inputs") {
    std::mt19937 rng(4242);
    auto src = ring2();
    auto dst = make_ring(FieldSpec(0), {}, {"u", "t"});
    std::uniform_int_distribution<long> exp(0, 3), coeff(-3, 3), img(0, 2);
    auto rand_poly = [&](const RingPtr& r) {
        Polynomial p(r);
        for (int i = 0; i < 4; ++i) p.add_term({exp(rng), exp(rng)}, Scalar(r->field, coeff(rng)));
        return p;
    };
    for (int it = 0; it < 50; ++it) {
        std::vector<Polynomial> images = {
            Polynomial::monomial(dst, {img(rng), img(rng)}, Scalar(dst->field, 1)) +
                Polynomial::constant(dst, coeff(rng)),
            Polynomial::monomial(dst, {img(rng), img(rng)}, Scalar(dst->field, 1)),
        };
        Polynomial f = rand_poly(src), g = rand_poly(src);
        CHECK((f * g).substitute(images, dst) == f.substitute(images, dst) * g.substitute(images, dst));
        CHECK((f + g).substitute(images, dst) == f.substitute(images, dst) + g.substitute(images, dst));
    }
}

TEST_CASE("monomial_content") {
    auto r = make_ring(FieldSpec(0), {}, {"u", "t"});
    SUBCASE("the b_7 factorization input") {
        Polynomial f(r);
        f.add_term({6, 15}, Scalar::one(r->field));
        f.add_term({5, 15}, Scalar::one(r->field));
        f.add_term({8, 22}, Scalar::one(r->field));
        auto [m, g] = f.monomial_content();
        CHECK(m == Exp{5, 15});
        Polynomial expect(r);
        expect.add_term({1, 0}, Scalar::one(r->field));
        expect.add_term({0, 0}, Scalar::one(r->field));
        expect.add_term({3, 7}, Scalar::one(r->field));
        CHECK(g == expect);
        CHECK(Polynomial::monomial(r, m, Scalar::one(r->field)) * g == f);
    }
    SUBCASE("single monomial") {
        Polynomial f = Polynomial::variable(r, 0);
        auto [m, g] = f.monomial_content();
        CHECK(m == Exp{1, 0});
        CHECK(g == Polynomial::constant(r, 1));
    }
    SUBCASE("Laurent content: x^-2*y + x^-1") {
        Polynomial f(r);
        f.add_term({-2, 1}, Scalar::one(r->field));
        f.add_term({-1, 0}, Scalar::one(r->field));
        auto [m, g] = f.monomial_content();
        CHECK(m == Exp{-2, 0});
        Polynomial expect(r);
        expect.add_term({0, 1}, Scalar::one(r->field));
        expect.add_term({1, 0}, Scalar::one(r->field));
        CHECK(g == expect);
    }
    SUBCASE("zero polynomial is an error") {
        CHECK_THROWS_AS(Polynomial(r).monomial_content(), error);
    }
}

TEST_CASE("monomial_content round-trips on random Laurent inputs") {
    std::mt19937 rng(777);
    auto r = make_ring(FieldSpec(0), {}, {"u", "t", "w"});
    std::uniform_int_distribution<long> exp(-4, 4), coeff(-5, 5);
    for (int it = 0; it < 100; ++it) {
        Polynomial f(r);
        for (int i = 0; i < 5; ++i) f.add_term({exp(rng), exp(rng), exp(rng)}, Scalar(r->field, coeff(rng)));
        if (f.is_zero()) continue;
        auto [m, g] = f.monomial_content();
        CHECK(Polynomial::monomial(r, m, Scalar::one(r->field)) * g == f);
        bool has_zero_min = true;
        for (std::size_t i = 0; i < r->size(); ++i)
            if (g.min_exponent_in(i) != 0) has_zero_min = false;
        CHECK(has_zero_min);
    }
}

TEST_CASE("coefficients_wrt") {
    auto r = make_ring(FieldSpec(0), {}, {"x0", "y", "z"});
    SUBCASE("x0^2 - y^2*z in x0") {
        Polynomial f(r);
        f.add_term({2, 0, 0}, Scalar::one(r->field));
        f.add_term({0, 2, 1}, -Scalar::one(r->field));
        auto cs = f.coefficients_wrt(0);
        REQUIRE(cs.size() == 3);
        Polynomial myz(r);
        myz.add_term({0, 2, 1}, -Scalar::one(r->field));
        CHECK(cs[0] == myz);
        CHECK(cs[1].is_zero());
        CHECK(cs[2] == Polynomial::constant(r, 1));
    }
    SUBCASE("free variable gives a single coefficient") {
        Polynomial f = Polynomial::variable(r, 1, 5);
        auto cs = f.coefficients_wrt(0);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0] == f);
    }
    SUBCASE("reassembly identity") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<long> exp(0, 4), coeff(-5, 5);
        for (int it = 0; it < 50; ++it) {
            Polynomial f(r);
            for (int i = 0; i < 6; ++i) f.add_term({exp(rng), exp(rng), exp(rng)}, Scalar(r->field, coeff(rng)));
            auto cs = f.coefficients_wrt(1);
            Polynomial sum(r);
            for (std::size_t j = 0; j < cs.size(); ++j)
                sum = sum + cs[j] * Polynomial::variable(r, 1, static_cast<long>(j));
            if (f.is_zero())
                CHECK(sum.is_zero());
            else
                CHECK(sum == f);
        }
    }
}

TEST_CASE("pth_root") {
    auto r = ring2(2);
    SUBCASE("x0^2 + x1^2 in F_2") {
        Polynomial f(r);
        f.add_term({2, 0}, Scalar::one(r->field));
        f.add_term({0, 2}, Scalar::one(r->field));
        auto g = f.pth_root(2);
        REQUIRE(g.has_value());
        CHECK(*g == Polynomial::variable(r, 0) + Polynomial::variable(r, 1));
        CHECK(g->pow(2) == f);
    }
    SUBCASE("x0 is not a square") {
        CHECK_FALSE(Polynomial::variable(r, 0).pth_root(2).has_value());
    }
}

TEST_CASE("printing is canonical, ascending series order") {
    auto r = ring2();
    CHECK(curve(r).str() == "x0*x1 + x0^3 + x1^5");
    auto rc = make_ring(FieldSpec(0), {"a0", "a1"}, {"y0", "y1"});
    Polynomial p(rc);
    p.add_term({0, 1, 1, 0}, Scalar::one(rc->field));   // a1*y0
    p.add_term({2, 0, 1, 0}, Scalar(rc->field, 3));     // 3*a0^2*y0
    p.add_term({0, 0, 0, 1}, -Scalar::one(rc->field));  // -y1
    CHECK(p.str() == "-y1 + a1*y0 + 3*a0^2*y0");
    CHECK(Polynomial(r).str() == "0");
}

TEST_CASE("exact division") {
    auto r = ring2();
    Polynomial b = curve(r);
    Polynomial d = Polynomial::variable(r, 0) + Polynomial::variable(r, 1, 2);
    CHECK((b * d).divide_exact(d).value() == b);
    CHECK_FALSE(b.divide_exact(d).has_value());
}
