#include "desing/charts.hpp"

namespace desing {

Polynomial multi_homogenize(const Polynomial& b) {
    const RingPtr& src = b.ring();
    if (src->n_coords != 0) throw error("multi_homogenize expects a plain polynomial ring");
    std::size_t n = src->n_mains();
    std::vector<std::string> gh;
    for (std::size_t i = 0; i < n; ++i) {
        gh.push_back("g" + std::to_string(i));
        gh.push_back("h" + std::to_string(i));
    }
    RingPtr ring = make_ring(src->field, {}, gh);
    std::vector<long> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = b.degree_in(i);
    Polynomial out(ring);
    for (const auto& [e, c] : b.terms()) {
        Exp ne(ring->size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] < 0) throw error("multi_homogenize: negative exponent");
            ne[2 * i] = e[i];                // g_i
            ne[2 * i + 1] = deg[i] - e[i];   // h_i
        }
        out.add_term(ne, c);
    }
    return out;
}

ChartResult chart(const Polynomial& b, unsigned K, const std::vector<std::string>& chart_vars,
                  const std::vector<std::string>& chart_coords) {
    const RingPtr& src = b.ring();
    std::size_t n = src->n_mains();
    if (chart_vars.size() != n || chart_coords.size() != n)
        throw error("chart: need one variable and one coordinate name per affine direction");
    if (K >= (1u << n)) throw error("chart index out of range");

    ChartResult res;
    res.K = K;
    res.ring = make_ring(src->field, chart_coords, chart_vars);

    Polynomial bstar = multi_homogenize(b);
    // g_j -> x_{K,j} or 1, h_j -> 1 or x_{K,j}
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
        bool inverted = (K >> j) & 1u;
        Polynomial xj = Polynomial::variable(res.ring, res.ring->n_coords + j);
        Polynomial one = Polynomial::constant(res.ring, 1);
        images.push_back(inverted ? one : xj);  // g_j
        images.push_back(inverted ? xj : one);  // h_j
    }
    Polynomial raw = bstar.substitute(images, res.ring);
    auto [content, bK] = raw.monomial_content();
    res.b_K = bK;

    // constraints: a_{K,j} = 0 where K_j = 1, plus b_K at the generic point
    std::vector<std::size_t> coord_of_main(n);
    for (std::size_t j = 0; j < n; ++j) coord_of_main[j] = j;
    std::vector<Polynomial> eq;
    for (std::size_t j = 0; j < n; ++j)
        if ((K >> j) & 1u) eq.push_back(Polynomial::variable(res.ring, j));
    Polynomial b_at_a = res.b_K.eval_at_coords(coord_of_main);
    eq.push_back(b_at_a);
    res.part = ConstraintSet(res.ring, eq, {});

    if (res.part.is_empty()) {
        res.empty = true;
        // reduce b_K(a) modulo just the vanishing coordinates: the forced constant
        std::vector<Polynomial> axes;
        for (std::size_t j = 0; j < n; ++j)
            if ((K >> j) & 1u) axes.push_back(Polynomial::variable(res.ring, j));
        res.witness = reduce_mod(b_at_a, groebner_basis(axes));
    }

    // arc map x_j -> x_{K,j}^{(-1)^{K_j}}
    res.map.source = src;
    res.map.target = res.ring;
    res.map.kind = "chart";
    for (std::size_t j = 0; j < n; ++j) {
        bool inverted = (K >> j) & 1u;
        Exp e(res.ring->size(), 0);
        e[res.ring->n_coords + j] = inverted ? -1 : 1;
        res.map.fwd_monomial.push_back(e);
        res.map.fwd_translation.push_back(Polynomial::zero(res.ring));
    }
    res.map.back.assign(n, std::vector<long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) res.map.back[j][j] = ((K >> j) & 1u) ? -1 : 1;
    return res;
}

}  // namespace desing
