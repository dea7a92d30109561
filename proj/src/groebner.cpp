#include "desing/groebner.hpp"

#include <algorithm>
#include <deque>

namespace desing {

bool grlex_less(const Exp& a, const Exp& b) { return series_less(a, b); }

std::pair<Exp, Scalar> leading_term(const Polynomial& p) {
    if (p.is_zero()) throw error("leading term of zero polynomial");
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto [e, c] = leading_term(p);
    return p * c.inverse();
}

Polynomial reduce_mod(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial r = f;
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        // reduce the grlex-largest reducible term
        std::vector<std::pair<Exp, Scalar>> terms(r.terms().begin(), r.terms().end());
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
        for (const auto& [e, c] : terms) {
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                auto [ge, gc] = leading_term(g);
                if (!divides(ge, e)) continue;
                Polynomial t = Polynomial::monomial(r.ring(), exp_sub(e, ge), c / gc);
                r = r - t * g;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return r;
}

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g));
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end(),
                            [](const Polynomial& a, const Polynomial& b) { return a == b; }),
                basis.end());
    if (basis.empty()) return basis;

    struct Pair {
        std::size_t i, j;
        long deg;
    };
    auto lcm_exp = [](const Exp& a, const Exp& b) {
        Exp r(a);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = std::max(r[k], b[k]);
        return r;
    };
    std::deque<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto [ei, ci] = leading_term(basis[i]);
            auto [ej, cj] = leading_term(basis[j]);
            // Buchberger's first criterion: coprime leading monomials reduce to zero.
            bool coprime = true;
            for (std::size_t k = 0; k < ei.size(); ++k)
                if (ei[k] > 0 && ej[k] > 0) coprime = false;
            if (coprime) continue;
            queue.push_back({i, j, total_degree(lcm_exp(ei, ej))});
        }
        std::stable_sort(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        });
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [i, j, deg] = queue.front();
        queue.pop_front();
        auto [ei, ci] = leading_term(basis[i]);
        auto [ej, cj] = leading_term(basis[j]);
        Exp l = lcm_exp(ei, ej);
        Polynomial s = basis[i] * Polynomial::monomial(basis[i].ring(), exp_sub(l, ei), Scalar::one(basis[i].ring()->field)) -
                       basis[j] * Polynomial::monomial(basis[j].ring(), exp_sub(l, ej), Scalar::one(basis[j].ring()->field));
        Polynomial r = reduce_mod(s, basis);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r));
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop members whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto [ei, ci] = leading_term(basis[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            auto [ej, cj] = leading_term(basis[j]);
            if (divides(ej, ei) && (ej != ei || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // autoreduce
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_mod(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(make_monic(r));
    }
    std::sort(reduced.begin(), reduced.end());
    return reduced;
}

}  // namespace desing
