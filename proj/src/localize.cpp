#include "desing/localize.hpp"

#include <algorithm>

namespace desing {

LocalizedPoly translate(const Polynomial& b, const ConstraintSet& part,
                        const std::vector<std::size_t>& coord_of_main) {
    if (part.is_empty()) throw error("translate: inconsistent part");
    const RingPtr& r = b.ring();
    if (coord_of_main.size() != r->n_mains()) throw error("translate: coordinate map must cover all main variables");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->n_coords; ++i) images.push_back(Polynomial::variable(r, i));
    for (std::size_t j = 0; j < r->n_mains(); ++j)
        images.push_back(Polynomial::variable(r, coord_of_main[j]) + Polynomial::variable(r, r->n_coords + j));
    LocalizedPoly out;
    out.B = b.substitute(images, r);
    out.origin = part.with_eq(b.eval_at_coords(coord_of_main));
    out.coord_of_main = coord_of_main;
    if (out.origin.is_empty()) throw error("translate: generic point inconsistent with the part");
    return out;
}

namespace {

std::vector<Exp> minimal_elements(const std::vector<Exp>& support) {
    std::vector<Exp> mins;
    for (const auto& e : support) {
        bool dominated = false;
        for (const auto& f : support)
            if (f != e && divides(f, e)) {
                dominated = true;
                break;
            }
        if (!dominated) mins.push_back(e);
    }
    std::sort(mins.begin(), mins.end(), series_less);
    return mins;
}

}  // namespace

std::vector<Exp> present_support(const LocalizedPoly& B, const ConstraintSet& part) {
    std::vector<Exp> out;
    for (const auto& [mono, coef] : B.B.collect_by_main()) {
        if (total_degree(mono) == 0) continue;  // the constant term vanishes at the generic point
        if (!part.normal_form(coef).is_zero()) out.push_back(mono);
    }
    std::sort(out.begin(), out.end(), series_less);
    return out;
}

std::vector<Exp> initial_monomials(const LocalizedPoly& B, const ConstraintSet& part) {
    std::vector<Exp> support = present_support(B, part);
    if (support.empty()) throw error("degenerate part: every coefficient vanishes modulo the constraints");
    {
        // the generic point must lie on the hypersurface
        Exp zero(B.B.ring()->size(), 0);
        auto groups = B.B.collect_by_main();
        auto it = groups.find(zero);
        if (it != groups.end() && !part.normal_form(it->second).is_zero())
            throw error("constant term does not vanish at the generic point");
    }
    return minimal_elements(support);
}

namespace {

void refine(const LocalizedPoly& B, const ConstraintSet& part, std::vector<PartInit>& out, int depth) {
    if (depth > 64) throw limit_error("partition_by_init: refinement depth limit exceeded");
    auto groups = B.B.collect_by_main();
    std::vector<Exp> support;
    for (const auto& [mono, coef] : groups) {
        if (total_degree(mono) == 0) continue;
        if (!part.normal_form(coef).is_zero()) support.push_back(mono);
    }
    if (support.empty()) throw error("degenerate part: every coefficient vanishes modulo the constraints");
    std::vector<Exp> mins = minimal_elements(support);
    for (const auto& m : mins) {
        const Polynomial& coef = groups.at(m);
        if (part.decided_nonzero(coef)) continue;
        auto [zero_side, nonzero_side] = part.split(coef);
        if (zero_side) refine(B, *zero_side, out, depth + 1);
        if (nonzero_side) refine(B, *nonzero_side, out, depth + 1);
        return;
    }
    PartInit pi;
    pi.part = part;
    pi.init = std::move(mins);
    std::sort(support.begin(), support.end(), series_less);
    pi.present = std::move(support);
    out.push_back(std::move(pi));
}

}  // namespace

std::vector<PartInit> partition_by_init(const LocalizedPoly& B) {
    std::vector<PartInit> out;
    refine(B, B.origin, out, 0);
    return out;
}

}  // namespace desing
