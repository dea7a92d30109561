#include "desing/constraints.hpp"

#include <algorithm>

namespace desing {

ConstraintSet::ConstraintSet(RingPtr ring, std::vector<Polynomial> eq_gens, std::vector<Polynomial> ineq_gens)
    : ring_(std::move(ring)) {
    finalize(std::move(eq_gens), std::move(ineq_gens));
}

void ConstraintSet::finalize(std::vector<Polynomial> eq_gens, std::vector<Polynomial> ineq_gens) {
    for (auto& g : eq_gens) g = g.embed(ring_);
    eq_ = groebner_basis(eq_gens);
    if (eq_.size() == 1 && eq_[0].is_constant()) {
        empty_ = true;
        empty_reason_ = "1 lies in the equality ideal";
        eq_ = {Polynomial::constant(ring_, 1)};
        return;
    }
    std::vector<Polynomial> nfs;
    for (auto& g : ineq_gens) {
        Polynomial nf = normal_form(g.embed(ring_));
        if (nf.is_zero()) {
            empty_ = true;
            empty_reason_ = "inequality member " + g.str() + " reduces to 0";
            return;
        }
        nfs.push_back(make_monic(nf));
    }
    std::sort(nfs.begin(), nfs.end());
    nfs.erase(std::unique(nfs.begin(), nfs.end(), [](const Polynomial& a, const Polynomial& b) { return a == b; }),
              nfs.end());
    ineq_ = std::move(nfs);
}

bool ConstraintSet::is_consistent_exact() const {
    if (empty_) return false;
    // does some INEQ member vanish identically on V(eq)?
    for (const auto& g : ineq_)
        if (radical_membership(g)) return false;
    return true;
}

Polynomial ConstraintSet::normal_form(const Polynomial& f) const {
    return reduce_mod(f.embed(ring_), eq_);
}

bool ConstraintSet::decided_nonzero(const Polynomial& f) const {
    Polynomial nf = normal_form(f);
    if (nf.is_zero()) return false;
    if (nf.is_constant()) return true;
    Polynomial m = make_monic(nf);
    return std::find(ineq_.begin(), ineq_.end(), m) != ineq_.end();
}

bool ConstraintSet::radical_membership(const Polynomial& f) const {
    Polynomial nf = normal_form(f);
    if (nf.is_zero()) return true;
    if (nf.is_constant()) return false;
    // Rabinowitsch: f vanishes on V(eq) iff 1 in <eq, z*f - 1>.
    std::vector<std::string> coords(ring_->vars.begin(), ring_->vars.begin() + ring_->n_coords);
    coords.push_back("@z");
    std::vector<std::string> mains(ring_->vars.begin() + ring_->n_coords, ring_->vars.end());
    RingPtr ext = make_ring(ring_->field, coords, mains);
    std::vector<Polynomial> gens;
    for (const auto& g : eq_) gens.push_back(g.embed(ext));
    Polynomial z = Polynomial::variable(ext, static_cast<std::size_t>(ext->index_of("@z")));
    gens.push_back(z * nf.embed(ext) - Polynomial::constant(ext, 1));
    auto gb = groebner_basis(gens);
    return gb.size() == 1 && gb[0].is_constant();
}

bool ConstraintSet::vanishes_on_part(const Polynomial& f) const { return radical_membership(f); }

std::pair<std::optional<ConstraintSet>, std::optional<ConstraintSet>> ConstraintSet::split(
    const Polynomial& f) const {
    Polynomial nf = normal_form(f);
    if (nf.is_zero()) return {*this, std::nullopt};
    if (nf.is_constant()) return {std::nullopt, *this};
    std::optional<ConstraintSet> zero_side;
    std::optional<ConstraintSet> nonzero_side;
    {
        // the exact test kills phantom parts cut out by non-radical ideals
        ConstraintSet c = with_eq(f);
        if (!c.is_empty() && c.is_consistent_exact()) zero_side = std::move(c);
    }
    {
        if (radical_membership(f)) {
            // f vanishes everywhere on the part: the nonzero side is empty
        } else {
            ConstraintSet c = with_ineq(f);
            if (!c.is_empty()) nonzero_side = std::move(c);
        }
    }
    return {std::move(zero_side), std::move(nonzero_side)};
}

ConstraintSet ConstraintSet::with_eq(const Polynomial& f) const {
    std::vector<Polynomial> gens = eq_;
    gens.push_back(f.embed(ring_));
    return ConstraintSet(ring_, std::move(gens), ineq_);
}

ConstraintSet ConstraintSet::with_ineq(const Polynomial& f) const {
    std::vector<Polynomial> in = ineq_;
    in.push_back(f.embed(ring_));
    return ConstraintSet(ring_, eq_, std::move(in));
}

ConstraintSet ConstraintSet::embed(RingPtr target) const {
    std::vector<Polynomial> eqs, ins;
    for (const auto& g : eq_) eqs.push_back(g.embed(target));
    for (const auto& g : ineq_) ins.push_back(g.embed(target));
    return ConstraintSet(std::move(target), std::move(eqs), std::move(ins));
}

}  // namespace desing
