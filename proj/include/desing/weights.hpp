#ifndef DESING_WEIGHTS_HPP
#define DESING_WEIGHTS_HPP

#include <string>
#include <vector>

#include "desing/constraints.hpp"
#include "desing/maps.hpp"

namespace desing {

using WeightVec = std::vector<long>;

// Weighted value <w, alpha> minimum over the support, with the set of
// attaining rows. Rows are exponent vectors over the active variables.
struct TieData {
    long min_value = 0;
    std::vector<std::size_t> tie;  // indices into the support
};

TieData weight_tie(const WeightVec& w, const std::vector<WeightVec>& support);

// w (non-negative, nonzero) is a weight sequence for the support: at least
// two distinct monomials attain the minimum weighted value.
bool is_weight_sequence(const WeightVec& w, const std::vector<WeightVec>& support);

// All primitive strictly positive weight sequences with entries <= bound,
// by exhaustive search.
std::vector<WeightVec> bounded_weight_search(const std::vector<WeightVec>& support, long bound);

// Exact route for two active variables: normals of tied support pairs.
std::vector<WeightVec> two_var_weight_sequences(const std::vector<WeightVec>& support);

// Valid weight sequences; |support| >= 2 required. Uses the exact
// two-variable route when applicable, the bounded search otherwise
// (effective bound = max(bound, 2 * largest exponent)).
std::vector<WeightVec> valid_weight_sequences(const std::vector<WeightVec>& support, long bound = 16);

// Keep only sequences that are not the sum of two weight sequences for the
// same support: no decomposition w = w1 + w2 with w1, w2 nonzero
// non-negative tie-min vectors sharing a tied pair, and none with both
// summands strictly positive weight sequences.
std::vector<WeightVec> minimal_weight_sequences(const std::vector<WeightVec>& cands,
                                                const std::vector<WeightVec>& support);

// Unimodular integer matrix with the distinguished (last) column w/gcd(w),
// built by extended-Euclidean row reduction; the unit columns are sorted
// lexicographically. M_inv is the exact integer inverse.
struct UnimodularMap {
    std::vector<std::vector<long>> M;
    std::vector<std::vector<long>> M_inv;
};

UnimodularMap unimodular_extend(const WeightVec& w);

// The arc map of a (part, weight sequence) branch: translation by the
// part's generic coordinates followed by the unimodular substitution on the
// active variables; inactive variables pass through to fresh names.
struct ArcBuild {
    ArcMap map;
    RingPtr child_ring;
    std::vector<std::size_t> child_coord_of_main;
    std::size_t dist_var = 0;  // child main index of the distinguished variable
};

ArcBuild build_arc_map(const ConstraintSet& part, const RingPtr& node_ring,
                       const std::vector<std::size_t>& coord_of_main,
                       const std::vector<std::size_t>& active, const WeightVec& w,
                       const std::vector<std::string>& child_vars,
                       const std::vector<std::string>& child_coords);

// phi(b_k) with coefficients normalized modulo the part, factored as
// monomial * cofactor; the child constraint set extends the part by the
// vanishing of the distinguished coordinate and the cofactor relation.
struct ArcApplication {
    Exp factor;        // over the child ring
    Polynomial child;  // cofactor b_l, coefficients in normal form
    ConstraintSet child_part;
};

ArcApplication apply_arc(const Polynomial& b, const ArcBuild& arc, const ConstraintSet& part);

}  // namespace desing

#endif
