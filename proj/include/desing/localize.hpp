#ifndef DESING_LOCALIZE_HPP
#define DESING_LOCALIZE_HPP

#include <vector>

#include "desing/constraints.hpp"

namespace desing {

// b rewritten at the generic point of its part: B(a, y) = b(a + y), kept in
// the node ring with main slot j standing for y_j = x_j - a_j.
struct LocalizedPoly {
    Polynomial B;
    ConstraintSet origin;                     // part constraints with b(a) adjoined
    std::vector<std::size_t> coord_of_main;   // a-slot backing each main slot
};

LocalizedPoly translate(const Polynomial& b, const ConstraintSet& part,
                        const std::vector<std::size_t>& coord_of_main);

// One refined part of the partition together with its constant data.
struct PartInit {
    ConstraintSet part;
    std::vector<Exp> init;     // divisibility-minimal present monomials
    std::vector<Exp> present;  // all support monomials with nonvanishing coefficient
};

// Support monomials with coefficient nonzero at the generic point of `part`.
std::vector<Exp> present_support(const LocalizedPoly& B, const ConstraintSet& part);

// The divisibility-minimal elements among the present support. Errors when
// every coefficient vanishes on the part.
std::vector<Exp> initial_monomials(const LocalizedPoly& B, const ConstraintSet& part);

// Refine the part by case-splitting on coefficients of candidate minimal
// monomials until every part has a constant initial-monomial set. Parts come
// out pairwise disjoint and cover the input part; vanishing side first.
std::vector<PartInit> partition_by_init(const LocalizedPoly& B);

}  // namespace desing

#endif
