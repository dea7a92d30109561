#ifndef DESING_CHARTS_HPP
#define DESING_CHARTS_HPP

#include <optional>

#include "desing/constraints.hpp"
#include "desing/maps.hpp"

namespace desing {

// b in x_0..x_d  ->  b* in g_0,h_0,...,g_d,h_d: substitute x_i = g_i/h_i and
// clear each denominator by h_i^{deg_{x_i} b}. The result is multi-
// homogeneous in every (g_i, h_i) pair and carries no monomial content.
Polynomial multi_homogenize(const Polynomial& b);

struct ChartResult {
    unsigned K = 0;
    RingPtr ring;             // coords a_{K,0..d}, mains x_{K,0..d}
    Polynomial b_K;           // monomial content removed
    ConstraintSet part;       // eq = {a_j : K_j = 1} + {b_K(a)}, ineq empty
    ArcMap map;               // x_j -> x_{K,j}^{(-1)^{K_j}}
    bool empty = false;
    std::optional<Polynomial> witness;  // the forced nonzero constant, when empty
};

// Affine chart K of the multi-homogeneous problem; 0 <= K < 2^{d+1}.
// Variable and coordinate names for the chart domain are supplied by the
// caller (the tree assigns node-numbered names).
ChartResult chart(const Polynomial& b, unsigned K, const std::vector<std::string>& chart_vars,
                  const std::vector<std::string>& chart_coords);

}  // namespace desing

#endif
