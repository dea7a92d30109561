#ifndef DESING_MAPS_HPP
#define DESING_MAPS_HPP

#include <string>
#include <vector>

#include "desing/polynomial.hpp"

namespace desing {

// A birational change-of-variables pair between two domains.
//
// Forward:  phi(x_i) = c_i + prod_j y_j^{E[i][j]}   with c_i a generic-
// coordinate polynomial (usually a single coordinate or zero) living in the
// target ring.
// Backward: psi(y_j) = prod_i (x_i - c_i)^{F[j][i]} as a formal rational
// monomial in the translated source variables.
//
// E placed row-wise in fwd_monomial (full target exponent vectors), F in
// back (target main x source main). E*F = I is the round-trip identity.
struct ArcMap {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial> fwd_translation;  // size = source mains, coord-only polys in target ring
    std::vector<Exp> fwd_monomial;            // size = source mains, exponents over the target ring
    std::vector<std::vector<long>> back;      // size = target mains x source mains
    std::string kind;                         // chart | weight | reduction | resolved-rewrite

    // Exact image of a source polynomial (Laurent allowed).
    Polynomial apply_forward(const Polynomial& f) const;

    // E*F = I and F*E = I over the main slots.
    bool roundtrip_identity() const;

    std::string phi_str(std::size_t source_main) const;
    std::string psi_str(std::size_t target_main) const;
};

}  // namespace desing

#endif
