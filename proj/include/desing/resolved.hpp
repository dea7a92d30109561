#ifndef DESING_RESOLVED_HPP
#define DESING_RESOLVED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "desing/constraints.hpp"

namespace desing {

// b = f0 + x0*f1 + xd*D*sum_j x0^j g_j with f0, f1 free of the unit and
// distinguished variables, f1 a unit at the part, and the reassembly exact.
struct ResolvedDecomposition {
    std::size_t unit_var = 0;  // main index of x0
    std::size_t dist_var = 0;  // main index of xd
    Polynomial b;
    Polynomial f0, f1, D;
    std::vector<Polynomial> g;  // g_j for j = 0..m
};

// Check one role assignment; part decides the unit conditions. coord_of_main
// links main slots to their generic coordinates.
std::optional<ResolvedDecomposition> check_resolved_roles(const Polynomial& b, const ConstraintSet& part,
                                                          const std::vector<std::size_t>& coord_of_main,
                                                          std::size_t unit_var, std::size_t dist_var);

// Try (unit, dist) role pairs in variable-index order; first hit wins.
std::optional<ResolvedDecomposition> is_strongly_resolved(const Polynomial& b, const ConstraintSet& part,
                                                          const std::vector<std::size_t>& coord_of_main);

// Truncated formal series of the dependent unit: the unique s with
// b(s, x_1..x_d) = 0 modulo total degree > N; nonzero constant term.
struct TruncatedSeries {
    RingPtr ring;
    std::size_t unit_var = 0;
    long order = 0;
    std::map<Exp, Scalar> coeffs;  // exponents over the ring, unit slot zero

    std::string str() const;
};

TruncatedSeries unit_series(const ResolvedDecomposition& dec, long order);

// The change of variables of the unit-certification rewrite, with its
// linearity check. phi(x0) = (-f0 + xd*D*u0)/f1, psi(u0) = (f0 + x0*f1)/(xd*D).
struct ResolvedRewrite {
    std::string phi_unit;
    std::string psi_u0;
};

ResolvedRewrite resolved_rewrite(const ResolvedDecomposition& dec);

}  // namespace desing

#endif
