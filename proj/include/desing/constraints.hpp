#ifndef DESING_CONSTRAINTS_HPP
#define DESING_CONSTRAINTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/groebner.hpp"
#include "desing/polynomial.hpp"

namespace desing {

// The (EQ, INEQ) label of a part: polynomials in the generic coordinates
// that vanish at the generic point, and polynomials required nonzero there.
// The Groebner basis of EQ is computed eagerly; reads are pure.
class ConstraintSet {
  public:
    ConstraintSet() = default;
    ConstraintSet(RingPtr ring, std::vector<Polynomial> eq_gens, std::vector<Polynomial> ineq_gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& eq() const { return eq_; }      // reduced GB
    const std::vector<Polynomial>& ineq() const { return ineq_; }  // monic NFs, deduped

    bool is_empty() const { return empty_; }
    const std::string& empty_reason() const { return empty_reason_; }

    // No INEQ member vanishes identically on V(eq); uses the exact
    // Nullstellensatz membership test, so it sees through non-radical
    // equality ideals. Not run at construction (it costs a basis each).
    bool is_consistent_exact() const;

    // Canonical representative of f modulo <eq>; zero iff f lies in the ideal.
    Polynomial normal_form(const Polynomial& f) const;

    // Nonzero at the generic point of the part (ideal-membership reading).
    bool nonzero_at_generic_point(const Polynomial& f) const { return !normal_form(f).is_zero(); }

    // Definitely nonzero on the whole part: a nonzero constant mod eq, or
    // a recorded INEQ member (compared by monic normal form).
    bool decided_nonzero(const Polynomial& f) const;

    // Vanishes on every point of the part: f in the radical of <eq>,
    // decided exactly by the auxiliary-variable membership test.
    bool vanishes_on_part(const Polynomial& f) const;

    // Case split on f = 0 versus f != 0. Either side may be empty
    // (std::nullopt) when inconsistent with the part.
    std::pair<std::optional<ConstraintSet>, std::optional<ConstraintSet>> split(const Polynomial& f) const;

    ConstraintSet with_eq(const Polynomial& f) const;    // append one equality
    ConstraintSet with_ineq(const Polynomial& f) const;  // append one nonvanishing witness

    // The same constraints inside a larger ring (matched by variable name).
    ConstraintSet embed(RingPtr target) const;

  private:
    void finalize(std::vector<Polynomial> eq_gens, std::vector<Polynomial> ineq_gens);
    bool radical_membership(const Polynomial& f) const;  // f in rad(<eq>)?

    RingPtr ring_;
    std::vector<Polynomial> eq_;
    std::vector<Polynomial> ineq_;
    bool empty_ = false;
    std::string empty_reason_;
};

}  // namespace desing

#endif
