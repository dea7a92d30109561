#ifndef DESING_GROEBNER_HPP
#define DESING_GROEBNER_HPP

#include <vector>

#include "desing/polynomial.hpp"

namespace desing {

// Graded-lexicographic machinery for ideals of generic-coordinate
// polynomials (main slots of all inputs must be zero).

bool grlex_less(const Exp& a, const Exp& b);

// Leading (term, coefficient) under grlex; the polynomial must be nonzero.
std::pair<Exp, Scalar> leading_term(const Polynomial& p);

Polynomial make_monic(const Polynomial& p);

// Full reduction of f modulo the list of divisors (every term reduced).
Polynomial reduce_mod(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced Groebner basis (monic, autoreduced, sorted) of the given
// generators; Buchberger with the coprime-lead criterion, S-pairs in
// degree order.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens);

}  // namespace desing

#endif
