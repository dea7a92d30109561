#ifndef DESING_REDUCE_HPP
#define DESING_REDUCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "desing/weights.hpp"

namespace desing {

// One global-parameter reduction step. `reduced` is the zero polynomial
// when the step solves the relation away entirely (a linear solve).
struct Reduction {
    std::string kind;  // linear-solve | weighted-homogeneous | power-pattern | divisor-pattern
    std::string description;
    Polynomial source;
    Polynomial reduced;
    std::vector<std::string> global_params;
};

// Theorem-1 shape: some variable occurs only to the first power, so it is a
// name for a quotient of the remaining variables. Variables are tried in
// index order; the first hit is returned.
std::optional<Reduction> detect_linear_variable(const Polynomial& b);

// A nonzero, non-negative primitive integer vector w with <w, alpha>
// constant over the support, or nullopt when the kernel misses the
// non-negative orthant.
std::optional<WeightVec> weighted_homogeneous_weights(const Polynomial& b);

// The unimodular change of variables induced by w; the distinguished
// variable becomes a global parameter and the cofactor omits it.
Reduction apply_weight_reduction(const Polynomial& b, const WeightVec& w);

// Theorem-2 shape: substituting v -> v * g for each listed variable makes
// g^m divide the image; the reduction divides it out. Nullopt when no
// positive power divides.
std::optional<Reduction> detect_divisor_pattern(const Polynomial& b, const std::vector<std::size_t>& vars,
                                                const Polynomial& g);

// Theorem-4 shape: b = f1^k - v*g*f2^k. Automatic detection handles
// k = characteristic with the f-parts found by p-th roots; otherwise f1, f2
// must be supplied.
std::optional<Reduction> detect_power_pattern(const Polynomial& b, std::size_t v, unsigned long k,
                                              const Polynomial& g,
                                              const std::optional<Polynomial>& f1_hint = std::nullopt,
                                              const std::optional<Polynomial>& f2_hint = std::nullopt);

// Repeatedly apply linear-solve, weighted-homogeneous and p-th-power
// rewrites, in that order, until none fires. Step cap 32.
std::pair<Polynomial, std::vector<Reduction>> reduction_pass(const Polynomial& b);

}  // namespace desing

#endif
