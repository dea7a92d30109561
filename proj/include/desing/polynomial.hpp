#ifndef DESING_POLYNOMIAL_HPP
#define DESING_POLYNOMIAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "desing/scalar.hpp"

namespace desing {

// Exponent vector over the full variable list of a ring. Entries may be
// negative in Laurent contexts (outputs of substitution, chart inversions).
using Exp = std::vector<long>;

long total_degree(const Exp& e);
bool divides(const Exp& a, const Exp& b);  // componentwise <=, both non-negative
Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);
Exp exp_min(const Exp& a, const Exp& b);

// Ascending series order: total degree first, then lexicographic.
bool series_less(const Exp& a, const Exp& b);

// A polynomial ring over Q or F_p. The variable list is split in two
// classes: generic coordinates (the a-symbols constrained by EQ/INEQ sets)
// come first, then the main variables of the current domain.
struct Ring {
    FieldSpec field;
    std::vector<std::string> vars;
    std::size_t n_coords = 0;

    std::size_t size() const { return vars.size(); }
    std::size_t n_mains() const { return vars.size() - n_coords; }
    bool is_coord(std::size_t i) const { return i < n_coords; }
    long index_of(const std::string& name) const;  // -1 if absent

    bool operator==(const Ring& o) const {
        return field == o.field && vars == o.vars && n_coords == o.n_coords;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(const FieldSpec& field, std::vector<std::string> coord_vars,
                  std::vector<std::string> main_vars);

// Sparse multivariate polynomial with exact coefficients, canonical by
// construction: no zero terms are ever stored.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, long c);
    static Polynomial monomial(RingPtr ring, const Exp& e, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::size_t index, long exponent = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Exp, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;            // zero or a single all-zero-exponent term
    Scalar constant_value() const;       // the coefficient of the zero exponent
    bool is_laurent() const;             // some exponent negative
    bool single_term() const { return terms_.size() == 1; }

    void add_term(const Exp& e, const Scalar& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial pow(unsigned long k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const;  // deterministic order for sets

    // Substitute every variable by its image (indexed like ring vars); images
    // live in a common target ring. A negative exponent requires the image to
    // be a single invertible term.
    Polynomial substitute(const std::vector<Polynomial>& images, RingPtr target) const;

    // Image of this polynomial inside a larger ring; every variable of the
    // source must be present (matched by name) in the target.
    Polynomial embed(RingPtr target) const;

    // Replace main variable slots by the given coordinate slots, e.g. to form
    // b(a) from b(x). The map assigns a target coordinate index to every main
    // variable index of this ring; target defaults to this ring.
    Polynomial eval_at_coords(const std::vector<std::size_t>& coord_of_main,
                              RingPtr target = nullptr) const;

    // f = x^m * g with g exponent-minimal over the MAIN slots only (the
    // coordinate slots of m stay zero). Error on the zero polynomial.
    std::pair<Exp, Polynomial> monomial_content() const;

    // Coefficients of v^0, v^1, ..., v^deg; each with v-exponent 0.
    std::vector<Polynomial> coefficients_wrt(std::size_t var_index) const;

    long degree_in(std::size_t var_index) const;   // -1 for the zero polynomial
    long min_exponent_in(std::size_t var_index) const;
    bool mentions(std::size_t var_index) const;

    // g with g^p = f, when all exponents are divisible by p (coefficients in
    // F_p are Frobenius-fixed). std::nullopt otherwise.
    std::optional<Polynomial> pth_root(unsigned long p) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    // The nested view of a mixed polynomial: main-monomial -> coordinate-only
    // coefficient polynomial. Keys have zero coordinate slots.
    std::map<Exp, Polynomial> collect_by_main() const;

    // Sum of terms of total degree <= n over the main slots.
    Polynomial truncate_main_degree(long n) const;

    // Canonical text form, ascending series order.
    std::string str() const;

  private:
    void require_same_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::map<Exp, Scalar> terms_;
};

std::string monomial_str(const Ring& ring, const Exp& e);

}  // namespace desing

#endif
