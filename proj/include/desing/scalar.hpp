#ifndef DESING_SCALAR_HPP
#define DESING_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace desing {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// resource caps (enumeration bounds, refinement depth); the tree driver
// converts these into flagged nodes rather than failing the whole build
struct limit_error : error {
    using error::error;
};

// Coefficient domain: Q (characteristic 0) or F_p (p prime).
struct FieldSpec {
    unsigned long characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(unsigned long p);

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(unsigned long n);

// An exact field element: a reduced rational in characteristic 0,
// a canonical residue in [0, p) in characteristic p.
class Scalar {
  public:
    Scalar() = default;
    Scalar(const FieldSpec& field, long value);
    Scalar(const FieldSpec& field, const mpz_class& value);
    Scalar(const FieldSpec& field, const mpq_class& value);

    static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
    static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

    const FieldSpec& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(unsigned long k) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // canonical order, for map keys

    // "3", "-5/2"; residues print as plain integers.
    std::string str() const;

    const mpq_class& rational() const { return value_; }

  private:
    void canonicalize();
    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class value_ = 0;  // in F_p the denominator is 1 and 0 <= num < p
};

}  // namespace desing

#endif
