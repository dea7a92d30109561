#include "desing/scalar.hpp"

namespace desing {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin, valid for all 64-bit inputs
    auto mulmod = [](unsigned long a, unsigned long b, unsigned long m) -> unsigned long {
        return static_cast<unsigned long>((__uint128_t)a * b % m);
    };
    auto powmod = [&](unsigned long a, unsigned long e, unsigned long m) {
        unsigned long r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    unsigned long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        unsigned long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec::FieldSpec(unsigned long p) : characteristic(p) {
    if (p != 0 && !is_prime(p)) throw error("characteristic must be 0 or a prime, got " + std::to_string(p));
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field), value_(value) { canonicalize(); }
Scalar::Scalar(const FieldSpec& field, const mpz_class& value) : field_(field), value_(value) { canonicalize(); }

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) : field_(field), value_(value) {
    if (field_.characteristic != 0 && value_.get_den() != 1) {
        // map a/b to a * b^{-1} mod p
        Scalar num(field_, value_.get_num());
        Scalar den(field_, value_.get_den());
        value_ = (num / den).value_;
    }
    canonicalize();
}

void Scalar::canonicalize() {
    value_.canonicalize();
    if (field_.characteristic != 0) {
        mpz_class r = value_.get_num() % mpz_class(field_.characteristic);
        if (r < 0) r += field_.characteristic;
        value_ = mpq_class(r);
    }
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw error("scalar arithmetic across different coefficient fields");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.value_ = -r.value_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    Scalar r(*this);
    r.value_ += o.value_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    Scalar r(*this);
    r.value_ -= o.value_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    Scalar r(*this);
    r.value_ *= o.value_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    if (field_.characteristic == 0) {
        Scalar r(*this);
        r.value_ = 1 / r.value_;
        return r;
    }
    mpz_class inv, p(field_.characteristic);
    if (mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw error("non-invertible residue");
    return Scalar(field_, inv);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(unsigned long k) const {
    Scalar r = one(field_);
    Scalar base(*this);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

bool Scalar::operator<(const Scalar& o) const { return cmp(value_, o.value_) < 0; }

std::string Scalar::str() const { return value_.get_str(); }

}  // namespace desing
