#include "desing/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace desing {

long total_degree(const Exp& e) {
    long d = 0;
    for (long v : e) d += v;
    return d;
}

bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Exp exp_min(const Exp& a, const Exp& b) {
    Exp r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], b[i]);
    return r;
}

bool series_less(const Exp& a, const Exp& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

long Ring::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<long>(i);
    return -1;
}

RingPtr make_ring(const FieldSpec& field, std::vector<std::string> coord_vars,
                  std::vector<std::string> main_vars) {
    auto r = std::make_shared<Ring>();
    r->field = field;
    r->n_coords = coord_vars.size();
    r->vars = std::move(coord_vars);
    r->vars.insert(r->vars.end(), main_vars.begin(), main_vars.end());
    for (std::size_t i = 0; i < r->vars.size(); ++i)
        for (std::size_t j = i + 1; j < r->vars.size(); ++j)
            if (r->vars[i] == r->vars[j]) throw error("duplicate variable name: " + r->vars[i]);
    return r;
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    Polynomial p(std::move(ring));
    p.add_term(Exp(p.ring_->size(), 0), c);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
    const FieldSpec f = ring->field;
    return constant(std::move(ring), Scalar(f, c));
}

Polynomial Polynomial::monomial(RingPtr ring, const Exp& e, const Scalar& c) {
    Polynomial p(std::move(ring));
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, long exponent) {
    if (index >= ring->size()) throw error("variable index out of range");
    Exp e(ring->size(), 0);
    e[index] = exponent;
    const FieldSpec f = ring->field;
    return monomial(std::move(ring), e, Scalar::one(f));
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (long v : terms_.begin()->first)
        if (v != 0) return false;
    return true;
}

Scalar Polynomial::constant_value() const {
    Exp zero(ring_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Scalar::zero(ring_->field) : it->second;
}

bool Polynomial::is_laurent() const {
    for (const auto& [e, c] : terms_)
        for (long v : e)
            if (v < 0) return true;
    return false;
}

void Polynomial::add_term(const Exp& e, const Scalar& c) {
    if (e.size() != ring_->size()) throw error("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_)) throw error("polynomial arithmetic across different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned long k) const {
    Polynomial r = constant(ring_, 1);
    Polynomial base(*this);
    while (k) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    require_same_ring(o);
    return terms_ == o.terms_;
}

bool Polynomial::operator<(const Polynomial& o) const { return terms_ < o.terms_; }

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, RingPtr target) const {
    if (images.size() != ring_->size()) throw error("substitution must cover every variable");
    std::vector<std::map<long, Polynomial>> cache(images.size());
    auto power_of = [&](std::size_t i, long a) -> const Polynomial& {
        auto it = cache[i].find(a);
        if (it != cache[i].end()) return it->second;
        Polynomial p(target);
        if (a >= 0) {
            p = images[i].pow(static_cast<unsigned long>(a));
        } else {
            if (!images[i].single_term())
                throw error("negative exponent of a non-monomial image in substitution");
            const auto& [e, c] = *images[i].terms().begin();
            Exp inv(e);
            for (long& v : inv) v = -v;
            p = Polynomial::monomial(target, inv, c.inverse()).pow(static_cast<unsigned long>(-a));
        }
        return cache[i].emplace(a, std::move(p)).first->second;
    };
    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term = term * power_of(i, e[i]);
        result = result + term;
    }
    return result;
}

Polynomial Polynomial::embed(RingPtr target) const {
    if (ring_ == target || (ring_ && target && *ring_ == *target)) return *this;
    std::vector<long> where(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) where[i] = target->index_of(ring_->vars[i]);
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exp ne(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (where[i] < 0)
                throw error("embedding: variable " + ring_->vars[i] + " absent from target ring");
            ne[static_cast<std::size_t>(where[i])] = e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

Polynomial Polynomial::eval_at_coords(const std::vector<std::size_t>& coord_of_main, RingPtr target) const {
    if (!target) target = ring_;
    if (coord_of_main.size() != ring_->n_mains()) throw error("eval_at_coords: map must cover all main variables");
    // coordinate slots carry over by name
    std::vector<long> where(ring_->n_coords);
    for (std::size_t i = 0; i < ring_->n_coords; ++i) {
        where[i] = target->index_of(ring_->vars[i]);
        if (where[i] < 0) throw error("eval_at_coords: coordinate " + ring_->vars[i] + " absent from target");
    }
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Exp ne(target->size(), 0);
        for (std::size_t i = 0; i < ring_->n_coords; ++i) ne[static_cast<std::size_t>(where[i])] += e[i];
        for (std::size_t i = 0; i < ring_->n_mains(); ++i) {
            long a = e[ring_->n_coords + i];
            if (a < 0) throw error("eval_at_coords: negative exponent");
            ne[coord_of_main[i]] += a;
        }
        r.add_term(ne, c);
    }
    return r;
}

std::pair<Exp, Polynomial> Polynomial::monomial_content() const {
    if (terms_.empty()) throw error("monomial content of the zero polynomial");
    Exp m(ring_->size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = ring_->n_coords; i < ring_->size(); ++i)
            m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    Polynomial g(ring_);
    for (const auto& [e, c] : terms_) g.terms_.emplace(exp_sub(e, m), c);
    return {m, g};
}

std::vector<Polynomial> Polynomial::coefficients_wrt(std::size_t var_index) const {
    long deg = degree_in(var_index);
    if (deg < 0) deg = 0;
    std::vector<Polynomial> out(static_cast<std::size_t>(deg) + 1, Polynomial(ring_));
    for (const auto& [e, c] : terms_) {
        if (e[var_index] < 0) throw error("coefficients_wrt on a Laurent polynomial");
        Exp ne(e);
        ne[var_index] = 0;
        out[static_cast<std::size_t>(e[var_index])].add_term(ne, c);
    }
    return out;
}

long Polynomial::degree_in(std::size_t var_index) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

long Polynomial::min_exponent_in(std::size_t var_index) const {
    bool first = true;
    long d = 0;
    for (const auto& [e, c] : terms_) {
        d = first ? e[var_index] : std::min(d, e[var_index]);
        first = false;
    }
    return d;
}

bool Polynomial::mentions(std::size_t var_index) const {
    for (const auto& [e, c] : terms_)
        if (e[var_index] != 0) return true;
    return false;
}

std::optional<Polynomial> Polynomial::pth_root(unsigned long p) const {
    if (ring_->field.characteristic != p) throw error("pth_root: ring characteristic differs from p");
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
        Exp ne(e);
        for (long& v : ne) {
            if (v % static_cast<long>(p) != 0) return std::nullopt;
            v /= static_cast<long>(p);
        }
        r.terms_.emplace(ne, c);  // Frobenius fixes F_p
    }
    return r;
}

namespace {
// Degree-descending lexicographic order used for division.
bool div_order_less(const Exp& a, const Exp& b) { return series_less(a, b); }
}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    require_same_ring(d);
    if (d.is_zero()) throw error("division by the zero polynomial");
    if (is_laurent() || d.is_laurent()) throw error("exact division requires honest polynomials");
    Polynomial r(*this);
    Polynomial q(ring_);
    auto lead = [](const Polynomial& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (div_order_less(best->first, it->first)) best = it;
        return best;
    };
    auto dl = lead(d);
    while (!r.is_zero()) {
        auto rl = lead(r);
        if (!divides(dl->first, rl->first)) return std::nullopt;
        Polynomial t = Polynomial::monomial(ring_, exp_sub(rl->first, dl->first), rl->second / dl->second);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

std::map<Exp, Polynomial> Polynomial::collect_by_main() const {
    std::map<Exp, Polynomial> groups;
    for (const auto& [e, c] : terms_) {
        Exp main(e);
        Exp coord(e);
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (ring_->is_coord(i))
                main[i] = 0;
            else
                coord[i] = 0;
        }
        auto it = groups.find(main);
        if (it == groups.end()) it = groups.emplace(main, Polynomial(ring_)).first;
        it->second.add_term(coord, c);
    }
    return groups;
}

Polynomial Polynomial::truncate_main_degree(long n) const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (std::size_t i = ring_->n_coords; i < ring_->size(); ++i) d += e[i];
        if (d <= n) r.terms_.emplace(e, c);
    }
    return r;
}

std::string monomial_str(const Ring& ring, const Exp& e) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << ring.vars[i];
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : std::string();
}

namespace {

struct PrintTerm {
    Exp main;
    Exp coord;
    Scalar coeff;
};

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<PrintTerm> parts;
    for (const auto& [e, c] : terms_) {
        PrintTerm t{e, e, c};
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (ring_->is_coord(i))
                t.main[i] = 0;
            else
                t.coord[i] = 0;
        }
        parts.push_back(std::move(t));
    }
    std::sort(parts.begin(), parts.end(), [](const PrintTerm& a, const PrintTerm& b) {
        if (a.main != b.main) return series_less(a.main, b.main);
        return series_less(a.coord, b.coord);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : parts) {
        std::string mono;
        {
            Exp full = exp_add(t.main, t.coord);
            mono = monomial_str(*ring_, full);
        }
        Scalar c = t.coeff;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << "*" << mono;
    }
    return os.str();
}

}  // namespace desing
