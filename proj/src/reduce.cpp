#include "desing/reduce.hpp"

#include "desing/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace desing {

namespace {

std::vector<std::size_t> occurring_mains(const Polynomial& b) {
    const RingPtr& r = b.ring();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < r->n_mains(); ++i)
        if (b.mentions(r->n_coords + i)) out.push_back(i);
    return out;
}

std::string var_name(const RingPtr& r, std::size_t main_index) { return r->vars[r->n_coords + main_index]; }

}  // namespace

std::optional<Reduction> detect_linear_variable(const Polynomial& b) {
    const RingPtr& r = b.ring();
    for (std::size_t i = 0; i < r->n_mains(); ++i) {
        std::size_t slot = r->n_coords + i;
        if (b.degree_in(slot) != 1) continue;
        auto cs = b.coefficients_wrt(slot);
        Polynomial f1 = cs[0];
        Polynomial f2 = -cs[1];
        if (f2.is_zero()) continue;
        if (!(cs[0] + Polynomial::variable(r, slot) * cs[1] == b)) throw error("linear decomposition failed");
        if (r->field.characteristic == 0) {
            auto [le, lc] = leading_term(f2);
            if (lc < Scalar::zero(r->field)) {
                f1 = -f1;
                f2 = -f2;
            }
        }
        Reduction red;
        red.kind = "linear-solve";
        red.source = b;
        red.reduced = Polynomial::zero(r);
        red.description = var_name(r, i) + " = (" + f1.str() + ") / (" + f2.str() + ")";
        for (std::size_t j = 0; j < r->n_mains(); ++j)
            if (j != i) red.global_params.push_back(var_name(r, j));
        return red;
    }
    return std::nullopt;
}

namespace {

// integer kernel basis of the (rows x cols) rational matrix
std::vector<std::vector<mpq_class>> kernel_basis(std::vector<std::vector<mpq_class>> a, std::size_t cols) {
    std::size_t rows = a.size();
    std::vector<long> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        mpq_class inv = 1 / a[rank][c];
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[static_cast<std::size_t>(pivot_col[r])] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<WeightVec> integerize_nonneg(const std::vector<mpq_class>& v) {
    mpz_class lcm_den = 1;
    for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
    std::vector<mpz_class> w;
    for (const auto& q : v) w.push_back(q.get_num() * (lcm_den / q.get_den()));
    mpz_class g = 0;
    bool pos = false, neg = false;
    for (const auto& x : w) {
        g = gcd(g, x);
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (g == 0) return std::nullopt;
    if (pos && neg) return std::nullopt;
    WeightVec out;
    for (const auto& x : w) {
        mpz_class r = x / g;
        if (neg) r = -r;
        if (!r.fits_slong_p()) return std::nullopt;
        out.push_back(r.get_si());
    }
    return out;
}

}  // namespace

std::optional<WeightVec> weighted_homogeneous_weights(const Polynomial& b) {
    if (b.term_count() < 2) return std::nullopt;
    const RingPtr& r = b.ring();
    auto occ = occurring_mains(b);
    if (occ.empty()) return std::nullopt;
    std::vector<Exp> support;
    for (const auto& [e, c] : b.terms()) support.push_back(e);
    std::vector<std::vector<mpq_class>> diff;
    for (std::size_t s = 1; s < support.size(); ++s) {
        std::vector<mpq_class> row;
        for (std::size_t j : occ)
            row.push_back(support[s][r->n_coords + j] - support[0][r->n_coords + j]);
        diff.push_back(std::move(row));
    }
    auto basis = kernel_basis(std::move(diff), occ.size());
    std::optional<WeightVec> chosen;
    if (basis.empty()) return std::nullopt;
    if (basis.size() == 1) {
        chosen = integerize_nonneg(basis[0]);
    } else {
        // multi-dimensional kernel: deterministic small search for the
        // lexicographically-smallest non-negative primitive member
        std::vector<long> c(basis.size(), -8);
        std::optional<WeightVec> best;
        while (true) {
            std::vector<mpq_class> v(occ.size(), 0);
            for (std::size_t k = 0; k < basis.size(); ++k)
                for (std::size_t j = 0; j < occ.size(); ++j) v[j] += c[k] * basis[k][j];
            auto w = integerize_nonneg(v);
            if (w && (!best || *w < *best)) best = w;
            std::size_t k = 0;
            while (k < c.size() && c[k] == 8) c[k++] = -8;
            if (k == c.size()) break;
            ++c[k];
        }
        chosen = best;
    }
    if (!chosen) return std::nullopt;
    // spread over all main variables; non-occurring ones get weight 0
    WeightVec full(r->n_mains(), 0);
    for (std::size_t k = 0; k < occ.size(); ++k) full[occ[k]] = (*chosen)[k];
    // verify: constant weighted value over the support
    long value = 0;
    bool first = true;
    for (const auto& [e, cc] : b.terms()) {
        long v = 0;
        for (std::size_t j = 0; j < r->n_mains(); ++j) v += full[j] * e[r->n_coords + j];
        if (first) {
            value = v;
            first = false;
        } else if (v != value) {
            throw error("weighted homogeneity verification failed");
        }
    }
    bool nonzero = std::any_of(full.begin(), full.end(), [](long x) { return x != 0; });
    if (!nonzero) return std::nullopt;
    return full;
}

Reduction apply_weight_reduction(const Polynomial& b, const WeightVec& w) {
    const RingPtr& r = b.ring();
    if (w.size() != r->n_mains()) throw error("weight vector must cover all variables");
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0) active.push_back(i);
    if (active.size() < 1) throw error("weight vector has no positive entries");
    WeightVec wa;
    for (std::size_t i : active) wa.push_back(w[i]);
    UnimodularMap um = unimodular_extend(wa);
    std::size_t m = active.size();

    std::vector<std::string> mains;
    for (std::size_t c = 0; c < m; ++c) mains.push_back("z" + std::to_string(c));
    for (std::size_t i = 0; i < r->n_mains(); ++i)
        if (w[i] == 0) mains.push_back(var_name(r, i));
    std::vector<std::string> coords(r->vars.begin(), r->vars.begin() + r->n_coords);
    RingPtr target = make_ring(r->field, coords, mains);

    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->n_coords; ++i) images.push_back(Polynomial::variable(target, i));
    std::size_t passthrough = m;
    std::ostringstream desc;
    for (std::size_t i = 0; i < r->n_mains(); ++i) {
        Exp e(target->size(), 0);
        if (w[i] > 0) {
            std::size_t row = std::find(active.begin(), active.end(), i) - active.begin();
            for (std::size_t c = 0; c < m; ++c) e[target->n_coords + c] = um.M[row][c];
        } else {
            e[target->n_coords + passthrough++] = 1;
        }
        images.push_back(Polynomial::monomial(target, e, Scalar::one(target->field)));
        if (i) desc << ", ";
        desc << var_name(r, i) << " -> " << monomial_str(*target, e);
    }
    Polynomial image = b.substitute(images, target);
    auto [factor, cofactor] = image.monomial_content();

    std::string dist = "z" + std::to_string(m - 1);
    if (cofactor.mentions(static_cast<std::size_t>(target->index_of(dist))))
        throw error("weight reduction left the distinguished variable in the cofactor");

    Reduction red;
    red.kind = "weighted-homogeneous";
    red.source = b;
    red.reduced = cofactor;
    red.description = desc.str() + "; factor " + monomial_str(*target, factor);
    red.global_params = {dist};
    return red;
}

std::optional<Reduction> detect_divisor_pattern(const Polynomial& b, const std::vector<std::size_t>& vars,
                                                const Polynomial& g) {
    const RingPtr& r = b.ring();
    if (g.is_zero()) throw error("divisor pattern: g must be nonzero");
    for (std::size_t v : vars)
        if (g.mentions(r->n_coords + v)) throw error("divisor pattern: g must be free of the substituted variable");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->size(); ++i) images.push_back(Polynomial::variable(r, i));
    for (std::size_t v : vars) images[r->n_coords + v] = Polynomial::variable(r, r->n_coords + v) * g;
    Polynomial image = b.substitute(images, r);
    long k = 0;
    Polynomial reduced = image;
    while (true) {
        auto q = reduced.divide_exact(g);
        if (!q) break;
        reduced = *q;
        ++k;
    }
    if (k == 0) return std::nullopt;
    Reduction red;
    red.kind = "divisor-pattern";
    red.source = b;
    red.reduced = reduced;
    std::ostringstream desc;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) desc << ", ";
        desc << var_name(r, vars[i]) << " -> " << var_name(r, vars[i]) << "*(" << g.str() << ")";
    }
    desc << "; divided by (" << g.str() << ")^" << k;
    red.description = desc.str();
    return red;
}

std::optional<Reduction> detect_power_pattern(const Polynomial& b, std::size_t v, unsigned long k,
                                              const Polynomial& g, const std::optional<Polynomial>& f1_hint,
                                              const std::optional<Polynomial>& f2_hint) {
    const RingPtr& r = b.ring();
    unsigned long p = r->field.characteristic;
    if (k < 2) throw error("power pattern needs k >= 2");
    {
        unsigned long kk = k;
        if (p == 0) throw error("power pattern rewrite requires positive characteristic");
        while (kk % p == 0) kk /= p;
        if (kk != 1) throw error("power pattern rewrite requires k to be a power of the characteristic");
    }
    std::size_t slot = r->n_coords + v;
    if (g.mentions(slot)) throw error("power pattern: g must be free of the distinguished variable");

    Polynomial f1(r), f2(r);
    if (f1_hint && f2_hint) {
        f1 = *f1_hint;
        f2 = *f2_hint;
        Polynomial expect = f1.pow(k) - Polynomial::variable(r, slot) * g * f2.pow(k);
        if (!(expect == b)) return std::nullopt;
    } else {
        // split by the v-exponent mod k: class 0 is f1^k, class 1 is v*g*f2^k
        Polynomial A(r), C(r);
        for (const auto& [e, c] : b.terms()) {
            long cls = e[slot] % static_cast<long>(k);
            if (cls == 0) {
                A.add_term(e, c);
            } else if (cls == 1) {
                Exp ne(e);
                ne[slot] -= 1;
                C.add_term(ne, c);
            } else {
                return std::nullopt;
            }
        }
        if (A.is_zero() || C.is_zero()) return std::nullopt;
        auto Cg = C.divide_exact(g);
        if (!Cg) return std::nullopt;
        // k-th roots via repeated p-th roots
        auto kth_root = [&](Polynomial x) -> std::optional<Polynomial> {
            unsigned long kk = k;
            while (kk > 1) {
                auto root = x.pth_root(p);
                if (!root) return std::nullopt;
                x = *root;
                kk /= p;
            }
            return x;
        };
        auto r1 = kth_root(A);
        auto r2 = kth_root(-*Cg);
        if (!r1 || !r2) return std::nullopt;
        f1 = *r1;
        f2 = *r2;
    }

    // phi(v) = v^k / g reusing the variable name; for f's mentioning v the
    // image must stay monomial-invertible
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < r->size(); ++i) images.push_back(Polynomial::variable(r, i));
    bool mentions_v = f1.mentions(slot) || f2.mentions(slot);
    if (mentions_v && !g.single_term()) throw error("power pattern with v inside f requires monomial g");
    {
        Polynomial vk = Polynomial::variable(r, slot, static_cast<long>(k));
        if (g.is_constant() && g.constant_value().is_one()) {
            images[slot] = vk;
        } else {
            const auto& [ge, gc] = *g.terms().begin();
            Exp inv(ge);
            for (long& x : inv) x = -x;
            images[slot] = vk * Polynomial::monomial(r, inv, gc.inverse());
        }
    }
    Polynomial b1 = f1.substitute(images, r) - Polynomial::variable(r, slot) * f2.substitute(images, r);
    // verify the k-th power identity phi(b) = b1^k
    Polynomial lhs = b.substitute(images, r);
    if (!(b1.pow(k) == lhs)) throw error("power pattern identity failed");

    Reduction red;
    red.kind = "power-pattern";
    red.source = b;
    red.reduced = b1;
    std::ostringstream desc;
    desc << var_name(r, v) << " -> " << var_name(r, v) << "^" << k;
    if (!(g.is_constant() && g.constant_value().is_one())) desc << "/(" << g.str() << ")";
    desc << "; k-th root taken";
    red.description = desc.str();
    return red;
}

std::pair<Polynomial, std::vector<Reduction>> reduction_pass(const Polynomial& b) {
    Polynomial cur = b;
    std::vector<Reduction> trail;
    for (int step = 0; step < 32; ++step) {
        if (cur.is_zero() || cur.is_constant()) break;
        if (auto lin = detect_linear_variable(cur)) {
            trail.push_back(*lin);
            cur = lin->reduced;  // fully parameterized
            break;
        }
        if (auto w = weighted_homogeneous_weights(cur)) {
            Reduction red = apply_weight_reduction(cur, *w);
            cur = red.reduced;
            trail.push_back(std::move(red));
            continue;
        }
        unsigned long p = cur.ring()->field.characteristic;
        if (p > 0) {
            if (auto root = cur.pth_root(p)) {
                Reduction red;
                red.kind = "power-pattern";
                red.source = cur;
                red.reduced = *root;
                red.description = "p-th root, p = " + std::to_string(p);
                cur = *root;
                trail.push_back(std::move(red));
                continue;
            }
        }
        break;
    }
    return {cur, trail};
}

}  // namespace desing
