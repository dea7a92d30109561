#include "desing/resolved.hpp"

#include <algorithm>
#include <sstream>

namespace desing {

namespace {

// evaluate a unit/dist-free polynomial at the part's generic point: main
// variables to their coordinates, then normal form
Polynomial value_at_part(const Polynomial& f, const ConstraintSet& part,
                         const std::vector<std::size_t>& coord_of_main) {
    return part.normal_form(f.eval_at_coords(coord_of_main));
}

}  // namespace

std::optional<ResolvedDecomposition> check_resolved_roles(const Polynomial& b, const ConstraintSet& part,
                                                          const std::vector<std::size_t>& coord_of_main,
                                                          std::size_t unit_var, std::size_t dist_var) {
    const RingPtr& r = b.ring();
    if (unit_var == dist_var) return std::nullopt;
    std::size_t uslot = r->n_coords + unit_var;
    std::size_t dslot = r->n_coords + dist_var;
    if (b.is_laurent()) return std::nullopt;

    // the distinguished coordinate must vanish on the part
    if (!part.normal_form(Polynomial::variable(r, coord_of_main[dist_var])).is_zero()) return std::nullopt;

    // split off the xd-free part and demand linearity in x0 there
    Polynomial mod_d(r), rest(r);
    for (const auto& [e, c] : b.terms()) {
        Polynomial t = Polynomial::monomial(r, e, c);
        if (e[dslot] == 0)
            mod_d = mod_d + t;
        else
            rest = rest + t;
    }
    if (mod_d.degree_in(uslot) > 1) return std::nullopt;
    auto parts0 = mod_d.coefficients_wrt(uslot);
    Polynomial f0 = parts0.empty() ? Polynomial(r) : parts0[0];
    Polynomial f1 = parts0.size() > 1 ? parts0[1] : Polynomial(r);
    if (f1.is_zero()) return std::nullopt;

    // f1 must be a unit at the part, and the unit variable's coordinate
    // -f0/f1 must be nonzero
    if (value_at_part(f1, part, coord_of_main).is_zero()) return std::nullopt;
    if (value_at_part(f0, part, coord_of_main).is_zero()) return std::nullopt;

    // rest = xd * D * sum_j x0^j g_j
    ResolvedDecomposition dec;
    dec.unit_var = unit_var;
    dec.dist_var = dist_var;
    dec.b = b;
    dec.f0 = f0;
    dec.f1 = f1;
    if (rest.is_zero()) {
        dec.D = Polynomial::constant(r, 1);
        dec.g = {Polynomial(r)};
    } else {
        Polynomial S(r);
        for (const auto& [e, c] : rest.terms()) {
            Exp ne(e);
            ne[dslot] -= 1;
            S.add_term(ne, c);
        }
        // D: the monomial content of S over the non-unit main slots
        Exp content(r->size(), 0);
        bool first = true;
        for (const auto& [e, c] : S.terms()) {
            for (std::size_t i = r->n_coords; i < r->size(); ++i) {
                if (i == uslot) continue;
                content[i] = first ? e[i] : std::min(content[i], e[i]);
            }
            first = false;
        }
        dec.D = Polynomial::monomial(r, content, Scalar::one(r->field));
        Polynomial core(r);
        for (const auto& [e, c] : S.terms()) core.add_term(exp_sub(e, content), c);
        dec.g = core.coefficients_wrt(uslot);
    }

    // exact reassembly
    Polynomial sum = dec.f0 + Polynomial::variable(r, uslot) * dec.f1;
    Polynomial gpart(r);
    for (std::size_t j = 0; j < dec.g.size(); ++j)
        gpart = gpart + Polynomial::variable(r, uslot, static_cast<long>(j)) * dec.g[j];
    sum = sum + Polynomial::variable(r, dslot) * dec.D * gpart;
    if (!(sum == b)) throw error("resolved decomposition reassembly failed");
    return dec;
}

std::optional<ResolvedDecomposition> is_strongly_resolved(const Polynomial& b, const ConstraintSet& part,
                                                          const std::vector<std::size_t>& coord_of_main) {
    const RingPtr& r = b.ring();
    for (std::size_t u = 0; u < r->n_mains(); ++u)
        for (std::size_t d = 0; d < r->n_mains(); ++d) {
            if (u == d) continue;
            if (auto dec = check_resolved_roles(b, part, coord_of_main, u, d)) return dec;
        }
    return std::nullopt;
}

std::string TruncatedSeries::str() const {
    if (coeffs.empty()) return "0";
    std::vector<std::pair<Exp, Scalar>> terms(coeffs.begin(), coeffs.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return series_less(a.first, b.first); });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono = monomial_str(*ring, e);
        if (mono.empty())
            os << cs;
        else if (cs == "1")
            os << mono;
        else
            os << cs << "*" << mono;
    }
    os << " + O(deg " << order + 1 << ")";
    return os.str();
}

namespace {

// b with the unit variable replaced by the series s, truncated at total
// main degree N throughout
Polynomial eval_at_series(const Polynomial& b, const Polynomial& s, std::size_t uslot, long N) {
    const RingPtr& r = b.ring();
    auto cs = b.coefficients_wrt(uslot);
    Polynomial result(r);
    Polynomial spow = Polynomial::constant(r, 1);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j > 0) spow = (spow * s).truncate_main_degree(N);
        result = result + (cs[j] * spow).truncate_main_degree(N);
    }
    return result;
}

}  // namespace

TruncatedSeries unit_series(const ResolvedDecomposition& dec, long order) {
    const RingPtr& r = dec.b.ring();
    std::size_t uslot = r->n_coords + dec.unit_var;
    if (order < 0) throw error("series order must be non-negative");
    // scalar-coefficient path: every coefficient must be coordinate-free
    for (const auto& [e, c] : dec.b.terms())
        for (std::size_t i = 0; i < r->n_coords; ++i)
            if (e[i] != 0) throw error("unit_series: coefficients involve generic coordinates");

    Scalar f1c = dec.f1.constant_value();
    Scalar f0c = dec.f0.constant_value();
    if (f1c.is_zero()) throw error("unit_series: f1 constant term is not a unit");
    Scalar s0 = -(f0c / f1c);
    if (s0.is_zero()) throw error("unit_series: the unit variable has zero constant term");

    Polynomial s = Polynomial::constant(r, s0);
    for (long k = 1; k <= order; ++k) {
        Polynomial residual = eval_at_series(dec.b, s, uslot, k);
        // homogeneous degree-k piece of the residual
        Polynomial correction(r);
        for (const auto& [e, c] : residual.terms()) {
            long deg = 0;
            for (std::size_t i = r->n_coords; i < r->size(); ++i) deg += e[i];
            if (deg == k) correction.add_term(e, -(c / f1c));
        }
        if (correction.is_zero()) continue;
        s = s + correction;
    }
    // postcondition: b(s) = 0 mod degree order+1
    Polynomial check = eval_at_series(dec.b, s, uslot, order);
    if (!check.is_zero()) throw error("unit_series: substitution check failed");

    TruncatedSeries out;
    out.ring = r;
    out.unit_var = dec.unit_var;
    out.order = order;
    for (const auto& [e, c] : s.terms()) out.coeffs.emplace(e, c);
    return out;
}

ResolvedRewrite resolved_rewrite(const ResolvedDecomposition& dec) {
    const RingPtr& r = dec.b.ring();
    std::size_t uslot = r->n_coords + dec.unit_var;
    std::size_t dslot = r->n_coords + dec.dist_var;

    // extended ring with the new unit coordinate u0
    std::vector<std::string> coords(r->vars.begin(), r->vars.begin() + r->n_coords);
    std::vector<std::string> mains(r->vars.begin() + r->n_coords, r->vars.end());
    mains.push_back("u0");
    RingPtr ext = make_ring(r->field, coords, mains);
    std::size_t u0 = ext->size() - 1;

    // E := f1^n * b(x0 -> (-f0 + xd*D*u0)/f1), cleared of denominators
    long n = dec.b.degree_in(uslot);
    Polynomial P = (-dec.f0).embed(ext) +
                   Polynomial::variable(ext, static_cast<std::size_t>(ext->index_of(r->vars[dslot]))) *
                       dec.D.embed(ext) * Polynomial::variable(ext, u0);
    Polynomial f1e = dec.f1.embed(ext);
    auto cs = dec.b.coefficients_wrt(uslot);
    Polynomial E(ext);
    for (std::size_t j = 0; j < cs.size(); ++j)
        E = E + cs[j].embed(ext) * P.pow(j) * f1e.pow(static_cast<unsigned long>(n) - j);

    Polynomial xdD = Polynomial::variable(ext, static_cast<std::size_t>(ext->index_of(r->vars[dslot]))) *
                     dec.D.embed(ext);
    auto Q = E.divide_exact(xdD);
    if (!Q) throw error("resolved rewrite: the rewritten polynomial is not divisible by xd*D");
    // mod xd, the quotient must be linear in u0
    Polynomial mod_d(ext);
    std::size_t dslot_ext = static_cast<std::size_t>(ext->index_of(r->vars[dslot]));
    for (const auto& [e, c] : Q->terms())
        if (e[dslot_ext] == 0) mod_d.add_term(e, c);
    if (mod_d.degree_in(u0) > 1) throw error("resolved rewrite: not linear in u0 modulo xd");

    ResolvedRewrite out;
    const std::string& xd = r->vars[dslot];
    const std::string& x0 = r->vars[uslot];
    out.phi_unit = x0 + " = (-(" + dec.f0.str() + ") + " + xd + "*(" + dec.D.str() + ")*u0) / (" +
                   dec.f1.str() + ")";
    out.psi_u0 = "u0 = ((" + dec.f0.str() + ") + " + x0 + "*(" + dec.f1.str() + ")) / (" + xd + "*(" +
                 dec.D.str() + "))";
    return out;
}

}  // namespace desing
