#include "desing/maps.hpp"

#include <sstream>

namespace desing {

Polynomial ArcMap::apply_forward(const Polynomial& f) const {
    std::vector<Polynomial> images;
    images.reserve(f.ring()->size());
    for (std::size_t i = 0; i < f.ring()->n_coords; ++i) {
        long idx = target->index_of(f.ring()->vars[i]);
        if (idx < 0) throw error("arc map: coordinate " + f.ring()->vars[i] + " missing from target");
        images.push_back(Polynomial::variable(target, static_cast<std::size_t>(idx)));
    }
    for (std::size_t i = 0; i < f.ring()->n_mains(); ++i) {
        Polynomial img = fwd_translation[i].embed(target) +
                         Polynomial::monomial(target, fwd_monomial[i], Scalar::one(target->field));
        images.push_back(std::move(img));
    }
    return f.substitute(images, target);
}

bool ArcMap::roundtrip_identity() const {
    std::size_t n = source->n_mains();
    std::size_t m = target->n_mains();
    if (fwd_monomial.size() != n || back.size() != m) return false;
    // E (n x m) over the target main slots
    std::vector<std::vector<long>> E(n, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) E[i][j] = fwd_monomial[i][target->n_coords + j];
    // E*F = I_n and F*E = I_m
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long s = 0;
            for (std::size_t j = 0; j < m; ++j) s += E[i][j] * back[j][k];
            if (s != (i == k ? 1 : 0)) return false;
        }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l) {
            long s = 0;
            for (std::size_t i = 0; i < n; ++i) s += back[j][i] * E[i][l];
            if (s != (j == l ? 1 : 0)) return false;
        }
    return true;
}

std::string ArcMap::phi_str(std::size_t i) const {
    std::ostringstream os;
    bool translated = !fwd_translation[i].is_zero();
    if (translated) os << fwd_translation[i].str() << " + ";
    std::string mono = monomial_str(*target, fwd_monomial[i]);
    os << (mono.empty() ? "1" : mono);
    return os.str();
}

std::string ArcMap::psi_str(std::size_t j) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < source->n_mains(); ++i) {
        long e = back[j][i];
        if (e == 0) continue;
        if (any) os << "*";
        const std::string& name = source->vars[source->n_coords + i];
        bool translated = !fwd_translation[i].is_zero();
        if (translated)
            os << "(" << name << " - (" << fwd_translation[i].str() << "))";
        else
            os << name;
        if (e != 1) os << "^" << e;
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

}  // namespace desing
