#include "desing/weights.hpp"

#include <algorithm>
#include <numeric>

namespace desing {

TieData weight_tie(const WeightVec& w, const std::vector<WeightVec>& support) {
    TieData td;
    bool first = true;
    for (std::size_t r = 0; r < support.size(); ++r) {
        long v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * support[r][i];
        if (first || v < td.min_value) {
            td.min_value = v;
            td.tie = {r};
            first = false;
        } else if (v == td.min_value) {
            td.tie.push_back(r);
        }
    }
    return td;
}

bool is_weight_sequence(const WeightVec& w, const std::vector<WeightVec>& support) {
    bool nonzero = false;
    for (long x : w) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    if (!nonzero) return false;
    return weight_tie(w, support).tie.size() >= 2;
}

namespace {

long vec_gcd(const WeightVec& w) {
    long g = 0;
    for (long x : w) g = std::gcd(g, x);
    return g;
}

bool odometer(WeightVec& v, long lo, const WeightVec& hi) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < hi[i]) {
            ++v[i];
            return true;
        }
        v[i] = lo;
    }
    return false;
}

}  // namespace

std::vector<WeightVec> bounded_weight_search(const std::vector<WeightVec>& support, long bound) {
    if (support.size() < 2) throw error("weight sequences need at least two support monomials");
    std::size_t m = support.front().size();
    double est = 1;
    for (std::size_t i = 0; i < m; ++i) est *= static_cast<double>(bound);
    if (est > 2e7) throw limit_error("weight enumeration bound too large");
    std::vector<WeightVec> out;
    WeightVec w(m, 1);
    WeightVec hi(m, bound);
    while (true) {
        if (vec_gcd(w) == 1 && is_weight_sequence(w, support)) out.push_back(w);
        if (!odometer(w, 1, hi)) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeightVec> two_var_weight_sequences(const std::vector<WeightVec>& support) {
    if (support.size() < 2) throw error("weight sequences need at least two support monomials");
    std::vector<WeightVec> out;
    for (std::size_t i = 0; i < support.size(); ++i) {
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            long dx = support[j][0] - support[i][0];
            long dy = support[j][1] - support[i][1];
            if (dx == 0 && dy == 0) continue;
            // positive primitive normal to (dx, dy), if any
            long a = -dy, b = dx;
            if (a < 0 || b < 0) {
                a = -a;
                b = -b;
            }
            if (a <= 0 || b <= 0) continue;
            long g = std::gcd(a, b);
            WeightVec w{a / g, b / g};
            if (is_weight_sequence(w, support)) out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<WeightVec> valid_weight_sequences(const std::vector<WeightVec>& support, long bound) {
    if (support.size() < 2) throw error("weight sequences need at least two support monomials");
    std::size_t m = support.front().size();
    long maxexp = 0;
    for (const auto& row : support)
        for (long e : row) maxexp = std::max(maxexp, e);
    long eff = std::max(bound, 2 * maxexp);
    if (m == 2) return two_var_weight_sequences(support);
    return bounded_weight_search(support, eff);
}

std::vector<WeightVec> minimal_weight_sequences(const std::vector<WeightVec>& cands,
                                                const std::vector<WeightVec>& support) {
    auto tie_of = [&](const WeightVec& w) { return weight_tie(w, support).tie; };
    auto decomposes = [&](const WeightVec& w) {
        std::size_t m = w.size();
        WeightVec u(m, 0);
        WeightVec hi(w);
        while (true) {
            bool u_zero = true, v_zero = true, u_pos = true, v_pos = true;
            WeightVec v(m);
            for (std::size_t i = 0; i < m; ++i) {
                v[i] = w[i] - u[i];
                if (u[i] != 0) u_zero = false;
                if (v[i] != 0) v_zero = false;
                if (u[i] <= 0) u_pos = false;
                if (v[i] <= 0) v_pos = false;
            }
            if (!u_zero && !v_zero) {
                auto tu = tie_of(u);
                if (tu.size() >= 2) {
                    auto tv = tie_of(v);
                    if (tv.size() >= 2) {
                        // a pair of support monomials tied at the minimum for
                        // both summands witnesses the decomposition; a summand
                        // pair with every positive entry on one side only
                        // (pure boundary directions) pins the family minimum
                        // and does not disqualify it
                        std::size_t common = 0;
                        for (std::size_t a : tu)
                            if (std::find(tv.begin(), tv.end(), a) != tv.end()) ++common;
                        if (common >= 2 && (u_pos || v_pos)) return true;
                        if (u_pos && v_pos) return true;
                    }
                }
            }
            if (!odometer(u, 0, hi)) break;
        }
        return false;
    };
    std::vector<WeightVec> out;
    for (const auto& w : cands)
        if (!decomposes(w)) out.push_back(w);
    return out;
}

UnimodularMap unimodular_extend(const WeightVec& w) {
    std::size_t m = w.size();
    if (m == 0) throw error("empty weight sequence");
    for (long x : w)
        if (x <= 0) throw error("weight sequence entries must be positive");
    long D = vec_gcd(w);
    WeightVec v(w);
    for (long& x : v) x /= D;

    // reduce v to e_last by integer row operations, recording them
    struct Op {
        bool swap;
        std::size_t i, p;
        long q;  // r_i -= q * r_p  (or swap r_i <-> r_p)
    };
    std::vector<Op> ops;
    auto nonzero_count = [&]() {
        std::size_t c = 0;
        for (long x : v)
            if (x != 0) ++c;
        return c;
    };
    while (nonzero_count() > 1) {
        std::size_t pivot = m;
        for (std::size_t i = 0; i < m; ++i)
            if (v[i] != 0 && (pivot == m || std::abs(v[i]) < std::abs(v[pivot]))) pivot = i;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot || v[i] == 0) continue;
            long q = v[i] / v[pivot];
            if (q != 0) {
                v[i] -= q * v[pivot];
                ops.push_back({false, i, pivot, q});
            }
        }
    }
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (v[i] != 0) last_nonzero = i;
    if (v[last_nonzero] != 1) throw error("weight vector failed to reduce to a unit");
    if (last_nonzero != m - 1) {
        ops.push_back({true, last_nonzero, m - 1, 0});
        std::swap(v[last_nonzero], v[m - 1]);
    }

    auto identity = [&] {
        std::vector<std::vector<long>> I(m, std::vector<long>(m, 0));
        for (std::size_t i = 0; i < m; ++i) I[i][i] = 1;
        return I;
    };
    // M = O_1^{-1} ... O_k^{-1}; M_inv = O_k ... O_1
    std::vector<std::vector<long>> M = identity(), W = identity();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->swap)
            std::swap(M[it->i], M[it->p]);
        else
            for (std::size_t c = 0; c < m; ++c) M[it->i][c] += it->q * M[it->p][c];
    }
    for (const auto& op : ops) {
        if (op.swap)
            std::swap(W[op.i], W[op.p]);
        else
            for (std::size_t c = 0; c < m; ++c) W[op.i][c] -= op.q * W[op.p][c];
    }

    // canonical form: sort the unit columns lexicographically
    if (m >= 3) {
        std::vector<std::size_t> order(m - 1);
        for (std::size_t j = 0; j + 1 < m; ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            for (std::size_t r = 0; r < m; ++r)
                if (M[r][a] != M[r][b]) return M[r][a] < M[r][b];
            return a < b;
        });
        std::vector<std::vector<long>> M2(m, std::vector<long>(m));
        std::vector<std::vector<long>> W2(m, std::vector<long>(m));
        for (std::size_t j = 0; j + 1 < m; ++j) {
            for (std::size_t r = 0; r < m; ++r) M2[r][j] = M[r][order[j]];
            W2[j] = W[order[j]];
        }
        for (std::size_t r = 0; r < m; ++r) M2[r][m - 1] = M[r][m - 1];
        W2[m - 1] = W[m - 1];
        M = std::move(M2);
        W = std::move(W2);
    }

    // M's distinguished column must be w/D and M*M_inv = I
    for (std::size_t r = 0; r < m; ++r)
        if (M[r][m - 1] != w[r] / D) throw error("unimodular completion lost the weight column");
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
            long s = 0;
            for (std::size_t k = 0; k < m; ++k) s += M[r][k] * W[k][c];
            if (s != (r == c ? 1 : 0)) throw error("unimodular completion inverse check failed");
        }
    return {M, W};
}

ArcBuild build_arc_map(const ConstraintSet& part, const RingPtr& node_ring,
                       const std::vector<std::size_t>& coord_of_main,
                       const std::vector<std::size_t>& active, const WeightVec& w,
                       const std::vector<std::string>& child_vars,
                       const std::vector<std::string>& child_coords) {
    std::size_t n = node_ring->n_mains();
    std::size_t m = active.size();
    if (w.size() != m) throw error("build_arc_map: weight length differs from the active set");
    if (child_vars.size() != n || child_coords.size() != n)
        throw error("build_arc_map: child needs one variable per source variable");

    UnimodularMap um = unimodular_extend(w);

    // child ring: ancestors' coordinates, fresh child coordinates, then the
    // child variables (matrix block first, pass-through after)
    std::vector<std::string> coords(node_ring->vars.begin(), node_ring->vars.begin() + node_ring->n_coords);
    coords.insert(coords.end(), child_coords.begin(), child_coords.end());
    RingPtr child = make_ring(node_ring->field, coords, child_vars);

    ArcBuild out;
    out.child_ring = child;
    out.map.source = node_ring;
    out.map.target = child;
    out.map.kind = "weight";
    out.dist_var = m - 1;
    out.child_coord_of_main.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        out.child_coord_of_main[j] = node_ring->n_coords + j;  // fresh coords follow the ancestors'

    // translation constants: the part's generic coordinates, collapsed to
    // constants when the constraints pin them
    auto translation_for = [&](std::size_t source_main) {
        Polynomial a = Polynomial::variable(node_ring, coord_of_main[source_main]);
        Polynomial nf = part.normal_form(a);
        Polynomial value = nf.is_constant() ? nf : a;
        return value.embed(child);
    };

    out.map.fwd_translation.assign(n, Polynomial::zero(child));
    out.map.fwd_monomial.assign(n, Exp(child->size(), 0));
    out.map.back.assign(n, std::vector<long>(n, 0));

    std::vector<bool> is_active(n, false);
    for (std::size_t r = 0; r < m; ++r) is_active[active[r]] = true;

    for (std::size_t r = 0; r < m; ++r) {
        std::size_t i = active[r];
        out.map.fwd_translation[i] = translation_for(i);
        for (std::size_t c = 0; c < m; ++c) out.map.fwd_monomial[i][child->n_coords + c] = um.M[r][c];
    }
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < m; ++r) out.map.back[c][active[r]] = um.M_inv[c][r];

    std::size_t next_slot = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_active[i]) continue;
        out.map.fwd_translation[i] = translation_for(i);
        out.map.fwd_monomial[i][child->n_coords + next_slot] = 1;
        out.map.back[next_slot][i] = 1;
        ++next_slot;
    }
    return out;
}

ArcApplication apply_arc(const Polynomial& b, const ArcBuild& arc, const ConstraintSet& part) {
    ConstraintSet child_base = part.embed(arc.child_ring);
    Polynomial image = arc.map.apply_forward(b);

    // normalize every coefficient modulo the part
    Polynomial normalized(arc.child_ring);
    for (const auto& [mono, coef] : image.collect_by_main()) {
        Polynomial nf = child_base.normal_form(coef);
        if (nf.is_zero()) continue;
        normalized = normalized + nf * Polynomial::monomial(arc.child_ring, mono, Scalar::one(arc.child_ring->field));
    }
    if (normalized.is_zero()) throw error("apply_arc: image vanishes modulo the part");

    auto [factor, cofactor] = normalized.monomial_content();
    bool main_constant = true;
    for (const auto& [e, c] : cofactor.terms())
        for (std::size_t i = arc.child_ring->n_coords; i < arc.child_ring->size(); ++i)
            if (e[i] != 0) main_constant = false;
    if (main_constant) throw error("apply_arc: cofactor is constant; part already resolved or weight invalid");

    // verification: the substitute-and-factor identity, exact
    Polynomial recomposed = Polynomial::monomial(arc.child_ring, factor, Scalar::one(arc.child_ring->field)) * cofactor;
    if (!(recomposed == normalized)) throw error("apply_arc: factorization identity failed");

    std::vector<Polynomial> eq;
    eq.push_back(Polynomial::variable(arc.child_ring, arc.child_coord_of_main[arc.dist_var]));
    eq.push_back(cofactor.eval_at_coords(arc.child_coord_of_main));

    ArcApplication out;
    out.factor = factor;
    out.child = cofactor;
    ConstraintSet cs = child_base;
    for (const auto& g : eq) cs = cs.with_eq(g);
    out.child_part = std::move(cs);
    return out;
}

}  // namespace desing
