#include "affq/peterson.hpp"

#include <algorithm>
#include <stdexcept>

namespace affq {

Parabolic Parabolic::make(const RootSystem* rs, const std::set<int>& I_P) {
    for (int i : I_P)
        if (i < 1 || i > rs->rank()) throw std::invalid_argument("Parabolic: node out of range");
    Parabolic P;
    P.rs = rs;
    P.I_P = I_P;
    P.subgroup = rs->weyl().parabolic_subgroup(I_P);
    P.min_reps = rs->weyl().min_coset_reps(I_P);
    for (int i = 1; i <= rs->rank(); ++i)
        if (!I_P.count(i)) P.free_nodes.push_back(i);
    return P;
}

bool Parabolic::is_min_rep(const WeylElement& w) const {
    for (int i : I_P)
        if (!w.act(rs->simple_root(i)).is_positive()) return false;
    return true;
}

WeylElement Parabolic::min_rep(const WeylElement& w) const {
    WeylElement best = w;
    for (const auto& u : subgroup) {
        WeylElement cand = w * u;
        if (cand.length() < best.length()) best = cand;
    }
    return best;
}

IntVec eta_P(const Parabolic& P, const Coweight& mu) {
    auto coords = P.rs->coroot_coords(mu);
    IntVec out;
    out.reserve(P.free_nodes.size());
    for (int i : P.free_nodes) {
        const Rational& c = coords[i - 1];
        if (!c.is_integer()) throw std::invalid_argument("eta_P: coweight is not in the coroot lattice");
        out.push_back(c.num().to_ll());
    }
    // the I_P coordinates must be integral too (full Q^vee membership)
    for (int i : P.I_P)
        if (!coords[i - 1].is_integer())
            throw std::invalid_argument("eta_P: coweight is not in the coroot lattice");
    return out;
}

long long quantum_degree(const Parabolic& P, const IntVec& qexp) {
    // nu = sum over free nodes of q_i alpha_i^vee
    Coweight nu{IntVec(P.rs->rank(), 0)};
    for (size_t t = 0; t < P.free_nodes.size(); ++t) {
        Coweight av = P.rs->simple_coroot(P.free_nodes[t]);
        for (int j = 0; j < P.rs->rank(); ++j) nu.coords[j] += qexp[t] * av.coords[j];
    }
    long long deg = 0;
    for (const auto& alpha : P.rs->positive_roots()) {
        bool in_P = true;
        for (int j = 0; j < P.rs->rank(); ++j)
            if (alpha.coeffs[j] != 0 && !P.I_P.count(j + 1)) in_P = false;
        if (in_P) continue;
        deg += P.rs->pairing_root(alpha, nu);
    }
    return deg;
}

QuantumClass QuantumClass::schubert(const Parabolic& P, const WeylElement& w) {
    QuantumClass c(P.rs);
    c.add_term(IntVec(P.free_nodes.size(), 0), w,
               Polynomial::constant(P.rs->rank(), Rational(1)));
    return c;
}

void QuantumClass::add_term(const IntVec& qexp, const WeylElement& w, const Polynomial& c) {
    if (c.is_zero()) return;
    if (!rs_) rs_ = w.root_system();
    auto key = std::make_pair(qexp, w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuantumClass QuantumClass::operator+(const QuantumClass& o) const {
    QuantumClass r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

QuantumClass QuantumClass::operator-(const QuantumClass& o) const {
    QuantumClass r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

QuantumClass QuantumClass::scale(const Polynomial& s) const {
    QuantumClass r(rs_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

QuantumClass QuantumClass::shift_q(const IntVec& delta) const {
    QuantumClass r(rs_);
    for (const auto& [k, c] : terms_) {
        IntVec q = k.first;
        for (size_t i = 0; i < q.size(); ++i) q[i] += delta[i];
        r.add_term(q, k.second, c);
    }
    return r;
}

QuantumClass QuantumClass::at_zero() const {
    QuantumClass r(rs_);
    for (const auto& [k, c] : terms_) {
        Rational c0 = c.constant_term();
        if (!c0.is_zero()) r.add_term(k.first, k.second, Polynomial::constant(rs_->rank(), c0));
    }
    return r;
}

QuantumClass peterson_map(AffineHomology& H, const Parabolic& P, const HomologyElement& m) {
    const RootSystem* rs = P.rs;
    QuantumClass out(rs);
    for (const auto& [x, coeff] : m.terms()) {
        if (!is_in_wpaff(x, P.I_P))
            throw std::invalid_argument("peterson_map: class is not in (W~^P)_aff");
        Coweight nu = x.translation_part();
        if (!rs->in_coroot_lattice(nu))
            throw std::invalid_argument("peterson_map: translation is not in the coroot lattice");

        // find lambda = nu + Q^vee_P part with pi_P(t_lambda) sharing the
        // translation nu, so that x pi_P(t_lambda)^{-1} is finite
        std::vector<int> nodes(P.I_P.begin(), P.I_P.end());
        int k = static_cast<int>(nodes.size());
        long long bound = x.length() + 2;
        std::optional<WeylElement> w;
        std::vector<long long> c(k, 0);
        // spiral scan: radius 0, then growing boxes
        for (long long radius = 0; radius <= bound && !w; ++radius) {
            std::vector<long long> idx(k, -radius);
            while (true) {
                long long maxabs = 0;
                for (long long v : idx) maxabs = std::max(maxabs, v < 0 ? -v : v);
                if (maxabs == radius || (radius == 0 && k == 0)) {
                    Coweight lam = nu;
                    for (int t = 0; t < k; ++t) {
                        Coweight av = rs->simple_coroot(nodes[t]);
                        for (int j = 0; j < rs->rank(); ++j) lam.coords[j] += idx[t] * av.coords[j];
                    }
                    if (lam.is_antidominant()) {
                        ExtendedAffineElement p =
                            pi_P(ExtendedAffineElement::translation(rs, lam), P.I_P);
                        if (p.translation_part() == nu) {
                            ExtendedAffineElement q = x * p.inverse();
                            if (q.translation_part().is_zero() && P.is_min_rep(q.finite_part())) {
                                w = q.finite_part();
                                break;
                            }
                        }
                    }
                }
                if (k == 0) break;
                int t = 0;
                while (t < k && ++idx[t] > radius) {
                    idx[t] = -radius;
                    ++t;
                }
                if (t == k) break;
            }
            if (k == 0) break;
        }
        if (!w)
            throw std::invalid_argument("peterson_map: class does not factor as w pi_P(t_lambda)");

        IntVec qexp = eta_P(P, nu);
        // graded map check: deg q + l(w) = -l(x)
        if (quantum_degree(P, qexp) + w->length() != -x.length())
            throw std::logic_error("peterson_map: grading violation");
        out.add_term(qexp, *w, coeff);
    }
    return out;
}

namespace {
QuantumClass star_simple(const Parabolic& P, int i, const QuantumClass& c) {
    const RootSystem* rs = P.rs;
    WeylElement si = WeylElement::simple(rs, i);
    Polynomial alpha_i = Polynomial::from_root(*rs, rs->simple_root(i));
    QuantumClass out(rs);
    for (const auto& [k, coeff] : c.terms()) {
        Polynomial moved = weyl_act(si, coeff);
        const WeylElement& w = k.second;
        WeylElement siw = si * w;
        out.add_term(k.first, w, moved);
        if (siw.length() < w.length()) out.add_term(k.first, siw, -(alpha_i * moved));
    }
    return out;
}
}  // namespace

QuantumClass weyl_star_action(const Parabolic& P, const WeylElement& w, const QuantumClass& c) {
    // (uv)^* = u^* o v^*: apply the letters of a reduced word right to left
    QuantumClass out = c;
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = star_simple(P, *it, out);
    return out;
}

QuantumClass quantum_cominuscule_product(const Parabolic& P, int node, const WeylElement& w,
                                         bool equivariant) {
    (void)equivariant;  // the right-hand side is the same in both readings
    const RootSystem* rs = P.rs;
    if (!rs->minuscule_nodes().count(node))
        throw std::invalid_argument("quantum product: node is not cominuscule");
    if (P.I_P.count(node))
        throw std::invalid_argument("quantum product: node lies in the parabolic");
    if (!P.is_min_rep(w))
        throw std::invalid_argument("quantum product: w is not a minimal representative");
    WeylElement vi = rs->weyl().v_of_node(node);
    Coweight pv = rs->fundamental_coweight(node);
    Coweight diff = pv - w.inverse().act(pv);
    QuantumClass out(rs);
    out.add_term(eta_P(P, diff), P.min_rep(vi * w), Polynomial::constant(rs->rank(), Rational(1)));
    return out;
}

LiftedClass lift_schubert(const Parabolic& P, const WeylElement& w) {
    const RootSystem* rs = P.rs;
    if (!P.is_min_rep(w)) throw std::invalid_argument("lift_schubert: w is not a minimal representative");
    // deep antidominant lambda in Q^vee: multiples of rho^vee that land in the
    // coroot lattice, growing until every W^P lift is admissible
    Coweight two_rho = rs->two_rho_coweight();
    for (int N = 1; N <= 12; ++N) {
        Coweight lam{IntVec(rs->rank(), 0)};
        bool integral = true;
        for (int j = 0; j < rs->rank(); ++j) {
            if ((two_rho.coords[j] * N) % 2 != 0) integral = false;
            lam.coords[j] = -(two_rho.coords[j] * N) / 2;
        }
        if (!integral || !rs->in_coroot_lattice(lam)) continue;
        ExtendedAffineElement p = pi_P(ExtendedAffineElement::translation(rs, lam), P.I_P);
        bool all_ok = true;
        for (const auto& u : P.min_reps) {
            ExtendedAffineElement xu = ExtendedAffineElement::finite(u) * p;
            if (!is_in_waffm(xu) || !is_in_wpaff(xu, P.I_P)) {
                all_ok = false;
                break;
            }
        }
        if (!all_ok) continue;
        ExtendedAffineElement x = ExtendedAffineElement::finite(w) * p;
        return LiftedClass{HomologyElement::basis(x), eta_P(P, lam)};
    }
    throw std::runtime_error("lift_schubert: no admissible translation found");
}

QuantumClass quantum_product_via_homology(AffineHomology& H, const Parabolic& P,
                                          const LiftedClass& a, const LiftedClass& b) {
    HomologyElement prod = H.reduce_mod_JP(H.pontryagin(a.m, b.m), P.I_P);
    QuantumClass q = peterson_map(H, P, prod);
    IntVec unshift(P.free_nodes.size(), 0);
    for (size_t i = 0; i < unshift.size(); ++i) unshift[i] = -(a.qshift[i] + b.qshift[i]);
    return q.shift_q(unshift);
}

QuantumClass cominuscule_product_via_homology(AffineHomology& H, const Parabolic& P, int node,
                                              const WeylElement& w, bool equivariant) {
    const RootSystem* rs = P.rs;
    WeylElement vi = rs->weyl().v_of_node(node);
    LiftedClass left = lift_schubert(P, vi);
    LiftedClass right = lift_schubert(P, w);
    if (equivariant) {
        right.m = H.pushforward(vi, right.m);
        return quantum_product_via_homology(H, P, left, right);
    }
    return quantum_product_via_homology(H, P, left, right).at_zero();
}

}  // namespace affq
