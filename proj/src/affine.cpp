#include "affq/affine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace affq {

ExtendedAffineElement::ExtendedAffineElement(WeylElement u, Coweight lambda)
    : rs_(u.root_system()), u_(std::move(u)), lambda_(std::move(lambda)) {
    compute_length();
}

ExtendedAffineElement ExtendedAffineElement::identity(const RootSystem* rs) {
    return {WeylElement::identity(rs), Coweight{IntVec(rs->rank(), 0)}};
}

ExtendedAffineElement ExtendedAffineElement::translation(const RootSystem* rs, const Coweight& lambda) {
    return {WeylElement::identity(rs), lambda};
}

ExtendedAffineElement ExtendedAffineElement::finite(const WeylElement& u) {
    return {u, Coweight{IntVec(u.root_system()->rank(), 0)}};
}

ExtendedAffineElement ExtendedAffineElement::simple(const RootSystem* rs, int i) {
    if (i == 0) {
        // s_0 = t_{Theta^vee} s_Theta = s_Theta t_{-Theta^vee}
        WeylElement st = rs->weyl().reflection(rs->highest_root());
        return {st, -rs->coroot(rs->highest_root())};
    }
    return finite(WeylElement::simple(rs, i));
}

ExtendedAffineElement ExtendedAffineElement::reflection(const RootSystem* rs, const AffineRoot& beta) {
    if (!beta.is_real()) throw std::invalid_argument("reflection: imaginary root");
    // s_{gamma + k eps} = t_{-k gamma^vee} s_gamma = s_gamma t_{k gamma^vee}
    Root gamma{beta.finite};
    WeylElement sg = rs->weyl().reflection(gamma.is_positive() ? gamma : -gamma);
    Coweight gv = rs->coroot(gamma);
    Coweight tpart{IntVec(rs->rank(), 0)};
    for (int j = 0; j < rs->rank(); ++j) tpart.coords[j] = beta.level * gv.coords[j];
    return {sg, tpart};
}

bool ExtendedAffineElement::in_unextended() const { return rs_->in_coroot_lattice(lambda_); }

ExtendedAffineElement ExtendedAffineElement::operator*(const ExtendedAffineElement& o) const {
    // (u t_l)(v t_m) = uv t_{v^{-1}(l) + m}
    WeylElement vinv = o.u_.inverse();
    return {u_ * o.u_, vinv.act(lambda_) + o.lambda_};
}

ExtendedAffineElement ExtendedAffineElement::inverse() const {
    WeylElement ui = u_.inverse();
    return {ui, -u_.act(lambda_)};
}

bool ExtendedAffineElement::operator<(const ExtendedAffineElement& o) const {
    if (length_ != o.length_) return length_ < o.length_;
    if (!(lambda_ == o.lambda_)) return lambda_ < o.lambda_;
    return u_ < o.u_;
}

void ExtendedAffineElement::compute_length() {
    // l(u t_l) = sum over alpha > 0 of | <l, alpha> + chi(u(alpha) < 0) |
    long long total = 0;
    for (const auto& alpha : rs_->positive_roots()) {
        long long p = rs_->pairing_root(alpha, lambda_);
        if (!u_.act(alpha).is_positive()) p += 1;
        total += p < 0 ? -p : p;
    }
    length_ = static_cast<int>(total);
}

AffineRoot ExtendedAffineElement::act(const AffineRoot& beta) const {
    // u t_l . (mu + n eps) = u(mu) + (n - <mu, l>) eps
    AffineRoot r;
    r.finite = u_.act(Root{beta.finite}).coeffs;
    r.level = beta.level - rs_->pairing_root(Root{beta.finite}, lambda_);
    return r;
}

Coweight ExtendedAffineElement::act(const Coweight& mu) const { return u_.act(mu); }

Polynomial ExtendedAffineElement::act(const Polynomial& p) const { return weyl_act(u_, p); }

std::vector<AffineRoot> ExtendedAffineElement::inversions() const {
    std::vector<AffineRoot> out;
    std::vector<Root> all_roots;
    for (const auto& a : rs_->positive_roots()) {
        all_roots.push_back(a);
        all_roots.push_back(-a);
    }
    for (const auto& gamma : all_roots) {
        long long m = rs_->pairing_root(gamma, lambda_);
        bool u_neg = !u_.act(gamma).is_positive();
        long long kmin = gamma.is_positive() ? 0 : 1;
        // x.(gamma + k eps) has level k - m; negative iff k < m, boundary k = m
        // needs u(gamma) < 0
        for (long long k = kmin; k < m; ++k) {
            AffineRoot b;
            b.finite = gamma.coeffs;
            b.level = k;
            out.push_back(b);
        }
        if (m >= kmin && u_neg) {
            AffineRoot b;
            b.finite = gamma.coeffs;
            b.level = m;
            out.push_back(b);
        }
    }
    return out;
}

std::vector<AffineRoot> ExtendedAffineElement::cover_roots() const {
    std::vector<AffineRoot> out;
    for (const auto& beta : inversions()) {
        ExtendedAffineElement xs = *this * reflection(rs_, beta);
        if (xs.length() == length_ - 1) out.push_back(beta);
    }
    return out;
}

std::vector<int> ExtendedAffineElement::reduced_word() const {
    if (!in_unextended())
        throw std::invalid_argument("reduced_word: element lies outside W_aff");
    std::vector<int> word;
    ExtendedAffineElement x = *this;
    while (x.length() > 0) {
        bool found = false;
        for (int i = 0; i <= rs_->rank(); ++i) {
            ExtendedAffineElement cand = simple(rs_, i) * x;
            if (cand.length() == x.length() - 1) {
                word.push_back(i);
                x = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("reduced_word: no affine descent");
    }
    if (!x.is_identity()) throw std::logic_error("reduced_word: residual nonidentity of length 0");
    return word;
}

// ---------------- Z ----------------

std::vector<Rational> ZTable::class_key(const RootSystem* rs, const Coweight& lambda) {
    auto coords = rs->coroot_coords(lambda);
    for (auto& x : coords) {
        // reduce mod 1 into [0,1)
        BigInt q, r;
        BigInt::divmod(x.num(), x.den(), q, r);
        if (r.is_negative()) r = r + x.den();
        x = Rational(r, x.den());
    }
    return coords;
}

ZTable::ZTable(const RootSystem* rs) : rs_(rs) {
    auto dynkin_perm_of = [&](const ExtendedAffineElement& tau) {
        int r = rs->rank();
        std::vector<int> perm(r + 1, -1);
        for (int i = 0; i <= r; ++i) {
            AffineRoot img = tau.act(rs->affine_simple_root(i));
            int match = -1;
            for (int j = 0; j <= r; ++j)
                if (img == rs->affine_simple_root(j)) match = j;
            if (match < 0) throw std::logic_error("ZTable: conjugation does not permute the simple roots");
            perm[i] = match;
        }
        return perm;
    };

    auto add = [&](const ExtendedAffineElement& e, std::vector<int> word) -> bool {
        auto key = class_key(rs_, e.translation_part());
        if (class_index_.count(key)) return false;
        if (e.length() != 0) throw std::logic_error("ZTable: generator has nonzero length");
        ZElement z;
        z.elem = e;
        z.dynkin_perm = dynkin_perm_of(e);
        z.index = elems_.size();
        z.tau_word = std::move(word);
        class_index_[key] = z.index;
        elems_.push_back(std::move(z));
        return true;
    };

    add(ExtendedAffineElement::identity(rs_), {});
    std::vector<std::pair<int, ExtendedAffineElement>> gens;
    for (int i : rs_->minuscule_nodes()) {
        WeylElement vi = rs_->weyl().v_of_node(i);
        ExtendedAffineElement tau =
            ExtendedAffineElement::finite(vi) *
            ExtendedAffineElement::translation(rs_, -rs_->fundamental_coweight(i));
        gens.emplace_back(i, tau);
        if (add(tau, {i})) tau_index_[i] = elems_.size() - 1;
        else tau_index_[i] = class_index_.at(class_key(rs_, tau.translation_part()));
    }
    // close under multiplication; passes grow the word by one generator, so
    // the stored factorizations are shortest
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<ExtendedAffineElement, std::vector<int>>> cur;
        for (const auto& z : elems_) cur.emplace_back(z.elem, z.tau_word);
        for (const auto& [a, aword] : cur)
            for (const auto& [gi, g] : gens) {
                ExtendedAffineElement p = a * g;
                std::vector<int> word = aword;
                word.push_back(gi);
                if (add(p, std::move(word))) grew = true;
            }
    }
}

const ZElement& ZTable::tau_of_node(int i) const {
    auto it = tau_index_.find(i);
    if (it == tau_index_.end())
        throw std::invalid_argument("tau_of_node: node " + std::to_string(i) + " is not minuscule");
    return elems_[it->second];
}

const ZElement& ZTable::by_class(const Coweight& lambda) const {
    auto it = class_index_.find(class_key(rs_, lambda));
    if (it == class_index_.end()) throw std::logic_error("ZTable: class not represented");
    return elems_[it->second];
}

const ZElement& ZTable::of(const ExtendedAffineElement& x) const {
    if (x.length() != 0) throw std::invalid_argument("ZTable::of: element has nonzero length");
    const ZElement& z = by_class(x.translation_part());
    if (!(z.elem == x)) throw std::logic_error("ZTable::of: length-zero element not in table");
    return z;
}

// ---------------- AffineData ----------------

std::pair<const ZElement*, ExtendedAffineElement> AffineData::decompose_z(
    const ExtendedAffineElement& x) const {
    const ZElement& tau = z_.by_class(x.translation_part());
    ExtendedAffineElement hat = tau.elem.inverse() * x;
    if (!hat.in_unextended()) throw std::logic_error("decompose_z: hat part outside W_aff");
    return {&tau, hat};
}

std::vector<ExtendedAffineElement> AffineData::waffm_up_to(int max_len) const {
    // BFS by left multiplication with the affine generators; if x in W_aff^-
    // and s_j x < x then s_j x in W_aff^-
    std::vector<ExtendedAffineElement> out;
    std::set<ExtendedAffineElement> seen;
    ExtendedAffineElement e = ExtendedAffineElement::identity(rs_);
    out.push_back(e);
    seen.insert(e);
    std::vector<ExtendedAffineElement> cur{e};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<ExtendedAffineElement> next;
        for (const auto& x : cur)
            for (int j = 0; j <= rs_->rank(); ++j) {
                ExtendedAffineElement y = ExtendedAffineElement::simple(rs_, j) * x;
                if (y.length() != len || !is_in_waffm(y)) continue;
                if (seen.insert(y).second) {
                    out.push_back(y);
                    next.push_back(y);
                }
            }
        cur = std::move(next);
    }
    return out;
}

// ---------------- memberships / factorizations ----------------

bool is_in_waffm(const ExtendedAffineElement& x) {
    const RootSystem* rs = x.root_system();
    const Coweight& l = x.translation_part();
    if (!l.is_antidominant()) return false;
    for (int i = 1; i <= rs->rank(); ++i)
        if (l.coords[i - 1] == 0 && !x.finite_part().act(rs->simple_root(i)).is_positive())
            return false;
    return true;
}

bool is_in_wpaff(const ExtendedAffineElement& x, const std::set<int>& I_P) {
    const RootSystem* rs = x.root_system();
    for (const auto& gamma : rs->positive_roots()) {
        bool in_P = true;
        for (int j = 0; j < rs->rank(); ++j)
            if (gamma.coeffs[j] != 0 && !I_P.count(j + 1)) in_P = false;
        if (!in_P) continue;
        long long pairing = rs->pairing_root(gamma, x.translation_part());
        long long want = x.finite_part().act(gamma).is_positive() ? 0 : -1;
        if (pairing != want) return false;
    }
    return true;
}

std::pair<ExtendedAffineElement, ExtendedAffineElement> pi_P_factor(
    const ExtendedAffineElement& x, const std::set<int>& I_P) {
    const RootSystem* rs = x.root_system();
    std::vector<WeylElement> wp = rs->weyl().parabolic_subgroup(I_P);
    std::vector<int> nodes(I_P.begin(), I_P.end());
    int k = static_cast<int>(nodes.size());

    // scan w2 = w t_mu over W_P x bounded Q^vee_P; the coset x (W_P)_aff meets
    // (W~^P)_aff exactly once
    long long bound = x.length() + 2;
    std::optional<std::pair<ExtendedAffineElement, ExtendedAffineElement>> found;
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<long long> c(k, -bound);
        bool done = k == 0;
        bool boundary_hit = false;
        while (true) {
            Coweight mu{IntVec(rs->rank(), 0)};
            for (int t = 0; t < k; ++t) {
                Coweight al = rs->simple_coroot(nodes[t]);
                for (int j = 0; j < rs->rank(); ++j) mu.coords[j] += c[t] * al.coords[j];
            }
            for (const auto& w : wp) {
                ExtendedAffineElement w2(w, mu);
                ExtendedAffineElement w1 = x * w2.inverse();
                if (is_in_wpaff(w1, I_P)) {
                    if (found && !(found->first == w1))
                        throw std::logic_error("pi_P: coset representative not unique");
                    found = {w1, w2};
                    for (int t = 0; t < k; ++t)
                        if (c[t] == -bound || c[t] == bound) boundary_hit = true;
                }
            }
            if (done) break;
            int t = 0;
            while (t < k && ++c[t] > bound) {
                c[t] = -bound;
                ++t;
            }
            if (t == k) break;
        }
        if (found && !boundary_hit) return *found;
        if (k == 0) break;
        bound *= 2;  // widen the box if the hit touched the boundary
        found.reset();
    }
    if (found) return *found;
    throw std::logic_error("pi_P: no representative found in search box");
}

std::pair<ExtendedAffineElement, WeylElement> waffm_factor(const ExtendedAffineElement& x) {
    const RootSystem* rs = x.root_system();
    ExtendedAffineElement m = x;
    WeylElement v = WeylElement::identity(rs);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 1; i <= rs->rank(); ++i) {
            ExtendedAffineElement cand = m * ExtendedAffineElement::simple(rs, i);
            if (cand.length() == m.length() - 1) {
                m = cand;
                v = WeylElement::simple(rs, i) * v;
                progress = true;
                break;
            }
        }
    }
    return {m, v};
}

bool ext_bruhat_leq(const AffineData& ad, const ExtendedAffineElement& x,
                    const ExtendedAffineElement& y) {
    auto [tx, hx] = ad.decompose_z(x);
    auto [ty, hy] = ad.decompose_z(y);
    if (tx->index != ty->index) return false;
    // affine Bruhat on the hats via the subword recursion
    std::function<bool(const ExtendedAffineElement&, const ExtendedAffineElement&)> rec =
        [&](const ExtendedAffineElement& u, const ExtendedAffineElement& v) -> bool {
        if (u.length() > v.length()) return false;
        if (u.length() == 0) return true;
        if (u.length() == v.length()) return u == v;
        const RootSystem* rs = u.root_system();
        for (int i = 0; i <= rs->rank(); ++i) {
            ExtendedAffineElement s = ExtendedAffineElement::simple(rs, i);
            ExtendedAffineElement sv = s * v;
            if (sv.length() < v.length()) {
                ExtendedAffineElement su = s * u;
                if (su.length() < u.length()) return rec(su, sv);
                return rec(u, sv);
            }
        }
        return false;
    };
    return rec(hx, hy);
}

}  // namespace affq
