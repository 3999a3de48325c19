#include "affq/nilhecke.hpp"

#include <functional>
#include <stdexcept>

namespace affq {

NilHeckeElement NilHeckeElement::unit(const RootSystem* rs) {
    return basis(ExtendedAffineElement::identity(rs));
}

NilHeckeElement NilHeckeElement::basis(const ExtendedAffineElement& x) {
    return basis(x, Polynomial::constant(x.root_system()->rank(), Rational(1)));
}

NilHeckeElement NilHeckeElement::basis(const ExtendedAffineElement& x, const Polynomial& coeff) {
    NilHeckeElement e(x.root_system());
    e.add_term(x, coeff);
    return e;
}

Polynomial NilHeckeElement::coeff(const ExtendedAffineElement& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Polynomial(rs_ ? rs_->rank() : 0) : it->second;
}

void NilHeckeElement::add_term(const ExtendedAffineElement& x, const Polynomial& c) {
    if (c.is_zero()) return;
    if (!rs_) rs_ = x.root_system();
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& o) const {
    NilHeckeElement r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [x, c] : o.terms_) r.add_term(x, c);
    return r;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& o) const {
    NilHeckeElement r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [x, c] : o.terms_) r.add_term(x, -c);
    return r;
}

NilHeckeElement NilHeckeElement::operator-() const {
    NilHeckeElement r(rs_);
    for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
    return r;
}

NilHeckeElement NilHeckeElement::scale(const Polynomial& s) const {
    NilHeckeElement r(rs_);
    for (const auto& [x, c] : terms_) r.add_term(x, c * s);
    return r;
}

NilHeckeElement NilHeckeElement::scale(const Rational& c) const {
    NilHeckeElement r(rs_);
    for (const auto& [x, p] : terms_) r.add_term(x, p * c);
    return r;
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& o) const {
    return nil_mul(*this, o, nullptr);
}

NilHeckeElement nil_mul(const NilHeckeElement& a, const NilHeckeElement& b, NilCache* cache) {
    const RootSystem* rs = a.root_system() ? a.root_system() : b.root_system();
    NilHeckeElement out(rs);
    for (const auto& [x, cx] : a.terms()) {
        for (const auto& [y, cy] : b.terms()) {
            // A~_x (cy A~_y) = (A~_x cy) A~_y
            NilHeckeElement moved = move_scalar_left(x, cy, cache);
            for (const auto& [z, cz] : moved.terms()) {
                ExtendedAffineElement zy = z * y;
                if (zy.length() != z.length() + y.length()) continue;
                out.add_term(zy, cx * cz);
            }
        }
    }
    return out;
}

NilHeckeElement NilHeckeElement::at_zero() const {
    NilHeckeElement r(rs_);
    for (const auto& [x, c] : terms_) {
        Rational c0 = c.constant_term();
        if (!c0.is_zero()) r.add_term(x, Polynomial::constant(rs_->rank(), c0));
    }
    return r;
}

NilHeckeElement commute_scalar(const ExtendedAffineElement& x, const Polynomial& lambda) {
    int deg = 0;
    if (!lambda.is_homogeneous(&deg) || deg != 1)
        throw std::invalid_argument("commute_scalar: scalar must be homogeneous linear");
    return move_scalar_left(x, lambda);
}

NilHeckeElement move_scalar_left(const ExtendedAffineElement& x, const Polynomial& p,
                                 NilCache* cache) {
    const RootSystem* rs = x.root_system();
    int r = rs->rank();
    NilHeckeElement out(rs);
    if (p.is_zero()) return out;

    // cover data of a basis element: the products x s_alpha together with the
    // coordinates of alpha^vee over the simple coroots, so that the pairing
    // <pi_i, alpha^vee> is a coordinate lookup
    std::map<ExtendedAffineElement, std::vector<std::pair<ExtendedAffineElement, IntVec>>> local;
    auto& cover_cache = cache ? cache->covers : local;
    auto covers_of = [&](const ExtendedAffineElement& y)
        -> const std::vector<std::pair<ExtendedAffineElement, IntVec>>& {
        auto it = cover_cache.find(y);
        if (it != cover_cache.end()) return it->second;
        std::vector<std::pair<ExtendedAffineElement, IntVec>> cd;
        for (const auto& beta : y.cover_roots()) {
            ExtendedAffineElement ys = y * ExtendedAffineElement::reflection(rs, beta);
            auto cc = rs->coroot_coords(rs->coroot(Root{beta.finite}));
            IntVec pairings(r);
            for (int i = 0; i < r; ++i) pairings[i] = cc[i].num().to_ll();
            cd.emplace_back(ys, std::move(pairings));
        }
        return cover_cache.emplace(y, std::move(cd)).first->second;
    };

    for (const auto& [mono, coeff] : p.terms()) {
        // working element: starts as coeff * A~_x, then absorbs each linear factor
        NilHeckeElement work = NilHeckeElement::basis(x, Polynomial::constant(r, coeff));
        for (int i = 0; i < r; ++i) {
            for (int e = 0; e < mono.exp[i]; ++e) {
                Polynomial lam = Polynomial::variable(r, i + 1);  // pi_{i+1}
                NilHeckeElement next(rs);
                for (const auto& [y, cy] : work.terms()) {
                    // A~_y pi = y(pi) A~_y + sum <pi, alpha^vee> A~_{y s_alpha}
                    next.add_term(y, cy * y.act(lam));
                    for (const auto& [ys, pairings] : covers_of(y)) {
                        long long pair = pairings[i];  // <pi_{i+1}, alpha^vee>
                        if (pair != 0) next.add_term(ys, cy * Rational(pair));
                    }
                }
                work = std::move(next);
            }
        }
        out += work;
    }
    return out;
}

NilHeckeElement delta_to_A(const ExtendedAffineElement& x, NilCache* cache) {
    if (cache) {
        auto it = cache->delta_exp.find(x);
        if (it != cache->delta_exp.end()) return it->second;
    }
    const RootSystem* rs = x.root_system();
    auto [tau, hat] = rs->affine().decompose_z(x);

    NilHeckeElement acc = NilHeckeElement::unit(rs);
    for (int i : hat.reduced_word()) {
        // delta_{s_i} = 1 - alpha_i A_i  (alpha_0 = -Theta at level zero)
        Polynomial alpha_i =
            i == 0 ? -Polynomial::from_root(*rs, rs->highest_root())
                   : Polynomial::from_root(*rs, rs->simple_root(i));
        NilHeckeElement di = NilHeckeElement::unit(rs);
        di.add_term(ExtendedAffineElement::simple(rs, i), -alpha_i);
        acc = nil_mul(acc, di, cache);
    }
    if (!tau->is_identity()) acc = z_twist_left(tau->elem, acc);
    if (cache) cache->delta_exp.emplace(x, acc);
    return acc;
}

NilHeckeElement z_twist_left(const ExtendedAffineElement& tau, const NilHeckeElement& a) {
    if (tau.length() != 0) throw std::invalid_argument("z_twist_left: twist must have length zero");
    NilHeckeElement out(a.root_system());
    for (const auto& [y, c] : a.terms()) out.add_term(tau * y, tau.act(c));
    return out;
}

Polynomial xi_value(const WeylElement& w, const WeylElement& v) {
    NilHeckeElement d = delta_to_A(ExtendedAffineElement::finite(v));
    return d.coeff(ExtendedAffineElement::finite(w));
}

Polynomial billey_value(const WeylElement& w, const WeylElement& v) {
    const RootSystem* rs = w.root_system();
    std::vector<int> vw = v.reduced_word();
    int target_len = w.length();
    // prefix reflections beta_j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j})
    std::vector<Root> betas;
    {
        WeylElement pre = WeylElement::identity(rs);
        for (int letter : vw) {
            betas.push_back(pre.act(rs->simple_root(letter)));
            pre = pre * WeylElement::simple(rs, letter);
        }
    }
    Polynomial total(rs->rank());
    // enumerate subwords of the right length whose product is w (reduced)
    std::vector<int> idx;
    std::function<void(size_t, const WeylElement&, const Polynomial&)> rec =
        [&](size_t pos, const WeylElement& acc, const Polynomial& prod) {
            if (static_cast<int>(idx.size()) == target_len) {
                if (acc == w) total += prod;
                return;
            }
            if (pos >= vw.size()) return;
            if (vw.size() - pos < target_len - idx.size()) return;
            // take position pos
            idx.push_back(static_cast<int>(pos));
            WeylElement acc2 = acc * WeylElement::simple(rs, vw[pos]);
            if (acc2.length() == static_cast<int>(idx.size()))  // keep reduced subwords only
                rec(pos + 1, acc2, prod * Polynomial::from_root(*rs, betas[pos]));
            idx.pop_back();
            // skip position pos
            rec(pos + 1, acc, prod);
        };
    rec(0, WeylElement::identity(rs), Polynomial::constant(rs->rank(), Rational(1)));
    return total;
}

NilHeckeElement a_alpha(const RootSystem* rs, const AffineRoot& beta) {
    if (!beta.is_real()) throw std::invalid_argument("a_alpha: imaginary root");
    // A_beta = (1/gamma)(1 - delta_{s_beta}) with gamma the finite part
    ExtendedAffineElement sbeta = ExtendedAffineElement::reflection(rs, beta);
    NilHeckeElement diff = NilHeckeElement::unit(rs) - delta_to_A(sbeta);
    Polynomial gamma = Polynomial::from_root(*rs, Root{beta.finite});
    NilHeckeElement out(rs);
    for (const auto& [y, c] : diff.terms()) {
        auto q = c.divide_exact(gamma);
        if (!q) throw std::logic_error("a_alpha: coefficient not divisible by the finite part");
        out.add_term(y, *q);
    }
    return out;
}

}  // namespace affq
