#include "affq/delta_oracle.hpp"

#include <stdexcept>

namespace affq {

DeltaElement DeltaElement::unit(const RootSystem* rs) {
    return basis(ExtendedAffineElement::identity(rs));
}

DeltaElement DeltaElement::basis(const ExtendedAffineElement& x) {
    return basis(x, RationalFunction::one(x.root_system()->rank()));
}

DeltaElement DeltaElement::basis(const ExtendedAffineElement& x, const RationalFunction& f) {
    DeltaElement d(x.root_system());
    d.add_term(x, f);
    return d;
}

bool DeltaElement::is_zero() const {
    for (const auto& [x, f] : terms_)
        if (!f.is_zero()) return false;
    return true;
}

void DeltaElement::add_term(const ExtendedAffineElement& x, const RationalFunction& f) {
    if (f.is_zero()) return;
    if (!rs_) rs_ = x.root_system();
    auto it = terms_.find(x);
    if (it == terms_.end()) {
        terms_.emplace(x, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DeltaElement DeltaElement::operator+(const DeltaElement& o) const {
    DeltaElement r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [x, f] : o.terms_) r.add_term(x, f);
    return r;
}

DeltaElement DeltaElement::operator-(const DeltaElement& o) const {
    DeltaElement r = *this;
    if (!r.rs_) r.rs_ = o.rs_;
    for (const auto& [x, f] : o.terms_) r.add_term(x, -f);
    return r;
}

RationalFunction oracle_act(const ExtendedAffineElement& x, const RationalFunction& f) {
    const RootSystem* rs = x.root_system();
    Polynomial num = x.act(f.num());
    Rational content = f.den_content();
    std::vector<int> roots;
    roots.reserve(f.den_roots().size());
    for (int idx : f.den_roots()) {
        Root img = x.finite_part().act(rs->positive_roots()[idx]);
        if (img.is_positive()) {
            roots.push_back(rs->positive_root_index(img));
        } else {
            roots.push_back(rs->positive_root_index(-img));
            num = -num;  // flip the sign into the numerator
        }
    }
    return RationalFunction(rs, std::move(num), std::move(content), std::move(roots));
}

DeltaElement DeltaElement::operator*(const DeltaElement& o) const {
    const RootSystem* rs = rs_ ? rs_ : o.rs_;
    DeltaElement r(rs);
    for (const auto& [x, f] : terms_)
        for (const auto& [y, g] : o.terms_) r.add_term(x * y, f * oracle_act(x, g));
    return r;
}

DeltaElement DeltaElement::scale(const RationalFunction& f) const {
    DeltaElement r(rs_);
    for (const auto& [x, g] : terms_) r.add_term(x, f * g);
    return r;
}

DeltaElement DeltaElement::scale_right(const RationalFunction& f) const {
    DeltaElement r(rs_);
    for (const auto& [x, g] : terms_) r.add_term(x, g * oracle_act(x, f));
    return r;
}

bool DeltaElement::operator==(const DeltaElement& o) const {
    DeltaElement diff = *this - o;
    return diff.is_zero();
}

DeltaElement to_delta_oracle(const NilHeckeElement& a, DeltaCache* cache) {
    const RootSystem* rs = a.root_system();
    DeltaElement out(rs);
    for (const auto& [x, c] : a.terms()) {
        DeltaElement expansion;
        bool have = false;
        if (cache) {
            auto cached = cache->basis.find(x);
            if (cached != cache->basis.end()) {
                expansion = cached->second;
                have = true;
            }
        }
        if (!have) {
            auto [tau, hat] = rs->affine().decompose_z(x);
            DeltaElement acc = DeltaElement::basis(tau->elem);
            for (int i : hat.reduced_word()) {
                // A_i = (1/alpha_i)(1 - delta_{s_i}); alpha_0 = -Theta at level zero
                Polynomial alpha_i =
                    i == 0 ? -Polynomial::from_root(*rs, rs->highest_root())
                           : Polynomial::from_root(*rs, rs->simple_root(i));
                DeltaElement ai =
                    (DeltaElement::unit(rs) -
                     DeltaElement::basis(ExtendedAffineElement::simple(rs, i)))
                        .scale(RationalFunction(rs, Polynomial::constant(rs->rank(), Rational(1)),
                                                alpha_i));
                acc = acc * ai;
            }
            expansion = acc;
            if (cache) cache->basis.emplace(x, expansion);
        }
        out += expansion.scale(RationalFunction(c));
    }
    return out;
}

NilHeckeElement from_delta_oracle(const DeltaElement& d, NilCache* cache) {
    const RootSystem* rs = d.root_system();
    // expand each delta_x in the A basis (coefficients in S), multiply by the
    // fraction, and demand that the collected coefficients are polynomials
    std::map<ExtendedAffineElement, RationalFunction> acc;
    for (const auto& [x, f] : d.terms()) {
        NilHeckeElement expansion = delta_to_A(x, cache);
        for (const auto& [y, c] : expansion.terms()) {
            RationalFunction add = f * RationalFunction(c);
            auto it = acc.find(y);
            if (it == acc.end())
                acc.emplace(y, add);
            else
                it->second += add;
        }
    }
    NilHeckeElement out(rs);
    for (const auto& [y, f] : acc) {
        if (f.is_zero()) continue;
        RationalFunction n = f.normalized();
        if (!n.den_roots().empty())
            throw std::domain_error("from_delta_oracle: element is not in the A~ span");
        out.add_term(y, n.num());
    }
    return out;
}

}  // namespace affq
