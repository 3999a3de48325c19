#include "affq/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace affq {

Polynomial RationalFunction::root_poly(int idx) const {
    return Polynomial::from_root(*rs_, rs_->positive_roots()[idx]);
}

void RationalFunction::fix_signs() {
    if (den_content_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (den_content_.is_negative()) {
        den_content_ = -den_content_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_content_ = Rational(1);
        den_roots_.clear();
    }
    std::sort(den_roots_.begin(), den_roots_.end());
}

RationalFunction::RationalFunction(const RootSystem* rs, Polynomial num, Rational content,
                                   std::vector<int> root_factors)
    : rs_(rs), num_(std::move(num)), den_content_(std::move(content)), den_roots_(std::move(root_factors)) {
    fix_signs();
}

RationalFunction::RationalFunction(const RootSystem* rs, Polynomial num, const Polynomial& den)
    : rs_(rs), num_(std::move(num)) {
    if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    // factor den as content * product of roots by trial division
    Polynomial rest = den;
    bool progress = true;
    while (progress && !rest.is_constant()) {
        progress = false;
        for (size_t i = 0; i < rs->positive_roots().size(); ++i) {
            auto q = rest.divide_exact(Polynomial::from_root(*rs, rs->positive_roots()[i]));
            if (q) {
                den_roots_.push_back(static_cast<int>(i));
                rest = *q;
                progress = true;
                break;
            }
        }
    }
    if (!rest.is_constant())
        throw std::domain_error("RationalFunction: denominator is not a content times roots");
    den_content_ = rest.constant_term();
    fix_signs();
}

Polynomial RationalFunction::den(const RootSystem& rs) const {
    Polynomial d = Polynomial::constant(num_.rank(), den_content_);
    for (int idx : den_roots_) d *= Polynomial::from_root(rs, rs.positive_roots()[idx]);
    return d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    const RootSystem* rs = rs_ ? rs_ : o.rs_;
    // lcm of the factor multisets
    std::vector<int> lcm;
    {
        auto a = den_roots_.begin(), b = o.den_roots_.begin();
        while (a != den_roots_.end() || b != o.den_roots_.end()) {
            if (b == o.den_roots_.end() || (a != den_roots_.end() && *a < *b)) lcm.push_back(*a++);
            else if (a == den_roots_.end() || *b < *a) lcm.push_back(*b++);
            else { lcm.push_back(*a); ++a; ++b; }
        }
    }
    auto missing = [&](const std::vector<int>& have) {
        std::vector<int> out;
        auto h = have.begin();
        for (int idx : lcm) {
            if (h != have.end() && *h == idx) { ++h; continue; }
            out.push_back(idx);
        }
        return out;
    };
    Polynomial n1 = num_, n2 = o.num_;
    for (int idx : missing(den_roots_)) n1 *= Polynomial::from_root(*rs, rs->positive_roots()[idx]);
    for (int idx : missing(o.den_roots_)) n2 *= Polynomial::from_root(*rs, rs->positive_roots()[idx]);
    // contents: n1/(c1 D1) + n2/(c2 D2) = (c2 n1' + c1 n2')/(c1 c2 L)
    Polynomial num = n1 * o.den_content_ + n2 * den_content_;
    return RationalFunction(rs, std::move(num), den_content_ * o.den_content_, std::move(lcm));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return zero(num_.rank() ? num_.rank() : o.num_.rank());
    const RootSystem* rs = rs_ ? rs_ : o.rs_;
    std::vector<int> roots = den_roots_;
    roots.insert(roots.end(), o.den_roots_.begin(), o.den_roots_.end());
    return RationalFunction(rs, num_ * o.num_, den_content_ * o.den_content_, std::move(roots));
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    // invert o by factoring its numerator
    const RootSystem* rs = rs_ ? rs_ : o.rs_;
    if (!rs) {
        // pure rational path
        if (!o.num_.is_constant()) throw std::domain_error("RationalFunction: cannot invert without a root system");
        return *this * RationalFunction(Polynomial::constant(num_.rank(), o.den_content_ * o.num_.constant_term().inverse()));
    }
    Polynomial oden = o.den(*rs);
    RationalFunction inv(rs, std::move(oden), o.num_);
    return *this * inv;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    RationalFunction d = *this - o;
    return d.is_zero();
}

RationalFunction RationalFunction::normalized() const {
    if (num_.is_zero()) return zero(num_.rank());
    Polynomial n = num_;
    std::vector<int> remaining;
    for (int idx : den_roots_) {
        auto q = n.divide_exact(root_poly(idx));
        if (q)
            n = *q;
        else
            remaining.push_back(idx);
    }
    // absorb the content into the numerator; the denominator is then the
    // plain product of positive roots (the fixed sign convention)
    n = n * den_content_.inverse();
    return RationalFunction(rs_, std::move(n), Rational(1), std::move(remaining));
}

bool RationalFunction::is_polynomial() const {
    if (num_.is_zero()) return true;
    return normalized().den_roots().empty();
}

Polynomial RationalFunction::as_polynomial() const {
    RationalFunction n = normalized();
    if (!n.den_roots().empty())
        throw std::domain_error("RationalFunction: not a polynomial");
    return n.num();
}

std::string RationalFunction::to_string(const RootSystem* rs) const {
    if (den_trivial()) return num_.to_string(rs);
    std::string den_str = den_content_.is_one() ? "" : den_content_.to_string();
    for (int idx : den_roots_) {
        if (!den_str.empty()) den_str += "*";
        const RootSystem* r = rs ? rs : rs_;
        den_str += "(" + Polynomial::from_root(*r, r->positive_roots()[idx]).to_string(r) + ")";
    }
    return "(" + num_.to_string(rs ? rs : rs_) + ")/(" + den_str + ")";
}

}  // namespace affq
