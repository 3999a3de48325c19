#include "affq/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affq/weyl.hpp"

namespace affq {

int Monomial::degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
}

Polynomial Polynomial::constant(int rank, const Rational& c) {
    Polynomial p(rank);
    p.add_term(Monomial{std::vector<int>(rank, 0)}, c);
    return p;
}

Polynomial Polynomial::variable(int rank, int i) {
    Polynomial p(rank);
    Monomial m{std::vector<int>(rank, 0)};
    m.exp[i - 1] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::from_weight(const RootSystem& rs, const Weight& w) {
    Polynomial p(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) {
        if (w.coords[j] == 0) continue;
        Monomial m{std::vector<int>(rs.rank(), 0)};
        m.exp[j] = 1;
        p.add_term(m, Rational(w.coords[j]));
    }
    return p;
}

Polynomial Polynomial::from_root(const RootSystem& rs, const Root& r) {
    return from_weight(rs, rs.root_to_weight(r));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::constant_term() const {
    Monomial one{std::vector<int>(rank_, 0)};
    auto it = terms_.find(one);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous(int* deg_out) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1)
            d = m.degree();
        else if (m.degree() != d)
            return false;
    }
    if (deg_out) *deg_out = d;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(rank_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(rank_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c.is_zero()) return Polynomial(rank_);
    Polynomial r(rank_);
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    Polynomial out(images.empty() ? rank_ : images[0].rank());
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(out.rank(), c);
        for (size_t i = 0; i < m.exp.size(); ++i)
            for (int k = 0; k < m.exp[i]; ++k) term *= images[i];
        out += term;
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quot(rank_);
    // lex-leading-term long division; terminates because the leading
    // monomial strictly decreases
    auto lead = [](const Polynomial& p) { return std::prev(p.terms().end()); };
    auto dlead = lead(divisor);
    while (!rem.is_zero()) {
        auto rlead = lead(rem);
        // monomial divisibility
        Monomial q{std::vector<int>(rank_, 0)};
        bool ok = true;
        for (int i = 0; i < rank_; ++i) {
            q.exp[i] = rlead->first.exp[i] - dlead->first.exp[i];
            if (q.exp[i] < 0) ok = false;
        }
        if (!ok) return std::nullopt;
        Rational qc = rlead->second / dlead->second;
        Polynomial qterm(rank_);
        qterm.add_term(q, qc);
        quot += qterm;
        rem -= qterm * divisor;
    }
    return quot;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = BigInt::gcd(num_gcd, c.num());
        den_lcm = den_lcm * c.den() / BigInt::gcd(den_lcm, c.den());
    }
    return Rational(num_gcd, den_lcm);
}

std::string Polynomial::to_string(const RootSystem* rs) const {
    if (terms_.empty()) return "0";

    // prefer simple-root monomials when the change of basis is integral
    std::map<Monomial, Rational> display = terms_;
    char var = 'w';
    if (rs) {
        // substitute pi_j = sum_k (A^-1)_{kj}... i.e. express each generator in roots
        std::vector<std::vector<Rational>> pi_in_roots(rank_);
        for (int j = 1; j <= rank_; ++j) pi_in_roots[j - 1] = rs->root_coords(rs->fundamental_weight(j));
        // expand monomials with rational coefficients; bail out to the
        // weight basis if any coefficient ends up non-integral
        std::map<Monomial, Rational> alt;
        for (const auto& [m, c] : terms_) {
            std::map<Monomial, Rational> acc{{Monomial{std::vector<int>(rank_, 0)}, c}};
            for (int i = 0; i < rank_; ++i)
                for (int e = 0; e < m.exp[i]; ++e) {
                    std::map<Monomial, Rational> next;
                    for (const auto& [am, ac] : acc)
                        for (int k = 0; k < rank_; ++k) {
                            if (pi_in_roots[i][k].is_zero()) continue;
                            Monomial nm = am;
                            nm.exp[k] += 1;
                            auto [it, fresh] = next.emplace(nm, ac * pi_in_roots[i][k]);
                            if (!fresh) it->second += ac * pi_in_roots[i][k];
                        }
                    acc = std::move(next);
                }
            for (const auto& [am, ac] : acc) {
                if (ac.is_zero()) continue;
                auto [it, fresh] = alt.emplace(am, ac);
                if (!fresh) {
                    it->second += ac;
                    if (it->second.is_zero()) alt.erase(it);
                }
            }
        }
        bool integral = true;
        for (const auto& [m, c] : alt)
            if (!c.is_integer()) integral = false;
        if (integral) {
            display = std::move(alt);
            var = 'a';
        }
    }

    // deterministic print: ascending degree, then lex
    std::vector<std::pair<Monomial, Rational>> items(display.begin(), display.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.exp > y.first.exp;  // within a degree: lex-descending, a1^2 before a1*a2
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : items) {
        Rational ac = c.abs();
        if (first) {
            if (c.is_negative()) os << "-";
            first = false;
        } else {
            os << (c.is_negative() ? " - " : " + ");
        }
        bool printed = false;
        if (m.degree() == 0 || !ac.is_one()) {
            os << ac.to_string();
            printed = true;
        }
        for (size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (printed) os << "*";
            os << var << (i + 1);
            if (m.exp[i] > 1) os << "^" << m.exp[i];
            printed = true;
        }
    }
    return os.str();
}

Polynomial weyl_act(const WeylElement& w, const Polynomial& p) {
    const RootSystem* rs = w.root_system();
    std::vector<Polynomial> images;
    images.reserve(rs->rank());
    for (int j = 1; j <= rs->rank(); ++j)
        images.push_back(Polynomial::from_weight(*rs, w.act(rs->fundamental_weight(j))));
    return p.substitute(images);
}

}  // namespace affq
