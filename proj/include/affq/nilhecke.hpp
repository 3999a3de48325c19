#pragma once

#include <map>

#include "affq/affine.hpp"

namespace affq {

// Element of the extended nil-Hecke ring: a finite S-linear combination of
// basis symbols A~_x, x in W~_aff.  Coefficients stay in S throughout; the
// fraction-field presentation lives in the oracle (delta_oracle.hpp).
class NilHeckeElement {
  public:
    NilHeckeElement() = default;
    explicit NilHeckeElement(const RootSystem* rs) : rs_(rs) {}

    static NilHeckeElement zero(const RootSystem* rs) { return NilHeckeElement(rs); }
    static NilHeckeElement unit(const RootSystem* rs);
    static NilHeckeElement basis(const ExtendedAffineElement& x);
    static NilHeckeElement basis(const ExtendedAffineElement& x, const Polynomial& coeff);

    const RootSystem* root_system() const { return rs_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExtendedAffineElement, Polynomial>& terms() const { return terms_; }
    Polynomial coeff(const ExtendedAffineElement& x) const;

    void add_term(const ExtendedAffineElement& x, const Polynomial& c);

    NilHeckeElement operator+(const NilHeckeElement& o) const;
    NilHeckeElement operator-(const NilHeckeElement& o) const;
    NilHeckeElement operator-() const;
    // left S-action
    NilHeckeElement scale(const Polynomial& s) const;
    NilHeckeElement scale(const Rational& c) const;
    // ring product; right coefficients move left through the commutation rule
    NilHeckeElement operator*(const NilHeckeElement& o) const;
    NilHeckeElement& operator+=(const NilHeckeElement& o) { return *this = *this + o; }
    NilHeckeElement& operator-=(const NilHeckeElement& o) { return *this = *this - o; }

    bool operator==(const NilHeckeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const NilHeckeElement& o) const { return !(*this == o); }

    // evaluation at zero equivariant parameters, term by term
    NilHeckeElement at_zero() const;

  private:
    const RootSystem* rs_ = nullptr;
    std::map<ExtendedAffineElement, Polynomial> terms_;
};

// Optional workspace caching cover data and delta expansions; reuse across
// calls for heavy sweeps.  Not thread-safe: one workspace per thread.
struct NilCache {
    std::map<ExtendedAffineElement, NilHeckeElement> delta_exp;
    std::map<ExtendedAffineElement, std::vector<std::pair<ExtendedAffineElement, IntVec>>> covers;
};

// A~_x . p expanded in the A-basis with coefficients on the left (iterated
// application of the commutation rule on the linear factors of p)
NilHeckeElement move_scalar_left(const ExtendedAffineElement& x, const Polynomial& p,
                                 NilCache* cache = nullptr);

// ring product with a shared workspace
NilHeckeElement nil_mul(const NilHeckeElement& a, const NilHeckeElement& b, NilCache* cache = nullptr);

// the displayed commutation for a homogeneous linear scalar:
//   A~_x . lambda = x(lambda) A~_x + sum_{x s_alpha covered by x} <lambda, alpha^vee> A~_{x s_alpha}
// throws unless lambda is homogeneous linear
NilHeckeElement commute_scalar(const ExtendedAffineElement& x, const Polynomial& lambda);

// the A-basis expansion of delta_x for any x in the extended group
NilHeckeElement delta_to_A(const ExtendedAffineElement& x, NilCache* cache = nullptr);

// equivariant localization coefficient: the coefficient of A_w in
// delta_to_A(v) for finite w, v (the paper's signed convention)
Polynomial xi_value(const WeylElement& w, const WeylElement& v);

// classical Billey formula (positive convention): cross-check oracle,
// xi_value = (-1)^{l(w)} * billey
Polynomial billey_value(const WeylElement& w, const WeylElement& v);

// A_beta for a real affine root, expanded in the A-basis (Def of A_alpha),
// computed as (1/gamma)(1 - delta_{s_beta}) with exact division
NilHeckeElement a_alpha(const RootSystem* rs, const AffineRoot& beta);

// left multiplication by delta_tau for a length-zero tau: relabels the basis
// and twists coefficients
NilHeckeElement z_twist_left(const ExtendedAffineElement& tau, const NilHeckeElement& a);

}  // namespace affq
