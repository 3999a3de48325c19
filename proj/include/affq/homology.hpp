#pragma once

#include "affq/delta_oracle.hpp"
#include "affq/nilhecke.hpp"

namespace affq {

// Element of the homology module: finite S-combination of classes xi~_w with
// w a minimal coset representative (the module M~, i.e. H_*^T of the adjoint
// affine Grassmannian).
class HomologyElement {
  public:
    HomologyElement() = default;
    explicit HomologyElement(const RootSystem* rs) : rs_(rs) {}

    static HomologyElement zero(const RootSystem* rs) { return HomologyElement(rs); }
    static HomologyElement unit(const RootSystem* rs);
    static HomologyElement basis(const ExtendedAffineElement& w);  // w must pass is_in_waffm
    static HomologyElement basis(const ExtendedAffineElement& w, const Polynomial& coeff);

    const RootSystem* root_system() const { return rs_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExtendedAffineElement, Polynomial>& terms() const { return terms_; }
    Polynomial coeff(const ExtendedAffineElement& w) const;

    void add_term(const ExtendedAffineElement& w, const Polynomial& c);

    HomologyElement operator+(const HomologyElement& o) const;
    HomologyElement operator-(const HomologyElement& o) const;
    HomologyElement scale(const Polynomial& s) const;
    HomologyElement scale(const Rational& c) const;
    HomologyElement& operator+=(const HomologyElement& o) { return *this = *this + o; }

    bool operator==(const HomologyElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const HomologyElement& o) const { return !(*this == o); }

    // non-equivariant specialization
    HomologyElement at_zero() const;

  private:
    const RootSystem* rs_ = nullptr;
    std::map<ExtendedAffineElement, Polynomial> terms_;
};

struct SolverLimits {
    int max_word_len = 6;  // largest l(w) accepted by the characterization solver
    int max_rank = 3;
    int support_cap = -1;  // largest l(x v) in the ansatz; -1 means 2 l(w)
};

// Calculator for the homology module: the A~-action, the j maps with their
// closed forms, the Pontryagin product and the parabolic quotients.  Owns the
// per-root-system caches; use one instance per thread.
class AffineHomology {
  public:
    explicit AffineHomology(const RootSystem* rs) : rs_(rs) {}

    const RootSystem* root_system() const { return rs_; }
    NilCache& cache() { return nil_; }

    // the defining action of the nil-Hecke ring on the module
    HomologyElement module_action(const NilHeckeElement& a, const HomologyElement& m);

    // class of the T-fixed point indexed by mu (any mu in P^vee), as an
    // honest combination of basis classes
    HomologyElement psi_class(const Coweight& mu);

    // delta_u action for finite u (the push-forward u_*)
    HomologyElement pushforward(const WeylElement& u, const HomologyElement& m);

    // ---- the j maps ----
    // j of the translation class, mu antidominant: sum over the W-orbit
    NilHeckeElement j_ad_translation(const Coweight& mu);
    // j of xi_{tau_i(v_i)} by the closed double-sum formula
    NilHeckeElement j_pieri(int node);
    // characterization solver: the unique element congruent to A~_w that
    // centralizes S
    NilHeckeElement solve_j_general(const ExtendedAffineElement& w, SolverLimits limits = {});
    // dispatch: translation form, Pieri form, Z-conjugation, else solver
    NilHeckeElement j_of_class(const ExtendedAffineElement& w);
    NilHeckeElement j_of(const HomologyElement& m);

    // Pontryagin product (j of the left factor acts on the right factor)
    HomologyElement pontryagin(const HomologyElement& m1, const HomologyElement& m2);

    // (sigma . m1) x (tau . m2) for sigma, tau in Z, computed through the
    // twisted product formula
    HomologyElement product_extended(const ZElement& sigma, const HomologyElement& m1,
                                     const ZElement& tau, const HomologyElement& m2);

    // quotient by J~_P: drop classes outside (W~^P)_aff
    HomologyElement reduce_mod_JP(const HomologyElement& m, const std::set<int>& I_P);

    // the unique w <=_L v_i with tau_i(w) v_i w^{-1} x length-additive in
    // W~_aff^-; returns the product element
    ExtendedAffineElement nonequiv_pieri(int node, const ExtendedAffineElement& x);

    // presentations of a basis class (Prop on the three module models)
    struct Phi2View {
        const ZElement* tau;
        ExtendedAffineElement hat;  // class xi_{hat} in M
    };
    struct Phi1View {
        Coweight lambda;      // h_lambda factor, lambda in P^vee
        HomologyElement part;  // element of M
    };
    Phi2View phi2_view(const ExtendedAffineElement& w);
    Phi1View phi1_view(const ExtendedAffineElement& w);

  private:
    const RootSystem* rs_;
    NilCache nil_;
    std::map<ExtendedAffineElement, NilHeckeElement> j_memo_;

    // smallest remainder m with w = m t_nu, nu antidominant in Q^vee and
    // lengths adding; nullopt when no tail strips off
    std::optional<ExtendedAffineElement> strip_translation_tail(const ExtendedAffineElement& w);
};

}  // namespace affq
