#pragma once

#include "affq/homology.hpp"

namespace affq {

// Parabolic data: W_P, the minimal representatives W^P and the eta_P image
// basis (the simple coroots away from I_P).
struct Parabolic {
    const RootSystem* rs = nullptr;
    std::set<int> I_P;
    std::vector<WeylElement> subgroup;   // W_P
    std::vector<WeylElement> min_reps;   // W^P, sorted by length
    std::vector<int> free_nodes;         // ascending complement of I_P

    static Parabolic make(const RootSystem* rs, const std::set<int>& I_P);
    bool is_min_rep(const WeylElement& w) const;
    WeylElement min_rep(const WeylElement& w) const;  // minimal element of w W_P
};

// projection Q^vee -> Q^vee / Q^vee_P in the free-node coroot basis;
// throws when mu is not in the coroot lattice
IntVec eta_P(const Parabolic& P, const Coweight& mu);

// deg q_{nu} = sum over R+ \ R_P+ of <nu, alpha>, extended linearly
long long quantum_degree(const Parabolic& P, const IntVec& qexp);

// Element of Z[Q^vee/Q^vee_P] (x) H_T^*(G/P): finite sum of q^{nu} sigma^P(w)
// with polynomial coefficients; q exponents may be negative.
class QuantumClass {
  public:
    QuantumClass() = default;
    explicit QuantumClass(const RootSystem* rs) : rs_(rs) {}
    static QuantumClass schubert(const Parabolic& P, const WeylElement& w);

    const RootSystem* root_system() const { return rs_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<IntVec, WeylElement>, Polynomial>& terms() const { return terms_; }

    void add_term(const IntVec& qexp, const WeylElement& w, const Polynomial& c);

    QuantumClass operator+(const QuantumClass& o) const;
    QuantumClass operator-(const QuantumClass& o) const;
    QuantumClass scale(const Polynomial& s) const;
    QuantumClass shift_q(const IntVec& delta) const;  // multiply by q^delta
    QuantumClass& operator+=(const QuantumClass& o) { return *this = *this + o; }

    bool operator==(const QuantumClass& o) const { return terms_ == o.terms_; }
    bool operator!=(const QuantumClass& o) const { return !(*this == o); }

    QuantumClass at_zero() const;  // non-equivariant specialization

  private:
    const RootSystem* rs_ = nullptr;
    std::map<std::pair<IntVec, WeylElement>, Polynomial> terms_;
};

// Peterson map on classes supported in W~_aff^- with Q^vee translations:
// xi_{w pi_P(t_lambda)} -> q_{eta_P(lambda)} sigma^P(w).  Throws when a
// support class does not factor.
QuantumClass peterson_map(AffineHomology& H, const Parabolic& P, const HomologyElement& m);

// the semilinear left-translation action on QH_T^*(G/P)
QuantumClass weyl_star_action(const Parabolic& P, const WeylElement& w, const QuantumClass& c);

// closed form of the cominuscule product: q_{eta_P(pi_i - w^{-1} pi_i)}
// sigma^P(v_i w), with sigma read through the minimal representative.
// Equivariantly the left side is sigma^P(v_i) x v_i^*(sigma^P(w)); with
// equivariant = false it is the plain product sigma^P(v_i) x sigma^P(w).
QuantumClass quantum_cominuscule_product(const Parabolic& P, int node, const WeylElement& w,
                                         bool equivariant);

// decorated lift of sigma^P(w): an affine class m and the q shift s with
// sigma^P(w) = q_{-s} psi_P(xi_m)
struct LiftedClass {
    HomologyElement m;
    IntVec qshift;
};
LiftedClass lift_schubert(const Parabolic& P, const WeylElement& w);

// product of two decorated classes through the Pontryagin ring, reduced mod
// J_P and mapped by peterson_map
QuantumClass quantum_product_via_homology(AffineHomology& H, const Parabolic& P,
                                          const LiftedClass& a, const LiftedClass& b);

// the theorem's left-hand side computed through homology:
// sigma^P(v_i) x v_i^*(sigma^P(w)) when equivariant, else the plain product
// evaluated at zero
QuantumClass cominuscule_product_via_homology(AffineHomology& H, const Parabolic& P, int node,
                                              const WeylElement& w, bool equivariant);

}  // namespace affq
