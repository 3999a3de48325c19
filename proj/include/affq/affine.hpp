#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "affq/polynomial.hpp"
#include "affq/weyl.hpp"

namespace affq {

// Element of the extended affine Weyl group W~_aff = W x| P^vee, stored as
// u . t_lambda with u finite and lambda in fundamental-coweight coordinates.
// The length is the closed affine formula and is cached at construction.
class ExtendedAffineElement {
  public:
    ExtendedAffineElement() = default;
    ExtendedAffineElement(WeylElement u, Coweight lambda);

    static ExtendedAffineElement identity(const RootSystem* rs);
    static ExtendedAffineElement translation(const RootSystem* rs, const Coweight& lambda);
    static ExtendedAffineElement finite(const WeylElement& u);
    // affine Coxeter generator, i in 0..rank (s_0 = t_{Theta^vee} s_Theta)
    static ExtendedAffineElement simple(const RootSystem* rs, int i);
    // reflection in the real affine root gamma + k*eps
    static ExtendedAffineElement reflection(const RootSystem* rs, const AffineRoot& beta);

    const RootSystem* root_system() const { return rs_; }
    const WeylElement& finite_part() const { return u_; }
    const Coweight& translation_part() const { return lambda_; }
    bool is_translation() const { return u_.is_identity(); }
    bool is_identity() const { return u_.is_identity() && lambda_.is_zero(); }
    // lies in W_aff = W x| Q^vee
    bool in_unextended() const;

    ExtendedAffineElement operator*(const ExtendedAffineElement& o) const;
    ExtendedAffineElement inverse() const;
    bool operator==(const ExtendedAffineElement& o) const {
        return lambda_ == o.lambda_ && u_ == o.u_;
    }
    bool operator!=(const ExtendedAffineElement& o) const { return !(*this == o); }
    bool operator<(const ExtendedAffineElement& o) const;

    int length() const { return length_; }

    // action on Q + Z*eps
    AffineRoot act(const AffineRoot& beta) const;
    // translation-ignoring action on coweights
    Coweight act(const Coweight& mu) const;
    // level-zero action on scalars (the finite part acts)
    Polynomial act(const Polynomial& p) const;

    // positive real roots beta with x(beta) < 0; exactly length() of them
    std::vector<AffineRoot> inversions() const;
    // positive real roots beta with x s_beta covered by x
    std::vector<AffineRoot> cover_roots() const;

    // affine Coxeter reduced word for elements of W_aff (shortlex-minimal,
    // letters 0..rank); throws outside W_aff
    std::vector<int> reduced_word() const;

  private:
    const RootSystem* rs_ = nullptr;
    WeylElement u_;
    Coweight lambda_;
    int length_ = 0;
    void compute_length();
};

// Length-zero element of the extended group together with its class in
// P^vee/Q^vee and the induced automorphism of the affine Dynkin diagram.
struct ZElement {
    ExtendedAffineElement elem;
    std::vector<int> dynkin_perm;  // f over {0..r}; index 0 is the affine node
    size_t index = 0;              // position in the Z table (stable order)
    std::vector<int> tau_word;     // shortest factorization into tau generators

    bool is_identity() const { return elem.is_identity(); }
};

// The finite group Z = P^vee/Q^vee realized inside the extended group,
// generated by tau_i = v_i t_{-pi_i^vee}; built once per root system.
class ZTable {
  public:
    explicit ZTable(const RootSystem* rs);

    const std::vector<ZElement>& elements() const { return elems_; }
    const ZElement& identity() const { return elems_[0]; }
    const ZElement& tau_of_node(int i) const;  // i minuscule
    // lookup by coweight class; throws if the class is not represented
    const ZElement& by_class(const Coweight& lambda) const;
    const ZElement& of(const ExtendedAffineElement& x) const;  // x must have length 0
    size_t size() const { return elems_.size(); }

  private:
    const RootSystem* rs_;
    std::vector<ZElement> elems_;
    std::map<std::vector<Rational>, size_t> class_index_;
    std::map<int, size_t> tau_index_;
    static std::vector<Rational> class_key(const RootSystem* rs, const Coweight& lambda);
};

// Per-root-system affine context: Z table plus enumeration caches.
// Built once; treat as part of the immutable root-system data.
class AffineData {
  public:
    explicit AffineData(const RootSystem* rs) : rs_(rs), z_(rs) {}

    const RootSystem* root_system() const { return rs_; }
    const ZTable& z() const { return z_; }

    // x = tau * xhat with tau in Z and xhat in W_aff
    std::pair<const ZElement*, ExtendedAffineElement> decompose_z(const ExtendedAffineElement& x) const;

    // minimal length representatives of W_aff / W, by length 0..max_len
    std::vector<ExtendedAffineElement> waffm_up_to(int max_len) const;

  private:
    const RootSystem* rs_;
    ZTable z_;
};

// membership in W~_aff^- (minimal representatives of W~_aff / W)
bool is_in_waffm(const ExtendedAffineElement& x);

// membership in (W~^P)_aff per the pairing conditions on R_P^+
bool is_in_wpaff(const ExtendedAffineElement& x, const std::set<int>& I_P);

// x = pi_P(x) . w2 with pi_P(x) the unique member of x (W_P)_aff lying in
// (W~^P)_aff.  Returns {pi_P(x), w2}.
std::pair<ExtendedAffineElement, ExtendedAffineElement> pi_P_factor(
    const ExtendedAffineElement& x, const std::set<int>& I_P);

inline ExtendedAffineElement pi_P(const ExtendedAffineElement& x, const std::set<int>& I_P) {
    return pi_P_factor(x, I_P).first;
}

// x = m . v with m in W~_aff^- and v in W finite; lengths add
std::pair<ExtendedAffineElement, WeylElement> waffm_factor(const ExtendedAffineElement& x);

// partial order of Def (same Z component, affine Bruhat on the hats);
// cross-component comparisons are false
bool ext_bruhat_leq(const AffineData& ad, const ExtendedAffineElement& x,
                    const ExtendedAffineElement& y);

}  // namespace affq
