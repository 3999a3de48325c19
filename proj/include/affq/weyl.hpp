#pragma once

#include <optional>
#include <set>
#include <vector>

#include "affq/root_system.hpp"

namespace affq {

// Element of the finite Weyl group.  Canonical form is the matrix of the
// action on the coweight lattice in fundamental-coweight coordinates; the
// root- and weight-lattice matrices ride along so every action is integer
// arithmetic.  Reduced words are derived data (shortlex-minimal).
//
// Values keep a non-owning pointer to their RootSystem; the RootSystem must
// outlive every value derived from it.
class WeylElement {
  public:
    WeylElement() = default;
    static WeylElement identity(const RootSystem* rs);
    static WeylElement simple(const RootSystem* rs, int i);  // 1-based
    static WeylElement from_word(const RootSystem* rs, const std::vector<int>& word);

    const RootSystem* root_system() const { return rs_; }

    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return mat_coweight_ == o.mat_coweight_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    bool operator<(const WeylElement& o) const { return mat_coweight_ < o.mat_coweight_; }

    bool is_identity() const;

    Root act(const Root& r) const;
    Coweight act(const Coweight& c) const;
    Weight act(const Weight& w) const;
    AffineRoot act(const AffineRoot& b) const;  // level-preserving finite action

    int length() const;
    std::vector<int> reduced_word() const;  // shortlex-minimal, 1-based letters

    // positive roots sent negative; their count equals length()
    std::vector<Root> inversions() const;

  private:
    const RootSystem* rs_ = nullptr;
    IntMat mat_root_;      // action on root coords
    IntMat mat_weight_;    // action on fundamental-weight coords
    IntMat mat_coweight_;  // action on fundamental-coweight coords
    friend class WeylGroup;
};

// Eagerly enumerated finite Weyl group (|W| capped; see RootSystem::kWeylCap).
class WeylGroup {
  public:
    explicit WeylGroup(const RootSystem* rs);

    // sorted by (length, shortlex word); throws if the order exceeded the cap
    const std::vector<WeylElement>& elements() const;
    bool capped() const { return capped_; }
    size_t order() const;
    const WeylElement& longest() const;

    // minimal coset representatives of W/W_P, I_P given 1-based
    std::vector<WeylElement> min_coset_reps(const std::set<int>& I_P) const;
    // subgroup generated by {s_i : i in I_P}
    std::vector<WeylElement> parabolic_subgroup(const std::set<int>& I_P) const;

    // smallest w with w(pi_i^vee) = w0(pi_i^vee); error when i is not minuscule
    WeylElement v_of_node(int i) const;
    int f_of_node(int i) const;  // v_i(pi_i^vee) = -pi_{f(i)}^vee

    // one minimal-length representative per coset of the stabilizer of mu
    std::vector<WeylElement> stabilizer_cosets(const Coweight& mu) const;
    std::vector<Coweight> orbit(const Coweight& mu) const;

    // reflection in a (finite) root
    WeylElement reflection(const Root& alpha) const;

  private:
    const RootSystem* rs_;
    std::vector<WeylElement> elements_;
    size_t longest_index_ = 0;
    bool capped_ = false;
};

// Bruhat order via the subword criterion.
bool bruhat_leq(const WeylElement& u, const WeylElement& v);
// weak left order: u <=_L v iff l(v u^-1) + l(u) = l(v)
bool weak_left_leq(const WeylElement& u, const WeylElement& v);

}  // namespace affq
