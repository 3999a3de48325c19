#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affq/rational.hpp"

namespace affq {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;  // row-major, square

// Cartan type: series letter + rank, e.g. "A3", "B2", "G2".
struct CartanType {
    char series = 'A';
    int rank = 0;

    static CartanType parse(const std::string& s);
    std::string to_string() const { return std::string(1, series) + std::to_string(rank); }
};

// Root of the finite system, stored as integer coefficients over the simple
// roots (an element of Q).
struct Root {
    IntVec coeffs;

    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
    bool operator<(const Root& o) const { return coeffs < o.coeffs; }
    bool is_positive() const;
    Root operator-() const;
};

// Real or imaginary affine root: finite part in Q plus a multiple of the
// null root.  Real iff the finite part is nonzero.
struct AffineRoot {
    IntVec finite;   // simple-root coordinates, may be all zero
    long long level = 0;

    bool operator==(const AffineRoot& o) const { return finite == o.finite && level == o.level; }
    bool operator<(const AffineRoot& o) const {
        if (level != o.level) return level < o.level;
        return finite < o.finite;
    }
    bool is_real() const;
    bool is_positive() const;
    AffineRoot operator-() const;
};

// Coweight in fundamental-coweight coordinates, so that the i-th coordinate
// is the pairing with the simple root alpha_i.  P-check against Q is exact
// integer linear algebra through the Cartan matrix.
struct Coweight {
    IntVec coords;

    bool operator==(const Coweight& o) const { return coords == o.coords; }
    bool operator<(const Coweight& o) const { return coords < o.coords; }
    bool is_zero() const;
    Coweight operator+(const Coweight& o) const;
    Coweight operator-(const Coweight& o) const;
    Coweight operator-() const;
    // all pairings with simple roots are <= 0
    bool is_antidominant() const;
    bool is_dominant() const;
};

// Weight in fundamental-weight coordinates.
struct Weight {
    IntVec coords;

    bool operator==(const Weight& o) const { return coords == o.coords; }
    Weight operator+(const Weight& o) const;
    Weight operator-() const;
};

// Cartan datum of finite type plus the derived lattice machinery used by the
// rest of the library.  Immutable after construction; safe for concurrent
// reads.  Values handed out by the library (Weyl elements, ring elements)
// keep non-owning pointers, so the RootSystem must outlive them.
class RootSystem {
  public:
    // Shipped series (A1..A4, B2, B3, C3, D4, G2).
    static std::shared_ptr<const RootSystem> build(const CartanType& type);
    // Generic validation path for an arbitrary finite-type Cartan matrix.
    static std::shared_ptr<const RootSystem> build(const IntMat& cartan, std::string name = "custom");

    int rank() const { return rank_; }
    const std::string& name() const { return name_; }
    const IntMat& cartan() const { return cartan_; }
    // a[i][j] = <alpha_j, alpha_i^vee>, 0-based
    long long a(int i, int j) const { return cartan_[i][j]; }

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    // index into positive_roots(); -1 when not a positive root
    int positive_root_index(const Root& r) const;
    const Root& highest_root() const { return highest_root_; }
    const std::set<int>& minuscule_nodes() const { return minuscule_; }  // 1-based

    // ---- lattice arithmetic ----
    Root simple_root(int i) const;        // 1-based
    Coweight simple_coroot(int i) const;  // 1-based, fundamental-coweight coords
    Coweight fundamental_coweight(int i) const;
    Weight fundamental_weight(int i) const;
    Weight root_to_weight(const Root& r) const;
    // inverse of root_to_weight; nullopt when the weight is not in Q
    std::optional<Root> weight_to_root(const Weight& w) const;

    // coroot of a root (exact, via the symmetrized form)
    Coweight coroot(const Root& r) const;

    // <alpha, mu^vee> for alpha in Q: integer
    long long pairing_root(const Root& alpha, const Coweight& mu) const;
    // <lambda, mu^vee> for lambda in P: rational in general
    Rational pairing(const Weight& lambda, const Coweight& mu) const;

    // coordinates of mu over the simple coroots (rational); integral iff mu in Q^vee
    std::vector<Rational> coroot_coords(const Coweight& mu) const;
    bool in_coroot_lattice(const Coweight& mu) const;

    // coordinates of a weight over the simple roots (rational)
    std::vector<Rational> root_coords(const Weight& w) const;

    // sum of all positive coroots: a strictly dominant element of Q^vee
    Coweight two_rho_coweight() const;
    // sum of positive roots
    Weight two_rho() const;

    const AffineRoot affine_simple_root(int i) const;  // i in 0..rank
    AffineRoot null_root() const;

    ~RootSystem();

  private:
    RootSystem() = default;
    void finish_construction();

    int rank_ = 0;
    std::string name_;
    IntMat cartan_;
    std::vector<long long> symmetrizer_;  // d_i with d_i a_ij = d_j a_ji
    std::vector<Root> positive_roots_;
    Root highest_root_;
    std::set<int> minuscule_;

    // cached Weyl group enumeration (built on construction when |W| <= cap)
    friend class WeylGroup;
    mutable std::unique_ptr<class WeylGroup> weyl_;
    mutable std::unique_ptr<class AffineData> affine_;

  public:
    const WeylGroup& weyl() const;
    const AffineData& affine() const;  // Z table and affine caches
    static constexpr size_t kWeylCap = 1152;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace affq
