#pragma once

#include "affq/nilhecke.hpp"
#include "affq/rational_function.hpp"

namespace affq {

// Brute-force presentation of the same algebra over Frac(S) on the group
// symbols delta_w.  Used as an independent oracle for the A-basis arithmetic;
// production code never produces fractions.
class DeltaElement {
  public:
    DeltaElement() = default;
    explicit DeltaElement(const RootSystem* rs) : rs_(rs) {}

    static DeltaElement zero(const RootSystem* rs) { return DeltaElement(rs); }
    static DeltaElement unit(const RootSystem* rs);
    static DeltaElement basis(const ExtendedAffineElement& x);
    static DeltaElement basis(const ExtendedAffineElement& x, const RationalFunction& f);

    const RootSystem* root_system() const { return rs_; }
    bool is_zero() const;
    const std::map<ExtendedAffineElement, RationalFunction>& terms() const { return terms_; }

    void add_term(const ExtendedAffineElement& x, const RationalFunction& f);

    DeltaElement operator+(const DeltaElement& o) const;
    DeltaElement operator-(const DeltaElement& o) const;
    // delta_u f = u(f) delta_u
    DeltaElement operator*(const DeltaElement& o) const;
    DeltaElement scale(const RationalFunction& f) const;       // left multiplication by f
    DeltaElement scale_right(const RationalFunction& f) const;  // right multiplication by f
    DeltaElement& operator+=(const DeltaElement& o) { return *this = *this + o; }

    bool operator==(const DeltaElement& o) const;
    bool operator!=(const DeltaElement& o) const { return !(*this == o); }

  private:
    const RootSystem* rs_ = nullptr;
    std::map<ExtendedAffineElement, RationalFunction> terms_;
};

// workspace for repeated embeddings (per-thread, like NilCache)
struct DeltaCache {
    using Map = std::map<ExtendedAffineElement, DeltaElement>;
    Map basis;  // oracle expansion of each A~ basis symbol
};

// ring embedding of the A-basis into the oracle
DeltaElement to_delta_oracle(const NilHeckeElement& a, DeltaCache* cache = nullptr);
// inverse direction; throws when the element does not lie in the S-span of
// the A~ basis
NilHeckeElement from_delta_oracle(const DeltaElement& d, NilCache* cache = nullptr);

// level-zero action of a group element on a rational function
RationalFunction oracle_act(const ExtendedAffineElement& x, const RationalFunction& f);

}  // namespace affq
