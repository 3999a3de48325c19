#pragma once

#include "affq/polynomial.hpp"

namespace affq {

// Element of Frac(S).  Every denominator occurring in this artifact is a
// rational content times a product of (level-zero) roots, so the denominator
// is kept factored: a positive rational content and a sorted multiset of
// positive-root indices (with signs absorbed into the content).  Sums use the
// lcm of the factor multisets, which keeps denominators from compounding.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(Polynomial num) : rs_(nullptr), num_(std::move(num)) {}
    // general constructor: factors `den` as content times roots; throws when
    // the denominator is not of that shape
    RationalFunction(const RootSystem* rs, Polynomial num, const Polynomial& den);
    RationalFunction(const RootSystem* rs, Polynomial num, Rational content,
                     std::vector<int> root_factors);

    static RationalFunction zero(int rank) { return RationalFunction(Polynomial(rank)); }
    static RationalFunction one(int rank) {
        return RationalFunction(Polynomial::constant(rank, Rational(1)));
    }

    const Polynomial& num() const { return num_; }
    const Rational& den_content() const { return den_content_; }
    const std::vector<int>& den_roots() const { return den_roots_; }
    // denominator expanded as a polynomial
    Polynomial den(const RootSystem& rs) const;
    bool is_zero() const { return num_.is_zero(); }
    bool den_trivial() const { return den_roots_.empty() && den_content_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // cancel root factors dividing the numerator and reduce the content
    RationalFunction normalized() const;
    bool is_polynomial() const;
    // numerator of the fully normalized form, valid when is_polynomial()
    Polynomial as_polynomial() const;

    std::string to_string(const RootSystem* rs = nullptr) const;

  private:
    const RootSystem* rs_ = nullptr;  // needed only when den_roots_ is nonempty
    Polynomial num_;
    Rational den_content_ = Rational(1);  // positive
    std::vector<int> den_roots_;          // sorted indices into rs->positive_roots()

    Polynomial root_poly(int idx) const;
    void fix_signs();
};

}  // namespace affq
