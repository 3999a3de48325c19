#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affq/rational.hpp"
#include "affq/root_system.hpp"

namespace affq {

class WeylElement;

// Monomial over the fundamental-weight generators pi_1..pi_r.
struct Monomial {
    std::vector<int> exp;

    bool operator==(const Monomial& o) const { return exp == o.exp; }
    bool operator<(const Monomial& o) const { return exp < o.exp; }
    int degree() const;
    Monomial operator*(const Monomial& o) const;
};

// Exact sparse polynomial in S = Sym(P), rational coefficients over the
// fundamental weights.  No zero coefficients are stored.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int rank) : rank_(rank) {}
    static Polynomial constant(int rank, const Rational& c);
    static Polynomial variable(int rank, int i);  // pi_i, 1-based
    static Polynomial from_weight(const RootSystem& rs, const Weight& w);
    static Polynomial from_root(const RootSystem& rs, const Root& r);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // degree of the highest monomial, -1 for zero
    int degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

    // substitute generator i -> images[i] (0-based list of linear polys or general ones)
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // exact division; nullopt when not divisible
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // gcd of coefficient numerators over lcm of denominators, as a positive rational
    Rational content() const;

    // evaluation with all generators set to zero (the non-equivariant
    // specialization) is constant_term()

    std::string to_string(const RootSystem* rs = nullptr) const;

  private:
    int rank_ = 0;
    std::map<Monomial, Rational> terms_;
};

// level-zero Weyl action: the finite part acts, the null root is killed
Polynomial weyl_act(const WeylElement& w, const Polynomial& p);

}  // namespace affq
