#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace affq {

// Arbitrary-precision signed integer, little-endian 64-bit limbs.
// Magnitudes in this project stay small (paper-scale coefficients), but
// Gaussian elimination over the rationals can blow past 64 bits, so we
// keep exactness unconditional.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Truncated division (C semantics: quotient rounds toward zero).
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    int cmp(const BigInt& o) const;
    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Value as long long; only valid when fits_ll().
    bool fits_ll() const;
    long long to_ll() const;

    std::string to_string() const;
    size_t hash() const;

  private:
    bool neg_ = false;                 // sign; zero is stored as empty, neg_ = false
    std::vector<uint64_t> limbs_;      // little-endian, no trailing zeros

    void trim();
    static int cmp_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> add_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> sub_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static std::vector<uint64_t> mul_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
    static void divmod_mag(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b,
                           std::vector<uint64_t>& q, std::vector<uint64_t>& r);
};

}  // namespace affq
