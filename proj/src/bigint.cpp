#include "affq/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace affq {

using u64 = uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    // careful with LLONG_MIN
    u64 mag = neg_ ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
    limbs_.push_back(mag);
}

BigInt::BigInt(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc = acc * BigInt(10) + BigInt(s[i] - '0');
    }
    *this = acc;
    if (!limbs_.empty()) neg_ = neg;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    u64 carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        u128 s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<u64>(s));
        carry = static_cast<u64>(s >> 64);
    }
    if (carry) r.push_back(carry);
    return r;
}

// requires |a| >= |b|
std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size());
    u64 borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 ai = a[i];
        u64 t = ai - bi;
        u64 borrow2 = ai < bi;
        u64 t2 = t - borrow;
        borrow2 |= t < borrow;
        r[i] = t2;
        borrow = borrow2;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        size_t k = i + b.size();
        while (carry) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on 32-bit half-limbs for simplicity of trial quotients.
void BigInt::divmod_mag(const std::vector<u64>& a64, const std::vector<u64>& b64,
                        std::vector<u64>& q64, std::vector<u64>& r64) {
    auto to32 = [](const std::vector<u64>& v) {
        std::vector<uint32_t> w;
        w.reserve(v.size() * 2);
        for (u64 x : v) {
            w.push_back(static_cast<uint32_t>(x));
            w.push_back(static_cast<uint32_t>(x >> 32));
        }
        while (!w.empty() && w.back() == 0) w.pop_back();
        return w;
    };
    auto from32 = [](const std::vector<uint32_t>& w) {
        std::vector<u64> v;
        v.reserve(w.size() / 2 + 1);
        for (size_t i = 0; i < w.size(); i += 2) {
            u64 lo = w[i];
            u64 hi = i + 1 < w.size() ? w[i + 1] : 0;
            v.push_back(lo | (hi << 32));
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };

    std::vector<uint32_t> u = to32(a64), v = to32(b64);
    if (v.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a64, b64) < 0) {
        q64.clear();
        r64 = a64;
        return;
    }
    if (v.size() == 1) {
        u64 d = v[0];
        std::vector<uint32_t> q(u.size());
        u64 rem = 0;
        for (size_t i = u.size(); i-- > 0;) {
            u64 cur = (rem << 32) | u[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        q64 = from32(q);
        r64.clear();
        if (rem) r64.push_back(rem);
        return;
    }

    // normalize so that the top limb of v has its high bit set
    int shift = 0;
    for (uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [&](const std::vector<uint32_t>& x) {
        std::vector<uint32_t> y(x.size() + 1, 0);
        for (size_t i = 0; i < x.size(); ++i) {
            y[i] |= x[i] << shift;
            if (shift) y[i + 1] = x[i] >> (32 - shift);
        }
        while (!y.empty() && y.back() == 0) y.pop_back();
        return y;
    };
    std::vector<uint32_t> un = shl(u), vn = shl(v);
    size_t n = vn.size(), m = un.size() - n;
    un.resize(un.size() + 1, 0);
    std::vector<uint32_t> q(m + 1, 0);

    for (size_t j = m + 1; j-- > 0;) {
        u64 num = (static_cast<u64>(un[j + n]) << 32) | un[j + n - 1];
        u64 qhat = num / vn[n - 1];
        u64 rhat = num % vn[n - 1];
        while (qhat >= (1ull << 32) ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= (1ull << 32)) break;
        }
        // multiply and subtract
        int64_t borrow = 0;
        u64 carry = 0;
        for (size_t i = 0; i < n; ++i) {
            u64 p = qhat * vn[i] + carry;
            carry = p >> 32;
            int64_t t = static_cast<int64_t>(un[i + j]) - static_cast<int64_t>(p & 0xFFFFFFFFull) - borrow;
            un[i + j] = static_cast<uint32_t>(t);
            borrow = t < 0 ? 1 : 0;
        }
        int64_t t = static_cast<int64_t>(un[j + n]) - static_cast<int64_t>(carry) - borrow;
        un[j + n] = static_cast<uint32_t>(t);
        if (t < 0) {
            // qhat was one too large: add back
            --qhat;
            u64 c = 0;
            for (size_t i = 0; i < n; ++i) {
                u64 s = static_cast<u64>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<uint32_t>(s);
                c = s >> 32;
            }
            un[j + n] = static_cast<uint32_t>(un[j + n] + c);
        }
        q[j] = static_cast<uint32_t>(qhat);
    }
    // denormalize remainder
    std::vector<uint32_t> r(n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t lo = un[i] >> shift;
        uint32_t hi = shift ? (un[i + 1] << (32 - shift)) : 0;
        r[i] = lo | hi;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    q64 = from32(q);
    r64 = from32(r);
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.neg_ = neg_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.neg_ = neg_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.neg_ = o.neg_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.neg_ = !r.limbs_.empty() && (neg_ != o.neg_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u64> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.neg_ = !q.limbs_.empty() && (a.neg_ != b.neg_);
    r.neg_ = !r.limbs_.empty() && a.neg_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_ll() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    u64 m = limbs_[0];
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
    if (limbs_.empty()) return 0;
    return neg_ ? -static_cast<long long>(limbs_[0]) : static_cast<long long>(limbs_[0]);
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<u64> cur = limbs_;
    std::string digits;
    while (!cur.empty()) {
        // short division by 10^18
        const u64 base = 1000000000000000000ull;
        u128 rem = 0;
        std::vector<u64> next(cur.size(), 0);
        for (size_t i = cur.size(); i-- > 0;) {
            u128 val = (rem << 64) | cur[i];
            next[i] = static_cast<u64>(val / base);
            rem = val % base;
        }
        while (!next.empty() && next.back() == 0) next.pop_back();
        u64 chunk = static_cast<u64>(rem);
        for (int d = 0; d < 18; ++d) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        cur = std::move(next);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

size_t BigInt::hash() const {
    size_t h = neg_ ? 0x9e3779b97f4a7c15ull : 0;
    for (u64 l : limbs_) h = h * 1099511628211ull + static_cast<size_t>(l);
    return h;
}

}  // namespace affq
