#pragma once

// Unsigned arbitrary-precision integers for operation costs and budgets.
// Little-endian 32-bit limbs, normalized (no trailing zero limbs; empty = 0).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strdist {

class BigUint {
public:
    BigUint() = default;

    BigUint(uint64_t v) {  // NOLINT: implicit on purpose, costs read like ints
        if (v != 0) {
            limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
            if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
        }
    }

    static BigUint from_decimal(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty decimal literal");
        BigUint out;
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad digit in decimal literal: " + std::string(text));
            out = out.mul_small(10);
            out = out + BigUint(static_cast<uint64_t>(c - '0'));
        }
        return out;
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const { return limbs_.size() <= 2; }

    uint64_t to_u64_saturating() const {
        if (!fits_u64()) return UINT64_MAX;
        uint64_t v = 0;
        if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) v |= limbs_[0];
        return v;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

    friend bool operator<(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }
    friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint out;
        const auto& x = a.limbs_;
        const auto& y = b.limbs_;
        size_t n = std::max(x.size(), y.size());
        out.limbs_.reserve(n + 1);
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t s = carry;
            if (i < x.size()) s += x[i];
            if (i < y.size()) s += y[i];
            out.limbs_.push_back(static_cast<uint32_t>(s & 0xffffffffu));
            carry = s >> 32;
        }
        if (carry) out.limbs_.push_back(static_cast<uint32_t>(carry));
        return out;
    }

    // Requires a >= b.
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (a < b) throw std::underflow_error("BigUint subtraction underflow");
        BigUint out;
        out.limbs_.resize(a.limbs_.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                        (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
            borrow = 0;
            if (d < 0) {
                d += (1LL << 32);
                borrow = 1;
            }
            out.limbs_[i] = static_cast<uint32_t>(d);
        }
        out.normalize();
        return out;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        if (a.is_zero() || b.is_zero()) return {};
        BigUint out;
        out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = out.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                out.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            out.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        out.normalize();
        return out;
    }

    BigUint& operator+=(const BigUint& o) { return *this = *this + o; }

    // Shift-subtract long division; quotient and remainder.
    static std::pair<BigUint, BigUint> divmod(const BigUint& num, const BigUint& den) {
        if (den.is_zero()) throw std::domain_error("BigUint division by zero");
        if (num < den) return {BigUint{}, num};
        size_t nbits = num.bit_length();
        BigUint q, r;
        for (size_t i = nbits; i-- > 0;) {
            r = r.shl1();
            if (num.bit(i)) r = r + BigUint(1);
            if (r >= den) {
                r = r - den;
                q.set_bit(i);
            }
        }
        q.normalize();
        return {q, r};
    }

    friend BigUint operator/(const BigUint& a, const BigUint& b) { return divmod(a, b).first; }

    static BigUint pow(const BigUint& base, uint64_t exp) {
        BigUint out(1);
        for (uint64_t i = 0; i < exp; ++i) out = out * base;
        return out;
    }

    std::string to_decimal() const {
        if (is_zero()) return "0";
        std::string out;
        std::vector<uint32_t> work = limbs_;
        while (!work.empty()) {
            // divide work by 10^9, collecting the remainder
            uint64_t rem = 0;
            for (size_t i = work.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (!work.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        return out;
    }

private:
    std::vector<uint32_t> limbs_;

    void normalize() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    BigUint mul_small(uint32_t m) const {
        BigUint out;
        uint64_t carry = 0;
        out.limbs_.reserve(limbs_.size() + 1);
        for (uint32_t limb : limbs_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            out.limbs_.push_back(static_cast<uint32_t>(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        if (carry) out.limbs_.push_back(static_cast<uint32_t>(carry));
        out.normalize();
        return out;
    }

    size_t bit_length() const {
        if (limbs_.empty()) return 0;
        uint32_t top = limbs_.back();
        size_t bits = (limbs_.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool bit(size_t i) const {
        size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }

    void set_bit(size_t i) {
        size_t limb = i / 32;
        if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
        limbs_[limb] |= (1u << (i % 32));
    }

    BigUint shl1() const {
        BigUint out;
        out.limbs_.reserve(limbs_.size() + 1);
        uint32_t carry = 0;
        for (uint32_t limb : limbs_) {
            out.limbs_.push_back((limb << 1) | carry);
            carry = limb >> 31;
        }
        if (carry) out.limbs_.push_back(carry);
        return out;
    }
};

// Operation costs and budgets are unbounded non-negative integers.
using Cost = BigUint;

}  // namespace strdist
